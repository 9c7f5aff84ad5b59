//! Solid-angle laws for twisted and curved creases.
//!
//! Spherical images are measured on the unit sphere with azimuth along the
//! crease and elevation across it. A zone between elevations `lo` and `hi`
//! spanning azimuth `dphi` has area `dphi * (sin(hi) - sin(lo))`; every closed
//! form below is that area in product form.

use crate::curvature::{strip_specific_curvature, TubeSpec};
use crate::error::{Error, Result};
use crate::math::{abs, cos, sin, FRAC_PI_2, PI};

/// Largest patch extent (radians) for which the twisted-patch image stays shallow.
pub const SHALLOW_EXTENT: f64 = 0.5;

/// Half fold angle above which the twisted-crease `cos(mu)` factor is outside
/// the small-rotation guarantee.
pub const SHALLOW_FOLD: f64 = 0.3;

/// Radius of curvature along a crease.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum CreaseRadius {
    Finite(f64),
    /// Straight crease.
    Straight,
}

impl CreaseRadius {
    /// Curvature `1/R` along the crease; exactly zero when straight.
    pub fn curvature(self) -> f64 {
        match self {
            CreaseRadius::Finite(r) => 1.0 / r,
            CreaseRadius::Straight => 0.0,
        }
    }
}

/// A single crease: radius along it, half fold angle `mu`, and twist rate.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CreaseSpec {
    pub radius: CreaseRadius,
    pub mu: f64,
    pub twist: f64,
}

impl CreaseSpec {
    pub fn new(radius: CreaseRadius, mu: f64, twist: f64) -> Result<Self> {
        let spec = CreaseSpec { radius, mu, twist };
        spec.validate()?;
        Ok(spec)
    }

    pub fn curved(radius: f64, mu: f64) -> Result<Self> {
        Self::new(CreaseRadius::Finite(radius), mu, 0.0)
    }

    pub fn straight(mu: f64) -> Result<Self> {
        Self::new(CreaseRadius::Straight, mu, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        if let CreaseRadius::Finite(r) = self.radius {
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::param(
                    "R",
                    r,
                    "a finite radius > 0 (use Straight for a straight crease)",
                ));
            }
        }
        check_fold(self.mu)?;
        if !self.twist.is_finite() {
            return Err(Error::param("twist", self.twist, "a finite twist rate"));
        }
        Ok(())
    }

    /// Whether the half fold angle is small enough for the shallow results.
    pub fn is_shallow(&self) -> bool {
        self.mu <= SHALLOW_FOLD
    }
}

fn check_fold(mu: f64) -> Result<()> {
    if !(0.0..FRAC_PI_2).contains(&mu) {
        return Err(Error::param("mu", mu, "a half fold angle in [0, pi/2)"));
    }
    Ok(())
}

fn check_extent(name: &'static str, v: f64) -> Result<()> {
    if !(v >= 0.0 && v.is_finite()) {
        return Err(Error::param(name, v, "a finite extent >= 0"));
    }
    if v > SHALLOW_EXTENT {
        log::warn!("{name} = {v} exceeds the shallow extent {SHALLOW_EXTENT}");
    }
    Ok(())
}

/// Spherical image of a small patch.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SphericalPatchImage {
    /// Azimuthal extent.
    pub dxi: f64,
    /// Elevation extent (zero for a curved crease, whose elevation span is `2 mu`).
    pub dgamma: f64,
    pub mu: f64,
    /// Solid angle, negative when the image reverses the cyclic order of normals.
    pub signed_area: f64,
}

impl SphericalPatchImage {
    /// Uniformly twisted patch: reversed orientation, area `-dxi * 2 sin(dgamma/2)`.
    pub fn twisted_patch(dxi: f64, dgamma: f64) -> Result<Self> {
        Self::twisted_crease(dxi, dgamma, 0.0)
    }

    /// Twisted patch folded along its principal twist axis by `±mu`. The two
    /// halves of the image shift by `±mu` in elevation.
    pub fn twisted_crease(dxi: f64, dgamma: f64, mu: f64) -> Result<Self> {
        check_extent("dxi", dxi)?;
        check_extent("dgamma", dgamma)?;
        check_fold(mu)?;
        Ok(SphericalPatchImage {
            dxi,
            dgamma,
            mu,
            signed_area: -dxi * 2.0 * sin(0.5 * dgamma) * cos(mu),
        })
    }

    /// Patch spanning a curved crease: same orientation, area `dxi * 2 sin(mu)`.
    /// The patch width does not enter.
    pub fn curved_crease(dxi: f64, mu: f64) -> Result<Self> {
        if !(dxi >= 0.0 && dxi.is_finite()) {
            return Err(Error::param("dxi", dxi, "a finite extent >= 0"));
        }
        check_fold(mu)?;
        Ok(SphericalPatchImage {
            dxi,
            dgamma: 0.0,
            mu,
            signed_area: dxi * 2.0 * sin(mu),
        })
    }
}

pub fn twisted_patch_solid_angle(dxi: f64, dgamma: f64) -> Result<f64> {
    Ok(SphericalPatchImage::twisted_patch(dxi, dgamma)?.signed_area)
}

pub fn twisted_crease_solid_angle(dxi: f64, dgamma: f64, mu: f64) -> Result<f64> {
    Ok(SphericalPatchImage::twisted_crease(dxi, dgamma, mu)?.signed_area)
}

pub fn curved_crease_patch_solid_angle(dxi: f64, mu: f64) -> Result<f64> {
    Ok(SphericalPatchImage::curved_crease(dxi, mu)?.signed_area)
}

/// Solid angle per unit crease length, `2 sin(mu) / R`. Twist does not enter.
pub fn crease_specific_curvature(spec: CreaseSpec) -> Result<f64> {
    spec.validate()?;
    Ok(match spec.radius {
        CreaseRadius::Straight => 0.0,
        CreaseRadius::Finite(r) => 2.0 * sin(spec.mu) / r,
    })
}

/// Total fold angle `2 mu = (h/a) cos²(alpha)` across each tube crease.
pub fn tube_crease_fold_angle(spec: TubeSpec) -> Result<f64> {
    spec.validate()?;
    let c = cos(spec.alpha);
    Ok(spec.h / spec.a * c * c)
}

/// Strip versus crease specific curvature of a twisted-prismatic tube.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BalanceReport {
    pub strip_term: f64,
    pub crease_term: f64,
    /// `strip_term + crease_term`.
    pub residual: f64,
    pub relative_residual: f64,
}

pub fn tube_balance(spec: TubeSpec) -> Result<BalanceReport> {
    let strip_term = strip_specific_curvature(spec)?;
    let s = sin(spec.alpha);
    let half_fold = 0.5 * tube_crease_fold_angle(spec)?;
    let crease_term = 2.0 * (s * s / spec.a) * sin(half_fold);
    let residual = strip_term + crease_term;
    let scale = abs(strip_term).max(abs(crease_term));
    let relative_residual = if scale == 0.0 {
        0.0
    } else {
        abs(residual) / scale
    };
    Ok(BalanceReport {
        strip_term,
        crease_term,
        residual,
        relative_residual,
    })
}

/// Leading-order bound on the relative balance residual, `((h/a) cos²(alpha))² / 24`,
/// from the Taylor remainder of `sin x - x`.
pub fn balance_taylor_bound(spec: TubeSpec) -> Result<f64> {
    let fold = tube_crease_fold_angle(spec)?;
    Ok(fold * fold / 24.0)
}

/// Solid angle per unit length along one seam of an `n`-gore sphere at latitude
/// `theta`: `2 sin((pi/n) cos(theta)) / R`.
pub fn gore_crease_rate(n: usize, theta: f64, radius: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::Resolution {
            name: "n",
            value: n,
            min: 3,
        });
    }
    if !(abs(theta) <= FRAC_PI_2) {
        return Err(Error::param("theta", theta, "a latitude in [-pi/2, pi/2]"));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::param("R", radius, "a finite radius > 0"));
    }
    let mu = PI / n as f64 * cos(theta);
    Ok(2.0 * sin(mu) / radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    /// Zone area by integrating the ring element `2 pi cos(theta) dtheta`,
    /// scaled by the azimuthal fraction.
    fn zone_oracle(lo: f64, hi: f64, dphi: f64) -> f64 {
        integrate(|t| 2.0 * PI * cos(t), lo, hi, 1e-14).unwrap().value * dphi / (2.0 * PI)
    }

    #[test]
    fn twisted_patch_examples() {
        assert_eq!(twisted_patch_solid_angle(0.0, 0.3).unwrap(), 0.0);
        let v = twisted_patch_solid_angle(0.1, 0.1).unwrap();
        assert_relative_eq!(v, -0.00999583, epsilon = 1e-8);
        assert_relative_eq!(v, -zone_oracle(-0.05, 0.05, 0.1), max_relative = 1e-12);
        let v = twisted_patch_solid_angle(0.2, 0.2).unwrap();
        assert_relative_eq!(v, -0.0399334, epsilon = 1e-7);
        assert!((v + 0.04).abs() <= 0.2 * 0.2f64.powi(3) / 24.0 * 1.01);
    }

    #[test]
    fn negative_extents_are_rejected() {
        assert!(twisted_patch_solid_angle(-0.1, 0.1).is_err());
        assert!(twisted_patch_solid_angle(0.1, -0.1).is_err());
        assert!(twisted_crease_solid_angle(0.1, 0.1, -0.1).is_err());
        assert!(curved_crease_patch_solid_angle(-0.1, 0.1).is_err());
        assert!(curved_crease_patch_solid_angle(0.1, FRAC_PI_2).is_err());
    }

    #[test]
    fn twisted_crease_examples() {
        let flat = twisted_patch_solid_angle(0.1, 0.1).unwrap();
        assert_eq!(twisted_crease_solid_angle(0.1, 0.1, 0.0).unwrap(), flat);
        let v = twisted_crease_solid_angle(0.1, 0.1, 0.2).unwrap();
        assert_relative_eq!(v, -0.0097966, epsilon = 1e-7);
        // The two sheared halves of the image, integrated separately.
        let halves = -zone_oracle(-0.05 + 0.2, 0.05 + 0.2, 0.05) - zone_oracle(-0.05 - 0.2, 0.05 - 0.2, 0.05);
        assert_relative_eq!(v, halves, max_relative = 1e-12);
        let small = twisted_crease_solid_angle(0.1, 0.1, 0.01).unwrap();
        assert!(((small - flat) / flat).abs() <= 5e-5);
    }

    #[test]
    fn curved_crease_examples() {
        let v = curved_crease_patch_solid_angle(0.01, PI / 6.0).unwrap();
        assert_relative_eq!(v, 0.01, max_relative = 1e-14);
        assert_relative_eq!(v, zone_oracle(-PI / 6.0, PI / 6.0, 0.01), max_relative = 1e-12);
        assert_eq!(curved_crease_patch_solid_angle(0.5, 0.0).unwrap(), 0.0);
        let v = curved_crease_patch_solid_angle(0.1, FRAC_PI_2 - 1e-9).unwrap();
        assert_relative_eq!(v, 0.2, epsilon = 1e-12);
    }

    #[test]
    fn specific_curvature_examples() {
        for twist in [-10.0, 0.0, 3.5, 10.0] {
            let s = CreaseSpec::new(CreaseRadius::Finite(2.0), PI / 6.0, twist).unwrap();
            assert_relative_eq!(crease_specific_curvature(s).unwrap(), 0.5, max_relative = 1e-15);
        }
        assert_eq!(
            crease_specific_curvature(CreaseSpec::straight(0.4).unwrap()).unwrap(),
            0.0
        );
        assert_eq!(
            crease_specific_curvature(CreaseSpec::curved(1.0, 0.0).unwrap()).unwrap(),
            0.0
        );
    }

    #[test]
    fn crease_spec_validation() {
        assert!(CreaseSpec::curved(0.0, 0.1).is_err());
        assert!(CreaseSpec::curved(f64::INFINITY, 0.1).is_err());
        assert!(CreaseSpec::curved(1.0, FRAC_PI_2).is_err());
        assert!(CreaseSpec::new(CreaseRadius::Straight, 0.1, f64::NAN).is_err());
        assert!(CreaseSpec::curved(1.0, 0.3).unwrap().is_shallow());
        assert!(!CreaseSpec::curved(1.0, 0.31).unwrap().is_shallow());
    }

    #[test]
    fn width_independence_of_curved_crease_rate() {
        // Per-length rate from patches of extent dxi and dxi/10 along a crease of radius R.
        let (radius, mu) = (2.0, 0.4);
        let rate = |dxi: f64| curved_crease_patch_solid_angle(dxi, mu).unwrap() / (radius * dxi);
        assert_relative_eq!(rate(0.1), rate(0.01), max_relative = 1e-14);
        assert_relative_eq!(
            rate(0.1),
            crease_specific_curvature(CreaseSpec::curved(radius, mu).unwrap()).unwrap(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn small_twist_recovers_gaussian_curvature() {
        // dxi = kxy b, dgamma = kxy a; dividing by ab gives -kxy².
        let (kxy, a, b) = (0.3, 1.0, 0.5);
        let mut prev = f64::INFINITY;
        for scale in [1.0, 0.1, 0.01, 0.001] {
            let k = twisted_patch_solid_angle(kxy * b * scale, kxy * a * scale).unwrap()
                / (a * b * scale * scale);
            let err = (k + kxy * kxy).abs();
            assert!(err < prev);
            prev = err;
        }
        assert!(prev < 1e-8);
    }

    #[test]
    fn fold_angle_examples() {
        let f = tube_crease_fold_angle(TubeSpec::new(1.0, 0.0, 0.1).unwrap()).unwrap();
        assert_relative_eq!(f, 0.1, max_relative = 1e-15);
        let f = tube_crease_fold_angle(TubeSpec::new(1.0, FRAC_PI_2, 0.1).unwrap()).unwrap();
        assert!(f.abs() < 1e-33);
        let f = tube_crease_fold_angle(TubeSpec::new(2.0, PI / 4.0, 0.2).unwrap()).unwrap();
        assert_relative_eq!(f, 0.05, max_relative = 1e-14);
    }

    #[test]
    fn balance_examples() {
        let r = tube_balance(TubeSpec::new(1.0, PI / 4.0, 0.05).unwrap()).unwrap();
        assert_relative_eq!(r.strip_term, -0.0125, max_relative = 1e-14);
        // sin(0.0125) = 0.0125 - 0.0125³/6 + ...
        assert_relative_eq!(r.crease_term, 0.012_499_674_48, epsilon = 1e-11);
        assert_relative_eq!(r.residual, -0.0125f64.powi(3) / 6.0, max_relative = 1e-4);
        assert_eq!(r.residual, r.strip_term + r.crease_term);

        let r = tube_balance(TubeSpec::new(1.0, 0.0, 0.1).unwrap()).unwrap();
        assert_eq!((r.strip_term, r.crease_term, r.residual, r.relative_residual), (0.0, 0.0, 0.0, 0.0));

        let r1 = tube_balance(TubeSpec::new(1.0, PI / 3.0, 0.04).unwrap()).unwrap();
        let r2 = tube_balance(TubeSpec::new(1.0, PI / 3.0, 0.02).unwrap()).unwrap();
        let ratio = r1.residual / r2.residual;
        assert!((ratio - 8.0).abs() <= 0.4, "ratio {ratio}");
    }

    #[test]
    fn gore_rate_examples() {
        assert_relative_eq!(gore_crease_rate(8, 0.0, 1.0).unwrap(), 0.765367, epsilon = 1e-6);
        assert!(gore_crease_rate(8, FRAC_PI_2, 1.0).unwrap().abs() < 1e-16);
        // sin(x)/x - 1 ~ -x²/6 = -1.64e-6 at x = pi/1000.
        let v = gore_crease_rate(1000, 0.0, 1.0).unwrap();
        let lin = 2.0 * PI / 1000.0;
        assert!(((v - lin) / lin).abs() < 2e-6);
        assert_relative_eq!((v - lin) / lin, -(PI / 1000.0f64).powi(2) / 6.0, max_relative = 1e-5);
        assert!(gore_crease_rate(2, 0.0, 1.0).is_err());
        assert!(gore_crease_rate(8, 2.0, 1.0).is_err());
        assert!(gore_crease_rate(8, 0.0, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn twist_never_changes_crease_curvature(r in 0.01f64..100.0, mu in 0.0f64..1.5, t in -100.0f64..100.0) {
            let base = crease_specific_curvature(CreaseSpec::curved(r, mu).unwrap()).unwrap();
            let twisted = crease_specific_curvature(CreaseSpec::new(CreaseRadius::Finite(r), mu, t).unwrap()).unwrap();
            prop_assert_eq!(base.to_bits(), twisted.to_bits());
        }

        #[test]
        fn twisted_crease_is_cos_mu_scaled(dxi in 0.0f64..0.5, dg in 0.0f64..0.5, mu in 0.0f64..1.5) {
            let flat = twisted_patch_solid_angle(dxi, dg).unwrap();
            prop_assert_eq!(twisted_crease_solid_angle(dxi, dg, mu).unwrap(), flat * cos(mu));
        }

        #[test]
        fn balance_within_taylor_bound(a in 0.1f64..10.0, alpha in 0.05f64..1.5, ratio in 1e-3f64..0.2) {
            let spec = TubeSpec::new(a, alpha, ratio * a).unwrap();
            let r = tube_balance(spec).unwrap();
            prop_assert!(r.relative_residual <= balance_taylor_bound(spec).unwrap() * (1.0 + 1e-6) + 1e-14);
        }
    }
}
