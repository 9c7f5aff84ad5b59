//! Pointwise curvature algebra on the shallow 2x2 curvature tensor.

use crate::error::{Error, Result};
use crate::math::{cos, hypot, sin, FRAC_PI_2};

/// Width-to-radius ratio above which a tube strip leaves the small fold angle regime.
pub const SHALLOW_WIDTH_RATIO: f64 = 0.2;

/// Components of the symmetric curvature tensor at a surface point, in `(x, y)`
/// surface coordinates. `kxy` is left-handed positive.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurvatureState {
    pub kxx: f64,
    pub kyy: f64,
    pub kxy: f64,
}

impl CurvatureState {
    pub fn new(kxx: f64, kyy: f64, kxy: f64) -> Result<Self> {
        for (name, v) in [("kxx", kxx), ("kyy", kyy), ("kxy", kxy)] {
            if !v.is_finite() {
                return Err(Error::param(name, v, "a finite curvature"));
            }
        }
        Ok(CurvatureState { kxx, kyy, kxy })
    }

    /// Same tensor expressed with the `x` and `y` axes exchanged.
    pub fn swap_axes(self) -> Self {
        CurvatureState {
            kxx: self.kyy,
            kyy: self.kxx,
            kxy: self.kxy,
        }
    }

    /// Squared Frobenius norm, `kxx² + kyy² + 2 kxy²`.
    pub fn norm_squared(self) -> f64 {
        self.kxx * self.kxx + self.kyy * self.kyy + 2.0 * self.kxy * self.kxy
    }
}

/// Mohr's circle of curvature versus twist.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MohrCircle {
    pub center: f64,
    pub radius: f64,
}

impl MohrCircle {
    /// `(center + radius, center - radius)`.
    pub fn principal(self) -> (f64, f64) {
        (self.center + self.radius, self.center - self.radius)
    }

    /// `center² - radius²`.
    pub fn gaussian(self) -> f64 {
        self.center * self.center - self.radius * self.radius
    }
}

/// Creased-tube geometry: cylinder radius `a`, line angle `alpha` measured from
/// the tube axis, and strip width `h` normal to the lines.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TubeSpec {
    pub a: f64,
    pub alpha: f64,
    pub h: f64,
}

impl TubeSpec {
    pub fn new(a: f64, alpha: f64, h: f64) -> Result<Self> {
        let spec = TubeSpec { a, alpha, h };
        spec.validate()?;
        if !spec.is_shallow() {
            log::warn!(
                "tube strip width ratio h/a = {:.3} exceeds {SHALLOW_WIDTH_RATIO}; small fold angle results degrade",
                h / a
            );
        }
        Ok(spec)
    }

    /// Tube whose strip width closes `n_strips` strips exactly around the hoop:
    /// `h = 2 pi a cos(alpha) / n_strips`.
    pub fn for_strips(a: f64, alpha: f64, n_strips: usize) -> Result<Self> {
        if n_strips < 3 {
            return Err(Error::Resolution {
                name: "n_strips",
                value: n_strips,
                min: 3,
            });
        }
        TubeSpec::new(a, alpha, closing_strip_width(a, alpha, n_strips))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::param("a", self.a, "a finite radius > 0"));
        }
        if !(0.0..=FRAC_PI_2).contains(&self.alpha) {
            return Err(Error::param("alpha", self.alpha, "an angle in [0, pi/2]"));
        }
        if !(self.h > 0.0 && self.h.is_finite()) {
            return Err(Error::param("h", self.h, "a finite width > 0"));
        }
        Ok(())
    }

    pub fn width_ratio(&self) -> f64 {
        self.h / self.a
    }

    /// Whether `h/a` is within the small fold angle regime.
    pub fn is_shallow(&self) -> bool {
        self.width_ratio() <= SHALLOW_WIDTH_RATIO
    }
}

pub(crate) fn closing_strip_width(a: f64, alpha: f64, n_strips: usize) -> f64 {
    crate::math::TAU * a * cos(alpha) / n_strips as f64
}

/// Curvatures of the smooth cylinder relative to axes along and across the lines.
pub fn cylinder_curvatures(spec: TubeSpec) -> Result<CurvatureState> {
    spec.validate()?;
    let (s, c) = (sin(spec.alpha), cos(spec.alpha));
    Ok(CurvatureState {
        kxx: s * s / spec.a,
        kyy: c * c / spec.a,
        kxy: s * c / spec.a,
    })
}

/// Strip state of the twisted-prismatic tube: flat across the lines, otherwise
/// as on the cylinder.
pub fn prismatic_curvatures(spec: TubeSpec) -> Result<CurvatureState> {
    let cyl = cylinder_curvatures(spec)?;
    Ok(CurvatureState { kyy: 0.0, ..cyl })
}

pub fn mohr_circle(state: CurvatureState) -> MohrCircle {
    MohrCircle {
        center: 0.5 * (state.kxx + state.kyy),
        radius: hypot(state.kxy, 0.5 * (state.kxx - state.kyy)),
    }
}

/// Principal curvatures, largest first.
pub fn principal_curvatures(state: CurvatureState) -> (f64, f64) {
    mohr_circle(state).principal()
}

/// Determinant of the curvature tensor.
pub fn gaussian_curvature(state: CurvatureState) -> f64 {
    state.kxx * state.kyy - state.kxy * state.kxy
}

/// Gaussian curvature of a prismatic strip times its width:
/// `-(h/a²) sin²(alpha) cos²(alpha)`.
pub fn strip_specific_curvature(spec: TubeSpec) -> Result<f64> {
    Ok(spec.h * gaussian_curvature(prismatic_curvatures(spec)?))
}
