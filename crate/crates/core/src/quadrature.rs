//! Adaptive one-dimensional integration with error control.
//!
//! Global adaptive Gauss-Kronrod (7/15): the interval with the largest error
//! estimate is bisected until the summed estimate meets the tolerance. The
//! subdivision order depends only on the inputs, so results are reproducible.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use crate::crease::gore_crease_rate;
use crate::error::{Error, Result};
use crate::math::{abs, sin, FRAC_PI_2, PI};
use crate::surface::{GoreSphereSpec, MudguardSpec};

/// Default absolute tolerance for unit-scale integrands.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Hard cap on integrand evaluations.
pub const MAX_EVALUATIONS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kron += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment {
        lo,
        hi,
        value: kron * half,
        error: abs((kron - gauss) * half),
    }
}

/// Integrates `f` over `[lo, hi]` to an absolute tolerance `tol`.
///
/// On hitting [`MAX_EVALUATIONS`] the best estimate is returned inside
/// [`Error::QuadratureNonConvergence`].
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadratureResult> {
    if !(tol > 0.0) {
        return Err(Error::param("tol", tol, "a tolerance > 0"));
    }
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::param("bounds", if lo.is_finite() { hi } else { lo }, "finite bounds"));
    }
    if lo == hi {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let first = kronrod(&f, lo, hi);
    let mut evaluations = 15;
    // Running error total for the stopping test; exact totals are recomputed
    // in interval order whenever it claims convergence.
    let mut running_error = first.error;
    let mut heap = BinaryHeap::new();
    check_finite(&first)?;
    heap.push(first);

    loop {
        if running_error <= tol || evaluations + 30 > MAX_EVALUATIONS {
            let (value, error) = totals(&heap);
            let result = QuadratureResult {
                value,
                error_estimate: error,
                evaluations,
            };
            if error <= tol {
                return Ok(result);
            }
            if evaluations + 30 > MAX_EVALUATIONS {
                return Err(Error::QuadratureNonConvergence { best: result });
            }
            running_error = error;
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // Interval exhausted at floating point resolution.
            heap.push(worst);
            let (value, error) = totals(&heap);
            return Err(Error::QuadratureNonConvergence {
                best: QuadratureResult {
                    value,
                    error_estimate: error,
                    evaluations,
                },
            });
        }
        let left = kronrod(&f, worst.lo, mid);
        let right = kronrod(&f, mid, worst.hi);
        check_finite(&left)?;
        check_finite(&right)?;
        running_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        evaluations += 30;
    }
}

fn check_finite(s: &Segment) -> Result<()> {
    if s.value.is_finite() && s.error.is_finite() {
        Ok(())
    } else {
        Err(Error::param("f", s.value, "an integrand finite on [lo, hi]"))
    }
}

fn totals(heap: &BinaryHeap<Segment>) -> (f64, f64) {
    // Sum in interval order so the result does not depend on heap layout.
    let mut segs: alloc::vec::Vec<&Segment> = heap.iter().collect();
    segs.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    (
        crate::math::sum(segs.iter().map(|s| s.value)),
        crate::math::sum(segs.iter().map(|s| s.error)),
    )
}

/// Mudguard band total solid angle, by quadrature and in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MudguardTotal {
    /// Hoop length `2 pi R` times the integrated Gaussian curvature across the band.
    pub quadrature: QuadratureResult,
    /// `4 pi R sin(mu) / (R - r (1 - cos mu))`.
    pub closed_form: f64,
    /// Vanishing-`r` limit `4 pi sin(mu)`.
    pub crease_limit: f64,
}

impl MudguardTotal {
    pub fn relative_gap(&self) -> f64 {
        abs(self.quadrature.value - self.closed_form) / abs(self.closed_form)
    }
}

pub fn mudguard_total(spec: &MudguardSpec) -> Result<MudguardTotal> {
    spec.validate()?;
    let r = spec.r;
    // Transverse curvature 1/r times the swept curvature, over the arc element r de.
    let integrand = |eps: f64| (1.0 / r) * spec.swept_curvature(eps) * r;
    let q = integrate(integrand, -spec.mu, spec.mu, DEFAULT_TOL * 1e-2)?;
    let hoop = 2.0 * PI * spec.radius;
    Ok(MudguardTotal {
        quadrature: QuadratureResult {
            value: hoop * q.value,
            error_estimate: hoop * q.error_estimate,
            evaluations: q.evaluations,
        },
        closed_form: spec.closed_form_total(),
        crease_limit: 4.0 * PI * sin(spec.mu),
    })
}

/// `n * ∫ 2 sin((pi/n) cos(theta)) dtheta` over `[-pi/2, pi/2]`, the summed seam
/// solid angle of an `n`-gore sphere.
pub fn gore_sphere_total(spec: &GoreSphereSpec) -> Result<QuadratureResult> {
    spec.validate()?;
    let n = spec.n;
    let radius = spec.radius;
    // gore_crease_rate only fails on invalid specs, which were rejected above.
    let per_seam = integrate(
        |theta| gore_crease_rate(n, theta, radius).unwrap_or(f64::NAN) * radius,
        -FRAC_PI_2,
        FRAC_PI_2,
        1e-13,
    )?;
    let count = n as f64;
    Ok(QuadratureResult {
        value: count * per_seam.value,
        error_estimate: count * per_seam.error_estimate,
        evaluations: per_seam.evaluations,
    })
}
