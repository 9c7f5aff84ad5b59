//! One-parameter sweeps written as CSV.

use clap::ValueEnum;

use crease_core::crease::{balance_taylor_bound, CreaseSpec};
use crease_core::curvature::mohr_circle;
use crease_core::math::{sin, PI};
use crease_core::oracle::crease_rate_estimate;
use crease_core::quadrature::{gore_sphere_total, mudguard_total};
use crease_core::surface::{gen_curved_crease, GoreSphereSpec, MudguardSpec};
use crease_core::{gore_crease_rate, prismatic_curvatures, strip_specific_curvature, tube_balance, TubeSpec};

use crate::error::{CliError, Result};

/// Values held fixed while another parameter is swept.
pub const BASE_A: f64 = 1.0;
pub const BASE_ALPHA: f64 = PI / 4.0;
pub const BASE_H: f64 = 0.05;
pub const BASE_MU: f64 = 0.2;
pub const BASE_R: f64 = 10.0;
pub const BASE_SMALL_R: f64 = 0.1;
pub const BASE_N: usize = 8;
/// Mesh resolution for the curved-crease oracle.
const CREASE_NU: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    Alpha,
    H,
    Mu,
    #[value(name = "R")]
    BigR,
    #[value(name = "r")]
    SmallR,
    N,
}

impl SweepParam {
    pub fn is_angle(self) -> bool {
        matches!(self, SweepParam::Alpha | SweepParam::Mu)
    }

    fn name(self) -> &'static str {
        match self {
            SweepParam::Alpha => "alpha",
            SweepParam::H => "h",
            SweepParam::Mu => "mu",
            SweepParam::BigR => "R",
            SweepParam::SmallR => "r",
            SweepParam::N => "n",
        }
    }
}

/// `lo:hi:steps`, inclusive of both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl std::str::FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, steps] = parts[..] else {
            return Err(format!("range {s:?} is not lo:hi:steps"));
        };
        let num = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("bad number {x:?} in range"));
        let (lo, hi) = (num(lo)?, num(hi)?);
        let steps: usize = steps.trim().parse().map_err(|_| format!("bad step count {steps:?}"))?;
        if !lo.is_finite() || !hi.is_finite() || steps == 0 || (steps == 1 && lo != hi) {
            return Err(format!("range {s:?} needs finite bounds and at least 2 steps"));
        }
        Ok(Range { lo, hi, steps })
    }
}

impl Range {
    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.lo];
        }
        (0..self.steps)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (self.steps - 1) as f64)
            .collect()
    }

    pub fn scaled(self, k: f64) -> Range {
        Range {
            lo: self.lo * k,
            hi: self.hi * k,
            ..self
        }
    }
}

fn header(param: SweepParam) -> Vec<&'static str> {
    let mut h = vec![param.name()];
    h.extend(match param {
        SweepParam::Alpha | SweepParam::H => [
            "strip_specific_curvature",
            "strip_oracle",
            "strip_residual",
            "crease_term",
            "balance_residual",
            "relative_residual",
            "taylor_bound",
        ]
        .as_slice(),
        SweepParam::Mu | SweepParam::BigR => ["crease_rate", "mesh_rate", "rate_residual"].as_slice(),
        SweepParam::SmallR => ["closed_form", "quadrature", "residual", "limit", "excess"].as_slice(),
        SweepParam::N => ["total", "sphere", "deficit", "equator_rate"].as_slice(),
    });
    h
}

fn row(param: SweepParam, x: f64) -> Result<Vec<f64>> {
    Ok(match param {
        SweepParam::Alpha | SweepParam::H => {
            let (alpha, h) = if param == SweepParam::Alpha { (x, BASE_H) } else { (BASE_ALPHA, x) };
            let spec = TubeSpec::new(BASE_A, alpha, h)?;
            let closed = strip_specific_curvature(spec)?;
            let m = mohr_circle(prismatic_curvatures(spec)?);
            let oracle = h * (m.center * m.center - m.radius * m.radius);
            let b = tube_balance(spec)?;
            vec![x, closed, oracle, oracle - closed, b.crease_term, b.residual, b.relative_residual, balance_taylor_bound(spec)?]
        }
        SweepParam::Mu | SweepParam::BigR => {
            let (radius, mu) = if param == SweepParam::Mu { (BASE_R, x) } else { (x, BASE_MU) };
            let spec = CreaseSpec::curved(radius, mu)?;
            let exact = 2.0 * sin(mu) / radius;
            let width = 0.05 * radius;
            let mesh = gen_curved_crease(spec, width, CREASE_NU, CREASE_NU / 16)?;
            let rate = crease_rate_estimate(&mesh, 0)?;
            vec![x, exact, rate, rate - exact]
        }
        SweepParam::SmallR => {
            let spec = MudguardSpec::new(BASE_R, x, BASE_MU)?;
            let t = mudguard_total(&spec)?;
            vec![x, t.closed_form, t.quadrature.value, t.quadrature.value - t.closed_form, t.crease_limit, t.quadrature.value - t.crease_limit]
        }
        SweepParam::N => {
            let n = x as usize;
            let total = gore_sphere_total(&GoreSphereSpec::new(1.0, n)?)?.value;
            vec![x, total, 4.0 * PI, 4.0 * PI - total, gore_crease_rate(n, 0.0, 1.0)?]
        }
    })
}

/// Sweep values; counts for `n` are rounded and deduplicated.
pub fn sweep_values(param: SweepParam, range: Range) -> Result<Vec<f64>> {
    let mut xs = range.values();
    if param == SweepParam::N {
        xs = xs.into_iter().map(f64::round).collect();
        xs.dedup();
        if xs.iter().any(|&n| n < 3.0) {
            return Err(CliError::Usage("gore count n must be >= 3".into()));
        }
    }
    Ok(xs)
}

/// Runs the sweep and renders CSV.
pub fn sweep_csv(param: SweepParam, range: Range) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Usage(format!("csv: {e}"));
    w.write_record(header(param)).map_err(csv_err)?;
    for x in sweep_values(param, range)? {
        let r = row(param, x)?;
        w.write_record(r.iter().map(|v| v.to_string())).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
