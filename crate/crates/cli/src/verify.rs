//! Verification suites comparing closed forms against independent oracles.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crease_core::crease::{balance_taylor_bound, CreaseSpec};
use crease_core::math::{sin, PI, TAU};
use crease_core::oracle::{angle_defect, crease_rate_estimate, gauss_map_integrate, ParamRect};
use crease_core::quadrature::{gore_sphere_total, mudguard_total};
use crease_core::surface::{gen_curved_crease, gen_gore_sphere, gen_twisted_patch, GoreSphereSpec, MudguardSpec};
use crease_core::{crease_specific_curvature, tube_balance, CreaseRadius, TubeSpec};

use crate::error::{CliError, Result};
use crate::shape::VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    All,
    TubeBalance,
    CreaseLaw,
    Mudguard,
    Gore,
    TwistIndependence,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::TubeBalance,
                Suite::CreaseLaw,
                Suite::Mudguard,
                Suite::Gore,
                Suite::TwistIndependence,
            ],
            s => vec![s],
        }
    }
}

/// One checked case. `passed` holds exactly when `|residual| <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case_name: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub metadata: BTreeMap<String, f64>,
    pub version: String,
}

/// Tolerance families and their defaults. `tube-balance` defaults to the
/// per-case Taylor bound.
pub const TOLERANCES: &[(&str, f64)] = &[
    ("tube-balance", f64::NAN),
    ("tube-balance-ratio", 0.05),
    ("crease-law", 0.01),
    ("crease-law-halving", 0.0),
    ("mudguard-quadrature", 1e-8),
    ("mudguard-gauss-map", 1e-3),
    ("mudguard-limit", 0.05),
    ("gore-total", 1e-4),
    ("gore-ratio", 0.05),
    ("gauss-bonnet", 1e-9),
    ("twist-bits", 0.0),
    ("twist-patch", 0.01),
];

/// Parses `name=value` tolerance overrides.
pub fn parse_overrides(items: &[String]) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for item in items {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("tolerance override {item:?} is not name=value")))?;
        if !TOLERANCES.iter().any(|(n, _)| *n == name) {
            let known: Vec<&str> = TOLERANCES.iter().map(|(n, _)| *n).collect();
            return Err(CliError::Usage(format!("unknown tolerance {name:?}; known: {}", known.join(", "))));
        }
        let v: f64 = value
            .parse()
            .map_err(|_| CliError::Usage(format!("tolerance {name} has non-numeric value {value:?}")))?;
        if !(v >= 0.0) {
            return Err(CliError::Usage(format!("tolerance {name} must be >= 0, got {v}")));
        }
        out.insert(name.to_string(), v);
    }
    Ok(out)
}

struct Cases<'a> {
    overrides: &'a BTreeMap<String, f64>,
    out: Vec<VerificationReport>,
}

impl Cases<'_> {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        family: &str,
        name: String,
        closed_form: f64,
        oracle: f64,
        residual: f64,
        default_tol: f64,
        metadata: &[(&str, f64)],
    ) {
        let tolerance = self.overrides.get(family).copied().unwrap_or(default_tol);
        self.out.push(VerificationReport {
            case_name: format!("{family}/{name}"),
            closed_form,
            oracle,
            residual,
            tolerance,
            passed: residual.abs() <= tolerance,
            metadata: metadata
                .iter()
                .filter(|(_, v)| v.is_finite())
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            version: VERSION.to_string(),
        });
    }
}

/// Runs the selected suites in a fixed order.
pub fn run(suite: Suite, overrides: &BTreeMap<String, f64>) -> Result<Vec<VerificationReport>> {
    let mut cases = Cases {
        overrides,
        out: Vec::new(),
    };
    for s in suite.expand() {
        match s {
            Suite::TubeBalance => tube_balance_suite(&mut cases)?,
            Suite::CreaseLaw => crease_law_suite(&mut cases)?,
            Suite::Mudguard => mudguard_suite(&mut cases)?,
            Suite::Gore => gore_suite(&mut cases)?,
            Suite::TwistIndependence => twist_suite(&mut cases)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(cases.out)
}

fn tube_balance_suite(c: &mut Cases) -> Result<()> {
    for a in [1.0, 2.0] {
        for (label, alpha) in [("pi/6", PI / 6.0), ("pi/4", PI / 4.0), ("pi/3", PI / 3.0)] {
            for h_over_a in [0.01, 0.02, 0.05] {
                let spec = TubeSpec::new(a, alpha, h_over_a * a)?;
                let r = tube_balance(spec)?;
                let bound = balance_taylor_bound(spec)?;
                let meta = [("a", a), ("alpha", alpha), ("h", spec.h)];
                let name = format!("a={a},alpha={label},h/a={h_over_a}");
                c.push("tube-balance", name.clone(), 0.0, r.relative_residual, r.relative_residual, bound, &meta);
                let half = tube_balance(TubeSpec::new(a, alpha, 0.5 * spec.h)?)?;
                let ratio = r.residual / half.residual;
                c.push("tube-balance-ratio", name, 8.0, ratio, ratio / 8.0 - 1.0, 0.05, &meta);
            }
        }
    }
    Ok(())
}

fn crease_law_suite(c: &mut Cases) -> Result<()> {
    let (radius, mu, width) = (2.0, PI / 6.0, 0.1);
    let spec = CreaseSpec::curved(radius, mu)?;
    let exact = 2.0 * sin(mu) / radius;
    let mut errors = Vec::new();
    for nu in [64usize, 128, 256] {
        let nv = nu / 16;
        let mesh = gen_curved_crease(spec, width, nu, nv)?;
        let rate = crease_rate_estimate(&mesh, 0)?;
        let rel = (rate - exact) / exact;
        errors.push(rel.abs());
        let meta = [("R", radius), ("mu", mu), ("width", width), ("nu", nu as f64), ("nv", nv as f64)];
        c.push("crease-law", format!("nu={nu}"), exact, rate, rel, 0.01, &meta);
        if errors.len() >= 2 {
            let ratio = errors[errors.len() - 1] / errors[errors.len() - 2];
            // Error must at least halve: any excess of the ratio over 1/2 counts.
            c.push(
                "crease-law-halving",
                format!("nu={}->{nu}", nu / 2),
                0.5,
                ratio,
                (ratio - 0.5).max(0.0),
                0.0,
                &meta,
            );
        }
    }
    Ok(())
}

fn mudguard_suite(c: &mut Cases) -> Result<()> {
    for radius in [1.0, 10.0, 100.0] {
        for ratio in [0.001, 0.01, 0.1] {
            for mu in [0.1, 0.5, 1.2] {
                let spec = MudguardSpec::new(radius, ratio * radius, mu)?;
                let t = mudguard_total(&spec)?;
                let closed = spec.closed_form_total();
                c.push(
                    "mudguard-quadrature",
                    format!("R={radius},r/R={ratio},mu={mu}"),
                    closed,
                    t.quadrature.value,
                    (t.quadrature.value - closed) / closed,
                    1e-8,
                    &[("R", radius), ("r", spec.r), ("mu", mu)],
                );
            }
        }
    }

    let spec = MudguardSpec::new(10.0, 0.1, 0.2)?;
    let n = 256;
    let g = gauss_map_integrate(|phi, eps| spec.point(phi, eps), ParamRect::new(0.0, TAU, -spec.mu, spec.mu), n, n)?;
    let closed = spec.closed_form_total();
    c.push(
        "mudguard-gauss-map",
        "R=10,r=0.1,mu=0.2".into(),
        closed,
        g.value,
        (g.value - closed) / closed,
        1e-3,
        &[("R", 10.0), ("r", 0.1), ("mu", 0.2), ("nu", n as f64), ("nv", n as f64)],
    );

    // The excess over 4 pi sin(mu) per unit r/R settles to a constant.
    let limit = 4.0 * PI * sin(0.2);
    let mut prev: Option<f64> = None;
    for ratio in [1e-2, 1e-3, 1e-4] {
        let t = mudguard_total(&MudguardSpec::new(10.0, 10.0 * ratio, 0.2)?)?;
        let scaled = (t.quadrature.value - limit) / ratio;
        if let Some(p) = prev {
            c.push(
                "mudguard-limit",
                format!("r/R={ratio}"),
                p,
                scaled,
                scaled / p - 1.0,
                0.05,
                &[("R", 10.0), ("r", 10.0 * ratio), ("mu", 0.2), ("limit", limit)],
            );
        }
        prev = Some(scaled);
    }
    Ok(())
}

fn gore_suite(c: &mut Cases) -> Result<()> {
    let sphere = 4.0 * PI;
    let total = |n: usize| -> Result<f64> { Ok(gore_sphere_total(&GoreSphereSpec::new(1.0, n)?)?.value) };
    let t = total(1000)?;
    c.push("gore-total", "n=1000".into(), sphere, t, (t - sphere) / sphere, 1e-4, &[("n", 1000.0), ("R", 1.0)]);
    let mut prev: Option<f64> = None;
    for n in [8usize, 16, 32, 64] {
        let deficit = sphere - total(n)?;
        if let Some(p) = prev {
            let ratio = p / deficit;
            c.push(
                "gore-ratio",
                format!("n={}->{n}", n / 2),
                4.0,
                ratio,
                ratio / 4.0 - 1.0,
                0.05,
                &[("n", n as f64), ("R", 1.0)],
            );
        }
        prev = Some(deficit);
    }
    for (n, nu, nv) in [(3usize, 2usize, 8usize), (8, 4, 32), (16, 8, 64), (64, 1, 128)] {
        let mesh = gen_gore_sphere(GoreSphereSpec::new(1.0, n)?, nu, nv)?;
        let d = angle_defect(&mesh)?.total_defect;
        c.push(
            "gauss-bonnet",
            format!("n={n},nu={nu},nv={nv}"),
            sphere,
            d,
            (d - sphere) / sphere,
            1e-9,
            &[("n", n as f64), ("R", 1.0), ("nu", nu as f64), ("nv", nv as f64)],
        );
    }
    Ok(())
}

fn twist_suite(c: &mut Cases) -> Result<()> {
    for (label, radius, mu) in [
        ("R=2", CreaseRadius::Finite(2.0), 0.3),
        ("R=0.7", CreaseRadius::Finite(0.7), 1.1),
        ("straight", CreaseRadius::Straight, 0.4),
    ] {
        let base = crease_specific_curvature(CreaseSpec::new(radius, mu, 0.0)?)?;
        for twist in [-10.0, 10.0] {
            let v = crease_specific_curvature(CreaseSpec::new(radius, mu, twist)?)?;
            // Bitwise comparison: any difference in representation fails.
            let residual = if v.to_bits() == base.to_bits() { 0.0 } else { (v - base).abs().max(f64::MIN_POSITIVE) };
            c.push(
                "twist-bits",
                format!("{label},mu={mu},twist={twist}"),
                base,
                v,
                residual,
                0.0,
                &[("R", radius.curvature().recip()), ("mu", mu), ("twist", twist)],
            );
        }
    }
    let n = 256;
    let total = |mu: f64| -> Result<f64> { Ok(angle_defect(&gen_twisted_patch(0.1, 1.0, 1.0, mu, n, n)?)?.total_defect) };
    let (flat, folded) = (total(0.0)?, total(0.2)?);
    c.push(
        "twist-patch",
        "kxy=0.1,mu=0->0.2".into(),
        flat,
        folded,
        (folded - flat) / flat,
        0.01,
        &[("kxy", 0.1), ("mu", 0.2), ("nu", n as f64), ("nv", n as f64)],
    );
    Ok(())
}

/// Fixed-width pass/fail table.
pub fn table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.case_name.len()).max().unwrap_or(4).max(4);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<width$}  {:>14}  {:>14}  {:>11}  {:>10}  result",
        "case", "closed_form", "oracle", "residual", "tolerance"
    );
    for r in reports {
        let _ = writeln!(
            s,
            "{:<width$}  {:>14.8e}  {:>14.8e}  {:>11.3e}  {:>10.2e}  {}",
            r.case_name,
            r.closed_form,
            r.oracle,
            r.residual,
            r.tolerance,
            if r.passed { "PASS" } else { "FAIL" }
        );
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(s, "{} of {} checks passed", reports.len() - failed, reports.len());
    s
}
