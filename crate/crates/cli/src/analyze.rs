//! Curvature analysis of a generated mesh.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crease_core::curvature::{gaussian_curvature, prismatic_curvatures};
use crease_core::math::{sin, PI, TAU};
use crease_core::oracle::{angle_defect, crease_local_rates, gauss_map_integrate, DefectField, ParamRect};
use crease_core::quadrature::{gore_sphere_total, mudguard_total};
use crease_core::surface::{GoreSphereSpec, MudguardSpec};
use crease_core::{tube_balance, TriMesh};

use crate::error::{CliError, Result};
use crate::obj::read_obj;
use crate::shape::{ShapeSpec, Sidecar, TOOL, VERSION};

/// Resolution of the parametric Gauss-map check on mudguards.
const GAUSS_MAP_RESOLUTION: usize = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool: String,
    pub version: String,
    /// `obj` or `sidecar`.
    pub input: String,
    pub shape: Option<String>,
    pub params: BTreeMap<String, f64>,
    pub nu: Option<usize>,
    pub nv: Option<usize>,
    pub mesh: MeshSummary,
    pub defects: DefectSummary,
    pub creases: Vec<CreaseRow>,
    pub comparisons: Vec<Comparison>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshSummary {
    pub vertices: usize,
    pub triangles: usize,
    pub euler_characteristic: i64,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DefectSummary {
    pub total_defect: f64,
    pub interior_defect: f64,
    pub interior_area: f64,
    pub interior_vertices: usize,
    /// Defect per unit area over interior vertices; absent without any.
    pub interior_curvature: Option<f64>,
    pub crease_defect: f64,
    pub apex_defect: f64,
    pub boundary_defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CreaseRow {
    pub id: usize,
    pub vertices: usize,
    pub length: f64,
    pub defect: f64,
    pub rate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub name: String,
    pub closed_form: f64,
    pub oracle: f64,
    /// `oracle - closed_form`.
    pub residual: f64,
}

impl Comparison {
    fn new(name: &str, closed_form: f64, oracle: f64) -> Self {
        Comparison {
            name: name.to_string(),
            closed_form,
            oracle,
            residual: oracle - closed_form,
        }
    }
}

/// Loads a mesh and its spec from an OBJ file or a JSON sidecar.
pub fn load(path: &Path) -> Result<(TriMesh, Option<Sidecar>, &'static str)> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    if text.trim_start().starts_with('{') {
        let sidecar = Sidecar::from_json(path, &text)?;
        let mesh = sidecar.build()?;
        return Ok((mesh, Some(sidecar), "sidecar"));
    }
    let obj = read_obj(text.as_bytes()).map_err(|e| CliError::format(path, e.to_string()))?;
    let sidecar = obj.spec.as_deref().map(|s| Sidecar::from_json(path, s)).transpose()?;
    if obj.mesh.creases.is_empty() && sidecar.is_none() {
        return Err(CliError::format(path, "mesh has no crease tags or spec header"));
    }
    obj.mesh
        .validate()
        .map_err(|e| CliError::format(path, format!("invalid mesh: {e}")))?;
    Ok((obj.mesh, sidecar, "obj"))
}

pub fn analyze(mesh: &TriMesh, sidecar: Option<&Sidecar>, input: &str) -> Result<AnalysisReport> {
    let field = angle_defect(mesh)?;
    let creases = field
        .creases
        .iter()
        .map(|c| CreaseRow {
            id: c.id,
            vertices: c.vertices,
            length: c.length,
            defect: c.defect,
            rate: c.rate.is_finite().then_some(c.rate),
        })
        .collect();
    let comparisons = match sidecar {
        Some(s) => comparisons(mesh, &field, s)?,
        None => Vec::new(),
    };
    Ok(AnalysisReport {
        tool: TOOL.to_string(),
        version: VERSION.to_string(),
        input: input.to_string(),
        shape: sidecar.map(|s| s.shape.kind().to_string()),
        params: sidecar.map(|s| s.shape.params()).unwrap_or_default(),
        nu: sidecar.map(|s| s.nu),
        nv: sidecar.map(|s| s.nv),
        mesh: MeshSummary {
            vertices: mesh.vertices.len(),
            triangles: mesh.triangles.len(),
            euler_characteristic: mesh.euler_characteristic(),
            closed: mesh.is_closed(),
        },
        defects: DefectSummary {
            total_defect: field.total_defect,
            interior_defect: field.interior_defect,
            interior_area: field.interior_area,
            interior_vertices: field.interior_vertices,
            interior_curvature: (field.interior_vertices > 0).then(|| field.interior_curvature()),
            crease_defect: field.crease_defect(),
            apex_defect: field.apex_defect,
            boundary_defect: field.boundary_defect,
        },
        creases,
        comparisons,
    })
}

/// Mean rate over creases with at least one counted vertex.
fn mean_crease_rate(field: &DefectField) -> f64 {
    let rates: Vec<f64> = field.creases.iter().map(|c| c.rate).filter(|r| r.is_finite()).collect();
    if rates.is_empty() {
        f64::NAN
    } else {
        rates.iter().sum::<f64>() / rates.len() as f64
    }
}

fn comparisons(mesh: &TriMesh, field: &DefectField, sidecar: &Sidecar) -> Result<Vec<Comparison>> {
    let (nu, nv) = (sidecar.nu as f64, sidecar.nv as f64);
    let mut out = Vec::new();
    match sidecar.shape {
        ShapeSpec::Cylinder { .. } => {
            out.push(Comparison::new("interior_curvature", 0.0, field.interior_curvature()));
            out.push(Comparison::new("crease_rate", 0.0, mean_crease_rate(field)));
        }
        ShapeSpec::Tube { .. } => {
            let spec = sidecar.shape.tube_spec()?.expect("tube has a tube spec");
            let strip_k = gaussian_curvature(prismatic_curvatures(spec)?);
            let k = field.interior_curvature();
            let balance = tube_balance(spec)?;
            // Crease vertices also collect the strip curvature of half a row on
            // each side; remove it to isolate the fold.
            let crease = mean_crease_rate(field) - k * spec.h / nv;
            out.push(Comparison::new("strip_curvature", strip_k, k));
            out.push(Comparison::new("crease_rate", balance.crease_term, crease));
            out.push(Comparison::new("balance_residual", balance.residual, k * spec.h + crease));
        }
        ShapeSpec::TwistedPatch { kxy, a_len, b_len, .. } => {
            // Non-boundary vertices cover the patch less half a cell on each side.
            let covered = a_len * (1.0 - 1.0 / nu) * b_len * (1.0 - 1.0 / nv);
            out.push(Comparison::new("total_defect", -kxy * kxy * covered, field.total_defect));
            out.push(Comparison::new("crease_rate", 0.0, mean_crease_rate(field)));
        }
        ShapeSpec::CurvedCrease { radius, mu, .. } => {
            out.push(Comparison::new("crease_rate", 2.0 * sin(mu) / radius, mean_crease_rate(field)));
        }
        ShapeSpec::Mudguard { radius, r, mu } => {
            let spec = MudguardSpec::new(radius, r, mu)?;
            let totals = mudguard_total(&spec)?;
            out.push(Comparison::new("quadrature_total", totals.closed_form, totals.quadrature.value));
            let g = gauss_map_integrate(
                |phi, eps| spec.point(phi, eps),
                ParamRect::new(0.0, TAU, -mu, mu),
                GAUSS_MAP_RESOLUTION,
                GAUSS_MAP_RESOLUTION,
            )?;
            out.push(Comparison::new("gauss_map_total", totals.closed_form, g.value));
            // Non-boundary vertices cover the band less half a cell on each side.
            let trimmed = 4.0 * PI * sin(mu * (1.0 - 1.0 / nv));
            out.push(Comparison::new("total_defect", trimmed, field.total_defect));
        }
        ShapeSpec::GoreSphere { n, radius } => {
            out.push(Comparison::new("total_defect", 4.0 * PI, field.total_defect));
            let nominal = gore_sphere_total(&GoreSphereSpec::new(radius, n)?)?;
            out.push(Comparison::new("seam_total", nominal.value, field.crease_defect() + field.apex_defect));
            let rates = crease_local_rates(mesh, field, 0)?;
            let quarter = 0.5 * PI * radius;
            if let Some(eq) = rates
                .iter()
                .min_by(|a, b| (a.arc_position - quarter).abs().total_cmp(&(b.arc_position - quarter).abs()))
            {
                let exact = 2.0 * sin(PI / n as f64) / radius;
                out.push(Comparison::new("equator_rate", exact, eq.rate));
            }
        }
    }
    Ok(out)
}

/// Per-crease table as CSV.
pub fn crease_csv(report: &AnalysisReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Usage(format!("csv: {e}"));
    w.write_record(["id", "vertices", "length", "defect", "rate"]).map_err(csv_err)?;
    for c in &report.creases {
        w.write_record([
            c.id.to_string(),
            c.vertices.to_string(),
            c.length.to_string(),
            c.defect.to_string(),
            c.rate.map(|r| r.to_string()).unwrap_or_default(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
