//! Shape parameters, JSON sidecars and mesh construction.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crease_core::crease::CreaseSpec;
use crease_core::surface::{
    gen_curved_crease, gen_cylinder, gen_gore_sphere, gen_mudguard, gen_twisted_patch, gen_twisted_prismatic_tube,
    GoreSphereSpec, MudguardSpec,
};
use crease_core::{TriMesh, TubeSpec};

use crate::error::{CliError, Result};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Parameters of one generated surface. Angles are radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ShapeSpec {
    Cylinder { a: f64, alpha: f64, h: f64 },
    Tube { a: f64, alpha: f64, strips: usize },
    TwistedPatch { kxy: f64, a_len: f64, b_len: f64, mu: f64 },
    CurvedCrease { radius: f64, mu: f64, width: f64 },
    Mudguard { radius: f64, r: f64, mu: f64 },
    GoreSphere { n: usize, radius: f64 },
}

impl ShapeSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ShapeSpec::Cylinder { .. } => "cylinder",
            ShapeSpec::Tube { .. } => "tube",
            ShapeSpec::TwistedPatch { .. } => "twisted-patch",
            ShapeSpec::CurvedCrease { .. } => "curved-crease",
            ShapeSpec::Mudguard { .. } => "mudguard",
            ShapeSpec::GoreSphere { .. } => "gore-sphere",
        }
    }

    /// Parameters as a sorted name/value map.
    pub fn params(&self) -> BTreeMap<String, f64> {
        let pairs: Vec<(&str, f64)> = match *self {
            ShapeSpec::Cylinder { a, alpha, h } => vec![("a", a), ("alpha", alpha), ("h", h)],
            ShapeSpec::Tube { a, alpha, strips } => vec![("a", a), ("alpha", alpha), ("strips", strips as f64)],
            ShapeSpec::TwistedPatch { kxy, a_len, b_len, mu } => {
                vec![("kxy", kxy), ("a_len", a_len), ("b_len", b_len), ("mu", mu)]
            }
            ShapeSpec::CurvedCrease { radius, mu, width } => vec![("R", radius), ("mu", mu), ("width", width)],
            ShapeSpec::Mudguard { radius, r, mu } => vec![("R", radius), ("r", r), ("mu", mu)],
            ShapeSpec::GoreSphere { n, radius } => vec![("n", n as f64), ("R", radius)],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    pub fn tube_spec(&self) -> Result<Option<TubeSpec>> {
        Ok(match *self {
            ShapeSpec::Cylinder { a, alpha, h } => Some(TubeSpec::new(a, alpha, h)?),
            ShapeSpec::Tube { a, alpha, strips } => Some(TubeSpec::for_strips(a, alpha, strips)?),
            _ => None,
        })
    }

    pub fn build(&self, nu: usize, nv: usize) -> Result<TriMesh> {
        let mesh = match *self {
            ShapeSpec::Cylinder { a, alpha, h } => gen_cylinder(TubeSpec::new(a, alpha, h)?, nu, nv)?,
            ShapeSpec::Tube { a, alpha, strips } => {
                gen_twisted_prismatic_tube(TubeSpec::for_strips(a, alpha, strips)?, strips, nu, nv)?
            }
            ShapeSpec::TwistedPatch { kxy, a_len, b_len, mu } => gen_twisted_patch(kxy, a_len, b_len, mu, nu, nv)?,
            ShapeSpec::CurvedCrease { radius, mu, width } => {
                gen_curved_crease(CreaseSpec::curved(radius, mu)?, width, nu, nv)?
            }
            ShapeSpec::Mudguard { radius, r, mu } => gen_mudguard(MudguardSpec::new(radius, r, mu)?, nu, nv)?,
            ShapeSpec::GoreSphere { n, radius } => gen_gore_sphere(GoreSphereSpec::new(radius, n)?, nu, nv)?,
        };
        Ok(mesh)
    }
}

/// Everything needed to regenerate a mesh exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sidecar {
    pub tool: String,
    pub version: String,
    pub shape: ShapeSpec,
    pub nu: usize,
    pub nv: usize,
}

impl Sidecar {
    pub fn new(shape: ShapeSpec, nu: usize, nv: usize) -> Self {
        Sidecar {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            shape,
            nu,
            nv,
        }
    }

    pub fn build(&self) -> Result<TriMesh> {
        self.shape.build(self.nu, self.nv)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("sidecar serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sidecar serializes");
        s.push('\n');
        s
    }

    pub fn from_json(path: &Path, text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::format(path, format!("invalid spec sidecar: {e}")))
    }
}

/// Sidecar path next to an OBJ: same stem, `.json` extension.
pub fn sidecar_path(obj: &Path) -> PathBuf {
    obj.with_extension("json")
}
