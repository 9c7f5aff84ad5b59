//! Parametric constructors and triangulators.
//!
//! Every generator returns a validated [`TriMesh`](crate::mesh::TriMesh) with
//! outward counter-clockwise triangles, crease polylines, and boundary tags
//! derived from the topology. Output depends only on the inputs.

mod curved;
mod cylinder;
mod gore;
mod mudguard;
mod patch;
mod tube;

pub use curved::{gen_curved_crease, CurvedCreaseBand};
pub use cylinder::gen_cylinder;
pub use gore::{gen_gore_sphere, GoreSphereSpec};
pub use mudguard::{gen_mudguard, MudguardSpec};
pub use patch::{gen_twisted_patch, TwistedPatch};
pub use tube::{gen_twisted_prismatic_tube, PrismaticTube};

/// Resolution for analysis runs.
pub const ANALYSIS_RESOLUTION: usize = 128;
/// Resolution for exported previews.
pub const PREVIEW_RESOLUTION: usize = 32;

use crate::error::{Error, Result};

pub(crate) fn check_resolution(name: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::Resolution { name, value, min });
    }
    Ok(())
}
