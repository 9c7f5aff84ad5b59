//! Gaussian curvature of curved, twisted creases.
//!
//! This crate is `no_std` (it needs `alloc` for meshes) and contains everything
//! that is pure computation:
//!
//! - [`curvature`]: the 2x2 shallow curvature tensor, Mohr's circle, principal
//!   and Gaussian curvature, and the strip curvature of a twisted-prismatic tube.
//! - [`crease`]: solid-angle laws for twisted and curved creases, the specific
//!   Gaussian curvature of a crease, and the creased-tube balance.
//! - [`surface`]: parametric generators for cylinders, creased tubes, twisted
//!   patches, curved creases, mudguard bands and gore spheres.
//! - [`oracle`]: independent discrete checks (angle defect and numerical Gauss
//!   maps).
//! - [`quadrature`]: adaptive Gauss-Kronrod integration plus the mudguard and
//!   gore-sphere totals.
//!
//! Angles are in radians and lengths are unitless but consistent.
//!
//! # Sign convention
//!
//! The twist curvature `kxy` is left-handed positive: the shallow twisted
//! surface is `z = kxy * x * y` with no leading minus sign.
//!
//! # Line angle
//!
//! `alpha` is the angle between the crease lines and the tube axis, so that a
//! helix at `alpha` has normal curvature `sin²(alpha)/a`. Lines at
//! `alpha = pi/2` run around the hoop.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod crease;
pub mod curvature;
mod error;
pub mod math;
pub mod mesh;
pub mod oracle;
pub mod quadrature;
pub mod surface;

pub use crate::crease::{
    crease_specific_curvature, curved_crease_patch_solid_angle, gore_crease_rate, tube_balance,
    tube_crease_fold_angle, twisted_crease_solid_angle, twisted_patch_solid_angle, BalanceReport,
    CreaseRadius, CreaseSpec, SphericalPatchImage,
};
pub use crate::curvature::{
    cylinder_curvatures, gaussian_curvature, mohr_circle, principal_curvatures,
    prismatic_curvatures, strip_specific_curvature, CurvatureState, MohrCircle, TubeSpec,
};
pub use crate::error::{Error, Result};
pub use crate::math::Vec3;
pub use crate::mesh::{CreasePolyline, TriMesh, VertexTag};
