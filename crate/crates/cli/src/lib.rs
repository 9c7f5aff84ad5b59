//! File formats and command-line front end for `crease-core`.
//!
//! - [`obj`]: Wavefront OBJ export and import with crease groups.
//! - [`shape`]: shape parameters and the JSON sidecar written next to meshes.
//! - [`analyze`]: defect summaries and closed-form comparisons for a mesh.
//! - [`verify`]: verification suites producing [`verify::VerificationReport`]s.
//! - [`sweep`]: one-parameter CSV sweeps.
//! - [`cli`]: argument parsing and dispatch for the `creasekit` binary.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analyze;
pub mod cli;
pub mod error;
pub mod obj;
pub mod shape;
pub mod sweep;
pub mod verify;

pub use error::{CliError, Result};
