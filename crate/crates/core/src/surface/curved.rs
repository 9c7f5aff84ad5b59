use alloc::vec::Vec;

use super::check_resolution;
use crate::crease::{CreaseRadius, CreaseSpec};
use crate::error::{Error, Result};
use crate::math::{abs, cos, sin, Vec3, TAU};
use crate::mesh::{MeshBuilder, TriMesh, VertexTag};

/// Circular crease of radius `R` in the plane `z = 0`, flanked by two conical
/// strips of width `w`.
///
/// At the crease the tangent plane contains the crease tangent and the `z`
/// axis. The strips run along straight rulings normal to the crease, tilted
/// towards the axis by `mu` above and below that plane, so the crease plane
/// bisects the fold. Outward normals sit at elevation `±mu`. With `mu = 0` the
/// band is a cylinder strip. Twist along the crease is not modelled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvedCreaseBand {
    pub radius: f64,
    pub mu: f64,
    pub width: f64,
}

impl CurvedCreaseBand {
    pub fn new(spec: CreaseSpec, width: f64) -> Result<Self> {
        spec.validate()?;
        let radius = match spec.radius {
            CreaseRadius::Finite(r) => r,
            CreaseRadius::Straight => {
                return Err(Error::param("R", f64::INFINITY, "a finite crease radius"))
            }
        };
        if !(width > 0.0 && width < radius / 4.0) {
            return Err(Error::param("strip_width", width, "a width in (0, R/4)"));
        }
        Ok(CurvedCreaseBand {
            radius,
            mu: spec.mu,
            width,
        })
    }

    /// Point at azimuth `phi` and signed distance `s` from the crease along
    /// the ruling (`s > 0` upper strip).
    pub fn point(&self, phi: f64, s: f64) -> Vec3 {
        let rho = self.radius - abs(s) * sin(self.mu);
        Vec3::new(rho * cos(phi), rho * sin(phi), s * cos(self.mu))
    }
}

/// Meshes a full ring of [`CurvedCreaseBand`] with `nu` cells around the crease
/// and `nv` cells across each strip. The crease is the closed polyline 0.
pub fn gen_curved_crease(spec: CreaseSpec, strip_width: f64, nu: usize, nv: usize) -> Result<TriMesh> {
    let band = CurvedCreaseBand::new(spec, strip_width)?;
    check_resolution("nu", nu, 3)?;
    check_resolution("nv", nv, 1)?;
    let rows = 2 * nv;
    let mut b = MeshBuilder::new();
    let mut grid = Vec::with_capacity(nu * (rows + 1));
    for l in 0..=rows {
        let s = if l == nv {
            0.0
        } else {
            strip_width * (l as f64 / nv as f64 - 1.0)
        };
        let tag = if l == nv {
            VertexTag::Crease(0)
        } else {
            VertexTag::Interior
        };
        for i in 0..nu {
            let phi = TAU * i as f64 / nu as f64;
            grid.push(b.vertex(band.point(phi, s), tag));
        }
    }
    let at = |i: usize, l: usize| grid[l * nu + i % nu];
    for l in 0..rows {
        for i in 0..nu {
            b.quad(at(i, l), at(i + 1, l), at(i + 1, l + 1), at(i, l + 1));
        }
    }
    b.crease(0, (0..nu).map(|i| at(i, nv)).collect(), true);
    b.finish()
}
