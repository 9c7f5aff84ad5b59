use alloc::vec::Vec;

use super::check_resolution;
use crate::error::{Error, Result};
use crate::math::{cos, sin, Vec3, FRAC_PI_2, PI, TAU};
use crate::mesh::{MeshBuilder, TriMesh, VertexTag};

/// Sphere approximated by `n` developable gores joined along meridional seams
/// of radius `R`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GoreSphereSpec {
    pub radius: f64,
    pub n: usize,
}

impl GoreSphereSpec {
    pub fn new(radius: f64, n: usize) -> Result<Self> {
        let spec = GoreSphereSpec { radius, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        check_resolution("n", self.n, 3)?;
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::param("R", self.radius, "a finite radius > 0"));
        }
        Ok(())
    }

    /// Point on seam `k` at latitude `theta`.
    pub fn seam_point(&self, k: usize, theta: f64) -> Vec3 {
        let phi = TAU * k as f64 / self.n as f64;
        let c = cos(theta);
        Vec3::new(self.radius * c * cos(phi), self.radius * c * sin(phi), self.radius * sin(theta))
    }

    /// Nominal half fold angle across a seam at latitude `theta`, `(pi/n) cos(theta)`.
    pub fn nominal_fold(&self, theta: f64) -> f64 {
        PI / self.n as f64 * cos(theta)
    }
}

/// Closed genus-0 gore sphere.
///
/// Each gore is the cylinder swept by the straight chords joining adjacent
/// seams at equal latitude; its rulings are parallel, so every quad inside a
/// gore is planar. `nu` cells span each gore and `nv` cells run pole to pole.
/// Seams are crease polylines `0..n` from the south to the north pole, and the
/// poles are [`VertexTag::Apex`] points shared by all gores.
pub fn gen_gore_sphere(spec: GoreSphereSpec, nu: usize, nv: usize) -> Result<TriMesh> {
    spec.validate()?;
    check_resolution("nu", nu, 1)?;
    check_resolution("nv", nv, 2)?;
    let n = spec.n;
    let mut b = MeshBuilder::new();
    let south = b.vertex(Vec3::new(0.0, 0.0, -spec.radius), VertexTag::Apex);
    let north = b.vertex(Vec3::new(0.0, 0.0, spec.radius), VertexTag::Apex);
    let theta = |j: usize| -FRAC_PI_2 + PI * j as f64 / nv as f64;

    // seams[k][j - 1] for latitude rows j = 1..nv
    let seams: Vec<Vec<usize>> = (0..n)
        .map(|k| {
            (1..nv)
                .map(|j| b.vertex(spec.seam_point(k, theta(j)), VertexTag::Crease(k)))
                .collect()
        })
        .collect();

    for k in 0..n {
        let next = (k + 1) % n;
        // rows[j - 1][l], l = 0..=nu across the gore
        let rows: Vec<Vec<usize>> = (1..nv)
            .map(|j| {
                let (p, q) = (seams[k][j - 1], seams[next][j - 1]);
                let mut row = Vec::with_capacity(nu + 1);
                row.push(p);
                for l in 1..nu {
                    let x = b.position(p).lerp(b.position(q), l as f64 / nu as f64);
                    row.push(b.vertex(x, VertexTag::Interior));
                }
                row.push(q);
                row
            })
            .collect();
        for l in 0..nu {
            b.triangle(south, rows[0][l + 1], rows[0][l]);
            b.triangle(north, rows[nv - 2][l], rows[nv - 2][l + 1]);
        }
        for j in 0..nv - 2 {
            for l in 0..nu {
                b.quad(rows[j][l], rows[j][l + 1], rows[j + 1][l + 1], rows[j + 1][l]);
            }
        }
    }
    for (k, seam) in seams.into_iter().enumerate() {
        let mut chain = Vec::with_capacity(seam.len() + 2);
        chain.push(south);
        chain.extend(seam);
        chain.push(north);
        b.crease(k, chain, false);
    }
    b.finish()
}
