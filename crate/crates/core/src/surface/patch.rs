use alloc::vec::Vec;

use super::check_resolution;
use crate::error::{Error, Result};
use crate::math::{abs, cos, sin, Vec3};
use crate::mesh::{MeshBuilder, TriMesh, VertexTag};

/// Shallowness limit on `|kxy| * max(a_len, b_len)`.
pub const SHALLOW_TWIST: f64 = 0.3;

/// Uniformly twisted surface `z = kxy x y` over an `a_len x b_len` rectangle,
/// optionally creased along the `x` axis with half fold angle `mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistedPatch {
    pub kxy: f64,
    pub a_len: f64,
    pub b_len: f64,
    pub mu: f64,
}

impl TwistedPatch {
    pub fn new(kxy: f64, a_len: f64, b_len: f64, mu: f64) -> Result<Self> {
        if !kxy.is_finite() {
            return Err(Error::param("kxy", kxy, "a finite twist"));
        }
        for (name, v) in [("a_len", a_len), ("b_len", b_len)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::param(name, v, "a finite length > 0"));
            }
        }
        if !(0.0..core::f64::consts::FRAC_PI_2).contains(&mu) {
            return Err(Error::param("mu", mu, "a half fold angle in [0, pi/2)"));
        }
        let p = TwistedPatch { kxy, a_len, b_len, mu };
        if !p.is_shallow() {
            log::warn!("twisted patch |kxy| * size = {} exceeds {SHALLOW_TWIST}", abs(kxy) * a_len.max(b_len));
        }
        Ok(p)
    }

    pub fn is_shallow(&self) -> bool {
        abs(self.kxy) * self.a_len.max(self.b_len) <= SHALLOW_TWIST
    }

    /// Surface point over `(x, y)`. Each half rotates rigidly about the `x`
    /// axis, the `y > 0` half by `+mu` and the other by `-mu`, so both rise
    /// and the fold opens by `2 mu`.
    pub fn point(&self, x: f64, y: f64) -> Vec3 {
        let z = self.kxy * x * y;
        let t = if y >= 0.0 { self.mu } else { -self.mu };
        let (s, c) = (sin(t), cos(t));
        Vec3::new(x, y * c - z * s, y * s + z * c)
    }

    /// Gaussian curvature of the exact graph, `-kxy² / (1 + kxy² (x² + y²))²`.
    pub fn exact_gaussian_curvature(&self, x: f64, y: f64) -> f64 {
        let k2 = self.kxy * self.kxy;
        let d = 1.0 + k2 * (x * x + y * y);
        -k2 / (d * d)
    }
}

/// Meshes a [`TwistedPatch`] on an `nu x nv` grid. `nv` must be even so that a
/// row of vertices lies on the `x` axis, which is tagged as crease 0.
pub fn gen_twisted_patch(
    kxy: f64,
    a_len: f64,
    b_len: f64,
    mu: f64,
    nu: usize,
    nv: usize,
) -> Result<TriMesh> {
    let patch = TwistedPatch::new(kxy, a_len, b_len, mu)?;
    check_resolution("nu", nu, 2)?;
    check_resolution("nv", nv, 2)?;
    if !nv.is_multiple_of(2) {
        return Err(Error::param("nv", nv as f64, "an even count"));
    }
    let mut b = MeshBuilder::new();
    let mut grid = Vec::with_capacity((nu + 1) * (nv + 1));
    for j in 0..=nv {
        // Exact zero on the crease row.
        let y = if 2 * j == nv {
            0.0
        } else {
            b_len * (j as f64 / nv as f64 - 0.5)
        };
        for i in 0..=nu {
            let x = a_len * (i as f64 / nu as f64 - 0.5);
            let tag = if 2 * j == nv {
                VertexTag::Crease(0)
            } else {
                VertexTag::Interior
            };
            grid.push(b.vertex(patch.point(x, y), tag));
        }
    }
    let at = |i: usize, j: usize| grid[j * (nu + 1) + i];
    for j in 0..nv {
        for i in 0..nu {
            b.quad(at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
        }
    }
    b.crease(0, (0..=nu).map(|i| at(i, nv / 2)).collect(), false);
    b.finish()
}
