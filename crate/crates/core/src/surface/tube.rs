use alloc::vec::Vec;

use super::check_resolution;
use crate::curvature::{closing_strip_width, TubeSpec};
use crate::error::{Error, Result};
use crate::math::{abs, cos, round, sin, tan, Vec3, TAU};
use crate::mesh::{MeshBuilder, TriMesh, VertexTag};

/// Twisted-prismatic tube built directly in its closed form.
///
/// The creases are the helices of the smooth cylinder of radius `a` at angle
/// `alpha` to the axis, `n_strips` of them around the hoop. Each strip is ruled
/// by straight segments running normal to the creases in the developed sheet:
/// the point at arc length `t` on crease `k` joins the point at
/// `t - h tan(alpha)` on crease `k + 1`. Strips are therefore straight across
/// (`kyy = 0`) but keep the helical `kxx` and `kxy` of the cylinder.
///
/// This replaces the shear used to register the edges of a physical sheet; the
/// strip width normal to the creases is `h = 2 pi a cos(alpha) / n_strips`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrismaticTube {
    pub spec: TubeSpec,
    pub n_strips: usize,
}

impl PrismaticTube {
    /// Checks that `spec.h` closes `n_strips` strips around the hoop.
    pub fn new(spec: TubeSpec, n_strips: usize) -> Result<Self> {
        spec.validate()?;
        check_resolution("n_strips", n_strips, 3)?;
        let c = cos(spec.alpha);
        let closing = closing_strip_width(spec.a, spec.alpha, n_strips);
        if c < 1e-12 || abs(spec.h - closing) > 1e-9 * spec.a {
            // Hoop length covered by the strips minus the circumference.
            let gap = n_strips as f64 * spec.h / c - TAU * spec.a;
            return Err(Error::Closure { gap });
        }
        Ok(PrismaticTube { spec, n_strips })
    }

    /// Point at arc length `t` on crease `k`.
    pub fn crease_point(&self, k: usize, t: f64) -> Vec3 {
        let TubeSpec { a, alpha, .. } = self.spec;
        let phi = TAU * k as f64 / self.n_strips as f64 + t * sin(alpha) / a;
        Vec3::new(a * cos(phi), a * sin(phi), t * cos(alpha))
    }

    /// Offset along crease `k + 1` reached by a ruling from crease `k`.
    pub fn ruling_shift(&self) -> f64 {
        self.spec.h * tan(self.spec.alpha)
    }

    /// Point on strip `k` at crease parameter `t` and fraction `v` across.
    pub fn strip_point(&self, k: usize, t: f64, v: f64) -> Vec3 {
        self.crease_point(k, t)
            .lerp(self.crease_point(k + 1, t - self.ruling_shift()), v)
    }
}

/// Meshes a [`PrismaticTube`] with `nu` cells along the creases and `nv`
/// across each strip. Creases are tagged `Crease(k)`; the tube covers roughly
/// one circumference of crease length.
pub fn gen_twisted_prismatic_tube(
    spec: TubeSpec,
    n_strips: usize,
    nu: usize,
    nv: usize,
) -> Result<TriMesh> {
    let tube = PrismaticTube::new(spec, n_strips)?;
    check_resolution("nu", nu, 3)?;
    check_resolution("nv", nv, 3)?;

    // The ruling shift must be a whole number `j` of crease steps so rulings
    // land on crease vertices.
    let target_step = TAU * spec.a / nu as f64;
    let shift = tube.ruling_shift();
    let (step, j) = if shift == 0.0 {
        (target_step, 0usize)
    } else {
        let j = (round(shift / target_step) as usize).max(1);
        (shift / j as f64, j)
    };
    let n = n_strips;

    let mut b = MeshBuilder::new();
    // Crease k holds indices -j..=nu, stored at slot m + j.
    let creases: Vec<Vec<usize>> = (0..n)
        .map(|k| {
            (0..=nu + j)
                .map(|slot| {
                    let t = (slot as f64 - j as f64) * step;
                    b.vertex(tube.crease_point(k, t), VertexTag::Crease(k))
                })
                .collect()
        })
        .collect();

    for k in 0..n {
        let next = (k + 1) % n;
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(nv + 1);
        rows.push((0..=nu).map(|i| creases[k][i + j]).collect());
        for l in 1..nv {
            let v = l as f64 / nv as f64;
            rows.push(
                (0..=nu)
                    .map(|i| {
                        let t = i as f64 * step;
                        let p = b.position(creases[k][i + j]).lerp(b.position(creases[next][i]), v);
                        debug_assert!((p - tube.strip_point(k, t, v)).norm() < 1e-9 * spec.a);
                        b.vertex(p, VertexTag::Interior)
                    })
                    .collect(),
            );
        }
        rows.push((0..=nu).map(|i| creases[next][i]).collect());
        for l in 0..nv {
            for i in 0..nu {
                b.quad(rows[l][i], rows[l + 1][i], rows[l + 1][i + 1], rows[l][i + 1]);
            }
        }
    }
    for (k, chain) in creases.into_iter().enumerate() {
        b.crease(k, chain, false);
    }
    b.finish()
}
