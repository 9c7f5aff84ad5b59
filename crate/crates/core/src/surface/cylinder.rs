use alloc::vec::Vec;

use super::check_resolution;
use crate::curvature::TubeSpec;
use crate::error::Result;
use crate::math::{cos, round, sin, tan, Vec3, FRAC_PI_2, TAU};
use crate::mesh::{MeshBuilder, TriMesh, VertexTag};

/// Open circular cylinder of radius `a` with the drawn lines at angle `alpha`
/// to the axis tagged as (unfolded) crease polylines.
///
/// For `0 < alpha < pi/2` the grid is sheared so that each column follows a
/// helix, and the tube is one helical period long. At `alpha = 0` the lines
/// are generators; near `pi/2` they are hoops. Lines are spaced about `h`
/// apart.
pub fn gen_cylinder(spec: TubeSpec, nu: usize, nv: usize) -> Result<TriMesh> {
    spec.validate()?;
    check_resolution("nu", nu, 3)?;
    check_resolution("nv", nv, 3)?;
    let a = spec.a;
    let hoop_lines = spec.alpha > FRAC_PI_2 - 1e-6;
    let (length, shear) = if spec.alpha == 0.0 || hoop_lines {
        (TAU * a, 0.0)
    } else {
        let period = TAU * a / tan(spec.alpha);
        (period, TAU / nv as f64)
    };

    let mut b = MeshBuilder::new();
    let mut grid = Vec::with_capacity(nu * (nv + 1));
    for j in 0..=nv {
        let z = length * j as f64 / nv as f64;
        for i in 0..nu {
            let phi = TAU * i as f64 / nu as f64 + shear * j as f64;
            grid.push(b.vertex(Vec3::new(a * cos(phi), a * sin(phi), z), VertexTag::Interior));
        }
    }
    let at = |i: usize, j: usize| grid[j * nu + i % nu];
    for j in 0..nv {
        for i in 0..nu {
            b.quad(at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
        }
    }

    if hoop_lines {
        let count = (round(length / spec.h) as usize).clamp(1, nv);
        for (id, j) in spread(count, nv).into_iter().enumerate() {
            let chain: Vec<usize> = (0..nu).map(|i| at(i, j)).collect();
            tag_crease(&mut b, id, &chain);
            b.crease(id, chain, true);
        }
    } else {
        let count = (round(TAU * a * cos(spec.alpha) / spec.h) as usize).clamp(1, nu);
        for (id, i) in spread(count, nu).into_iter().enumerate() {
            let chain: Vec<usize> = (0..=nv).map(|j| at(i, j)).collect();
            tag_crease(&mut b, id, &chain);
            b.crease(id, chain, false);
        }
    }
    b.finish()
}

/// `count` distinct indices spread evenly over `0..span`.
fn spread(count: usize, span: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..count).map(|k| k * span / count).collect();
    out.dedup();
    out
}

fn tag_crease(b: &mut MeshBuilder, id: usize, chain: &[usize]) {
    for &v in chain {
        b.set_tag(v, VertexTag::Crease(id));
    }
}
