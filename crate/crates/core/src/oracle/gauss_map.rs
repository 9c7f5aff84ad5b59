use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{abs, atan2, KahanSum, Vec3};

/// Relative central-difference step for surface normals.
pub const FD_RELATIVE_STEP: f64 = 1e-5;

/// Signed area of the spherical triangle `a b c` on the unit sphere, positive
/// when the vertices run counter-clockwise seen from outside.
///
/// Uses the half-angle form `tan(E/2) = a·(b×c) / (1 + a·b + b·c + c·a)`.
pub fn spherical_triangle_area(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    let triple = a.dot(b.cross(c));
    let denom = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    2.0 * atan2(triple, denom)
}

/// Signed area of a spherical polygon, fanned from its first vertex.
pub fn spherical_polygon_area(vertices: &[Vec3]) -> f64 {
    match vertices {
        [first, rest @ ..] if rest.len() >= 2 => rest
            .windows(2)
            .map(|w| spherical_triangle_area(*first, w[0], w[1]))
            .collect::<KahanSum>()
            .value(),
        _ => 0.0,
    }
}

/// Unit normal `X_u × X_v` by central differences with step `step`.
pub fn surface_normal<F: Fn(f64, f64) -> Vec3>(f: &F, u: f64, v: f64, step: f64) -> Result<Vec3> {
    let xu = (f(u + step, v) - f(u - step, v)) / (2.0 * step);
    let xv = (f(u, v + step) - f(u, v - step)) / (2.0 * step);
    let n = xu.cross(xv);
    let scale = xu.norm() * xv.norm();
    if !(n.norm() > 1e-12 * scale) {
        return Err(Error::DegenerateNormal { u, v });
    }
    n.normalized().ok_or(Error::DegenerateNormal { u, v })
}

/// Corner normals of a parameter patch and the signed area of their image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussMapSample {
    /// Normals at `(u0, v0)`, `(u0+du, v0)`, `(u0+du, v0+dv)`, `(u0, v0+dv)`.
    pub corner_normals: [Vec3; 4],
    pub signed_solid_angle: f64,
}

/// Maps the four corner normals of a patch to the unit sphere and measures the
/// spherical quadrilateral they span. The sign is negative when the image
/// reverses the cyclic order of the corners.
pub fn gauss_map_patch<F: Fn(f64, f64) -> Vec3>(
    surface: F,
    u0: f64,
    v0: f64,
    du: f64,
    dv: f64,
) -> Result<GaussMapSample> {
    let step = FD_RELATIVE_STEP * abs(du).max(abs(dv));
    if !(step > 0.0) {
        return Err(Error::param("du", du, "a non-empty patch"));
    }
    let corners = [(u0, v0), (u0 + du, v0), (u0 + du, v0 + dv), (u0, v0 + dv)];
    let mut normals = [Vec3::ZERO; 4];
    for (n, &(u, v)) in normals.iter_mut().zip(&corners) {
        *n = surface_normal(&surface, u, v, step)?;
    }
    Ok(GaussMapSample {
        corner_normals: normals,
        signed_solid_angle: quad_area(&normals),
    })
}

fn quad_area(n: &[Vec3; 4]) -> f64 {
    spherical_triangle_area(n[0], n[1], n[2]) + spherical_triangle_area(n[0], n[2], n[3])
}

/// Rectangle `[u0, u1] x [v0, v1]` in parameter space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRect {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

impl ParamRect {
    pub fn new(u0: f64, u1: f64, v0: f64, v1: f64) -> Self {
        ParamRect { u0, u1, v0, v1 }
    }
}

/// Result of [`gauss_map_integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussMapIntegral {
    /// Sum of patch images at the requested resolution.
    pub value: f64,
    /// Richardson estimate from this level and the half-resolution level,
    /// assuming second-order convergence.
    pub extrapolated: f64,
    /// `|value - half| / 3`.
    pub error_indicator: f64,
    pub nu: usize,
    pub nv: usize,
}

/// Total signed solid angle of a parametric region, summed over an `nu x nv`
/// grid of Gauss-map patches.
///
/// `nu` and `nv` must be multiples of 4: the half and quarter resolution sums
/// reuse the same normals and drive the extrapolation and the convergence
/// check. Non-convergence is reported when the last refinement changes the
/// value by more than ten times the indicator of the previous one.
pub fn gauss_map_integrate<F: Fn(f64, f64) -> Vec3>(
    surface: F,
    region: ParamRect,
    nu: usize,
    nv: usize,
) -> Result<GaussMapIntegral> {
    for (name, n) in [("nu", nu), ("nv", nv)] {
        if n < 4 || n % 4 != 0 {
            return Err(Error::param(name, n as f64, "a positive multiple of 4"));
        }
    }
    let du = (region.u1 - region.u0) / nu as f64;
    let dv = (region.v1 - region.v0) / nv as f64;
    let step = FD_RELATIVE_STEP * abs(du).max(abs(dv));
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::param("region", du, "a non-empty finite region"));
    }
    let mut normals = Vec::with_capacity((nu + 1) * (nv + 1));
    for j in 0..=nv {
        let v = region.v0 + dv * j as f64;
        for i in 0..=nu {
            let u = region.u0 + du * i as f64;
            normals.push(surface_normal(&surface, u, v, step)?);
        }
    }
    let at = |i: usize, j: usize| normals[j * (nu + 1) + i];
    let level = |stride: usize| {
        let mut total = KahanSum::new();
        for j in (0..nv).step_by(stride) {
            for i in (0..nu).step_by(stride) {
                total.add(quad_area(&[
                    at(i, j),
                    at(i + stride, j),
                    at(i + stride, j + stride),
                    at(i, j + stride),
                ]));
            }
        }
        total.value()
    };
    let (fine, half, quarter) = (level(1), level(2), level(4));
    let change = abs(fine - half);
    let indicator = change / 3.0;
    let previous_indicator = abs(half - quarter) / 3.0;
    let floor = 1e-12 * fine.abs().max(1.0);
    if change > floor && change > 10.0 * previous_indicator {
        return Err(Error::GaussMapNonConvergence {
            value: fine,
            change,
            indicator: previous_indicator,
        });
    }
    Ok(GaussMapIntegral {
        value: fine,
        extrapolated: fine + (fine - half) / 3.0,
        error_indicator: indicator,
        nu,
        nv,
    })
}
