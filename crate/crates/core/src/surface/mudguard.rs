use alloc::vec::Vec;

use super::check_resolution;
use crate::error::{Error, Result};
use crate::math::{cos, sin, Vec3, FRAC_PI_2, PI, TAU};
use crate::mesh::{MeshBuilder, TriMesh, VertexTag};

/// Narrow doubly curved band that smooths a curved crease: a transverse arc of
/// radius `r` subtending `2 mu`, swept around an axis.
///
/// The arc centre sits `R - r` from the axis, so the crown is at distance `R`
/// and the arc ends at `R - r (1 - cos mu)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MudguardSpec {
    /// Sweep radius `R`.
    pub radius: f64,
    /// Transverse arc radius `r`.
    pub r: f64,
    /// Half arc angle.
    pub mu: f64,
}

impl MudguardSpec {
    pub fn new(radius: f64, r: f64, mu: f64) -> Result<Self> {
        let spec = MudguardSpec { radius, r, mu };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::param("R", self.radius, "a finite radius > 0"));
        }
        if !(self.r > 0.0 && self.r < 0.5 * self.radius) {
            return Err(Error::param("r", self.r, "a radius in (0, R/2)"));
        }
        if !(self.mu > 0.0 && self.mu < FRAC_PI_2) {
            return Err(Error::param("mu", self.mu, "a half angle in (0, pi/2)"));
        }
        Ok(())
    }

    /// Distance from the axis of the arc ends, `R - r (1 - cos mu)`.
    pub fn rim_radius(&self) -> f64 {
        self.radius - self.r * (1.0 - cos(self.mu))
    }

    /// Model curvature in the swept direction at transverse angle `eps`,
    /// `cos(eps) / (R - r (1 - cos mu))`. It is exact at the arc ends and
    /// within `O(r/R)` elsewhere.
    pub fn swept_curvature(&self, eps: f64) -> f64 {
        cos(eps) / self.rim_radius()
    }

    /// `4 pi R sin(mu) / (R - r (1 - cos mu))`.
    pub fn closed_form_total(&self) -> f64 {
        4.0 * PI * self.radius * sin(self.mu) / self.rim_radius()
    }

    /// Surface point at sweep angle `phi` and transverse angle `eps`.
    pub fn point(&self, phi: f64, eps: f64) -> Vec3 {
        let rho = self.radius - self.r + self.r * cos(eps);
        Vec3::new(rho * cos(phi), rho * sin(phi), self.r * sin(eps))
    }
}

/// Meshes the full hoop with `nu` cells around and `nv` across.
pub fn gen_mudguard(spec: MudguardSpec, nu: usize, nv: usize) -> Result<TriMesh> {
    spec.validate()?;
    check_resolution("nu", nu, 3)?;
    check_resolution("nv", nv, 1)?;
    let mut b = MeshBuilder::new();
    let mut grid = Vec::with_capacity(nu * (nv + 1));
    for l in 0..=nv {
        let eps = -spec.mu + 2.0 * spec.mu * l as f64 / nv as f64;
        for i in 0..nu {
            let phi = TAU * i as f64 / nu as f64;
            grid.push(b.vertex(spec.point(phi, eps), VertexTag::Interior));
        }
    }
    let at = |i: usize, l: usize| grid[l * nu + i % nu];
    for l in 0..nv {
        for i in 0..nu {
            b.quad(at(i, l), at(i + 1, l), at(i + 1, l + 1), at(i, l + 1));
        }
    }
    b.finish()
}
