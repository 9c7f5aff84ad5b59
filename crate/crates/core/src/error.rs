use crate::quadrature::QuadratureResult;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: expected {expected}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("resolution `{name}` = {value} is too low (minimum {min})")]
    Resolution {
        name: &'static str,
        value: usize,
        min: usize,
    },

    #[error("strips do not close around the tube: hoop gap {gap:.3e}")]
    Closure { gap: f64 },

    #[error("mesh is empty")]
    EmptyMesh,

    #[error("triangle {triangle} references vertex {vertex} out of range")]
    IndexOutOfRange { triangle: usize, vertex: usize },

    #[error("triangle {0} is degenerate")]
    DegenerateTriangle(usize),

    #[error("inconsistent orientation on edge ({0}, {1})")]
    Orientation(usize, usize),

    #[error("edge ({0}, {1}) is shared by more than two triangles")]
    NonManifoldEdge(usize, usize),

    #[error("crease {0} is not a simple vertex chain")]
    NonSimpleCrease(usize),

    #[error("crease {0} does not exist")]
    MissingCrease(usize),

    #[error("crease {id} has too few usable vertices ({count})")]
    ShortCrease { id: usize, count: usize },

    #[error("surface normal is degenerate at ({u}, {v})")]
    DegenerateNormal { u: f64, v: f64 },

    #[error("quadrature did not converge: best estimate {best:?}")]
    QuadratureNonConvergence { best: QuadratureResult },

    #[error("Gauss map refinement did not converge: change {change:.3e} vs indicator {indicator:.3e}")]
    GaussMapNonConvergence {
        value: f64,
        change: f64,
        indicator: f64,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            expected,
        }
    }
}
