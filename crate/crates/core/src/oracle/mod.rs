//! Independent numerical checks for the closed forms: discrete angle defect on
//! meshes and numerical Gauss maps on parametric surfaces.

mod defect;
mod gauss_map;

pub use defect::{
    angle_defect, crease_local_rates, crease_rate_estimate, CreaseDefect, DefectField, LocalCreaseRate,
};
pub use gauss_map::{
    gauss_map_integrate, gauss_map_patch, spherical_polygon_area, spherical_triangle_area, surface_normal,
    GaussMapIntegral, GaussMapSample, ParamRect,
};
