use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{KahanSum, PI, TAU};
use crate::mesh::{CreasePolyline, TriMesh, VertexTag};

/// Defect totals along one crease polyline.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CreaseDefect {
    pub id: usize,
    /// Vertices tagged with this crease (boundary and apex points excluded).
    pub vertices: usize,
    pub defect: f64,
    /// Arc length attributed to those vertices, half of each adjacent segment.
    pub length: f64,
    /// `defect / length`; NaN when no vertex contributes.
    pub rate: f64,
}

/// Discrete Gaussian curvature of a mesh.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DefectField {
    /// `2 pi - Σ angles` inside, `pi - Σ angles` on the boundary.
    pub per_vertex_defect: Vec<f64>,
    /// One third of the incident triangle areas.
    pub per_vertex_area: Vec<f64>,
    pub boundary: Vec<bool>,
    pub creases: Vec<CreaseDefect>,
    /// Sum over every non-boundary vertex.
    pub total_defect: f64,
    pub interior_defect: f64,
    pub interior_area: f64,
    pub interior_vertices: usize,
    pub apex_defect: f64,
    pub boundary_defect: f64,
}

impl DefectField {
    /// Defect per unit area over interior-tagged vertices.
    pub fn interior_curvature(&self) -> f64 {
        self.interior_defect / self.interior_area
    }

    pub fn crease(&self, id: usize) -> Option<&CreaseDefect> {
        self.creases.iter().find(|c| c.id == id)
    }

    /// Summed defect over every crease vertex.
    pub fn crease_defect(&self) -> f64 {
        crate::math::sum(self.creases.iter().map(|c| c.defect))
    }
}

/// Angle defect at every vertex, aggregated by vertex tag.
///
/// Boundary status comes from the topology; tags decide whether an interior
/// vertex counts as smooth surface, crease, or apex.
pub fn angle_defect(mesh: &TriMesh) -> Result<DefectField> {
    mesh.validate()?;
    let nv = mesh.vertices.len();
    let mut angle_sum = vec![0.0f64; nv];
    let mut area = vec![0.0f64; nv];
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let pts = mesh.triangle_points(t);
        let third = mesh.triangle_area(t) / 3.0;
        for k in 0..3 {
            let p = pts[k];
            let q = pts[(k + 1) % 3];
            let r = pts[(k + 2) % 3];
            angle_sum[tri[k]] += (q - p).angle(r - p);
            area[tri[k]] += third;
        }
    }
    let boundary = mesh.boundary_vertices();
    let defect: Vec<f64> = angle_sum
        .iter()
        .zip(&boundary)
        .map(|(&s, &b)| if b { PI - s } else { TAU - s })
        .collect();

    let mut total = KahanSum::new();
    let mut interior = KahanSum::new();
    let mut interior_area = KahanSum::new();
    let mut apex = KahanSum::new();
    let mut bnd = KahanSum::new();
    let mut interior_vertices = 0;
    for v in 0..nv {
        if boundary[v] {
            bnd.add(defect[v]);
            continue;
        }
        total.add(defect[v]);
        match mesh.vertex_tags[v] {
            VertexTag::Interior => {
                interior.add(defect[v]);
                interior_area.add(area[v]);
                interior_vertices += 1;
            }
            VertexTag::Apex => apex.add(defect[v]),
            VertexTag::Crease(_) | VertexTag::Boundary => {}
        }
    }

    let creases = mesh
        .creases
        .iter()
        .map(|c| crease_totals(mesh, c, &defect, &boundary))
        .collect();

    Ok(DefectField {
        per_vertex_defect: defect,
        per_vertex_area: area,
        boundary,
        creases,
        total_defect: total.value(),
        interior_defect: interior.value(),
        interior_area: interior_area.value(),
        interior_vertices,
        apex_defect: apex.value(),
        boundary_defect: bnd.value(),
    })
}

/// Half-interval arc length attributed to each polyline vertex.
fn attributed_lengths(mesh: &TriMesh, crease: &CreasePolyline) -> Vec<f64> {
    let pts = &crease.vertices;
    let m = pts.len();
    let seg = |a: usize, b: usize| (mesh.vertices[pts[b]] - mesh.vertices[pts[a]]).norm();
    (0..m)
        .map(|i| {
            let prev = if i > 0 {
                seg(i - 1, i)
            } else if crease.closed && m > 2 {
                seg(m - 1, 0)
            } else {
                0.0
            };
            let next = if i + 1 < m {
                seg(i, i + 1)
            } else if crease.closed && m > 2 {
                seg(m - 1, 0)
            } else {
                0.0
            };
            0.5 * (prev + next)
        })
        .collect()
}

fn counts(mesh: &TriMesh, id: usize, v: usize, boundary: &[bool]) -> bool {
    !boundary[v] && mesh.vertex_tags[v] == VertexTag::Crease(id)
}

fn crease_totals(mesh: &TriMesh, crease: &CreasePolyline, defect: &[f64], boundary: &[bool]) -> CreaseDefect {
    let lengths = attributed_lengths(mesh, crease);
    let mut d = KahanSum::new();
    let mut len = KahanSum::new();
    let mut count = 0;
    for (&v, &l) in crease.vertices.iter().zip(&lengths) {
        if counts(mesh, crease.id, v, boundary) {
            d.add(defect[v]);
            len.add(l);
            count += 1;
        }
    }
    let (defect, length) = (d.value(), len.value());
    CreaseDefect {
        id: crease.id,
        vertices: count,
        defect,
        length,
        rate: if count > 0 { defect / length } else { f64::NAN },
    }
}

/// Angle defect per unit length along crease `crease_id`.
pub fn crease_rate_estimate(mesh: &TriMesh, crease_id: usize) -> Result<f64> {
    let crease = mesh.crease(crease_id).ok_or(Error::MissingCrease(crease_id))?;
    if crease.vertices.len() < 3 {
        return Err(Error::ShortCrease {
            id: crease_id,
            count: crease.vertices.len(),
        });
    }
    let field = angle_defect(mesh)?;
    let c = field.crease(crease_id).ok_or(Error::MissingCrease(crease_id))?;
    if c.vertices == 0 {
        return Err(Error::ShortCrease {
            id: crease_id,
            count: 0,
        });
    }
    Ok(c.rate)
}

/// Defect rate at one crease vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LocalCreaseRate {
    pub vertex: usize,
    /// Arc length from the start of the polyline.
    pub arc_position: f64,
    pub rate: f64,
}

/// Per-vertex defect rates along a crease, for vertices that count toward it.
pub fn crease_local_rates(mesh: &TriMesh, field: &DefectField, crease_id: usize) -> Result<Vec<LocalCreaseRate>> {
    let crease = mesh.crease(crease_id).ok_or(Error::MissingCrease(crease_id))?;
    let lengths = attributed_lengths(mesh, crease);
    let mut out = Vec::new();
    let mut arc = 0.0;
    for (i, (&v, &l)) in crease.vertices.iter().zip(&lengths).enumerate() {
        if i > 0 {
            arc += (mesh.vertices[v] - mesh.vertices[crease.vertices[i - 1]]).norm();
        }
        if counts(mesh, crease_id, v, &field.boundary) {
            out.push(LocalCreaseRate {
                vertex: v,
                arc_position: arc,
                rate: field.per_vertex_defect[v] / l,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{sqrt, Vec3};
    use crate::mesh::tests::{tetrahedron, unit_triangle};
    use approx::assert_relative_eq;

    fn icosahedron() -> TriMesh {
        let p = (1.0 + sqrt(5.0)) / 2.0;
        let v = [
            (-1.0, p, 0.0),
            (1.0, p, 0.0),
            (-1.0, -p, 0.0),
            (1.0, -p, 0.0),
            (0.0, -1.0, p),
            (0.0, 1.0, p),
            (0.0, -1.0, -p),
            (0.0, 1.0, -p),
            (p, 0.0, -1.0),
            (p, 0.0, 1.0),
            (-p, 0.0, -1.0),
            (-p, 0.0, 1.0),
        ];
        let f = [
            [0, 11, 5],
            [0, 5, 1],
            [0, 1, 7],
            [0, 7, 10],
            [0, 10, 11],
            [1, 5, 9],
            [5, 11, 4],
            [11, 10, 2],
            [10, 7, 6],
            [7, 1, 8],
            [3, 9, 4],
            [3, 4, 2],
            [3, 2, 6],
            [3, 6, 8],
            [3, 8, 9],
            [4, 9, 5],
            [2, 4, 11],
            [6, 2, 10],
            [8, 6, 7],
            [9, 8, 1],
        ];
        TriMesh {
            vertices: v.iter().map(|&(x, y, z)| Vec3::new(x, y, z)).collect(),
            triangles: f.to_vec(),
            vertex_tags: vec![VertexTag::Interior; 12],
            creases: vec![],
        }
    }

    fn flat_grid(n: usize) -> TriMesh {
        let mut b = crate::mesh::MeshBuilder::new();
        let mut ids = Vec::new();
        for j in 0..=n {
            for i in 0..=n {
                // Irregular spacing, still planar.
                let x = i as f64 + 0.3 * ((i * 7 + j * 3) % 5) as f64 / 5.0;
                let y = j as f64 + 0.2 * ((i * 2 + j * 5) % 3) as f64 / 3.0;
                ids.push(b.vertex(Vec3::new(x, y, 0.0), VertexTag::Interior));
            }
        }
        let at = |i: usize, j: usize| ids[j * (n + 1) + i];
        for j in 0..n {
            for i in 0..n {
                b.quad(at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
            }
        }
        b.finish().unwrap()
    }

    #[test]
    fn flat_grid_has_no_interior_defect() {
        let f = angle_defect(&flat_grid(8)).unwrap();
        assert_eq!(f.interior_vertices, 49);
        for (d, b) in f.per_vertex_defect.iter().zip(&f.boundary) {
            if !b {
                assert!(d.abs() < 1e-13);
            }
        }
        // Boundary turning of a planar disc: Σ (pi - angles) = 2 pi.
        assert_relative_eq!(f.boundary_defect, TAU, epsilon = 1e-12);
    }

    #[test]
    fn icosahedron_vertices_carry_pi_over_three() {
        let mesh = icosahedron();
        let f = angle_defect(&mesh).unwrap();
        for d in &f.per_vertex_defect {
            assert_relative_eq!(*d, PI / 3.0, epsilon = 1e-13);
        }
        assert_relative_eq!(f.total_defect, 4.0 * PI, epsilon = 1e-12);
        assert_eq!(mesh.euler_characteristic(), 2);
    }

    #[test]
    fn tetrahedron_obeys_gauss_bonnet() {
        let f = angle_defect(&tetrahedron()).unwrap();
        assert_relative_eq!(f.total_defect, 4.0 * PI, epsilon = 1e-12);
        for d in &f.per_vertex_defect {
            assert_relative_eq!(*d, PI, epsilon = 1e-13);
        }
    }

    #[test]
    fn inconsistent_orientation_is_an_error() {
        let mut m = icosahedron();
        m.triangles[4].swap(0, 1);
        assert!(matches!(angle_defect(&m), Err(Error::Orientation(..))));
    }

    #[test]
    fn crease_lookup_errors() {
        let mut m = unit_triangle();
        assert!(matches!(crease_rate_estimate(&m, 0), Err(Error::MissingCrease(0))));
        m.creases.push(CreasePolyline {
            id: 0,
            vertices: vec![0, 1],
            closed: false,
        });
        assert!(matches!(crease_rate_estimate(&m, 0), Err(Error::ShortCrease { id: 0, count: 2 })));
        m.creases[0].vertices = vec![0, 1, 2];
        // Every vertex is on the boundary, so nothing contributes.
        assert!(matches!(crease_rate_estimate(&m, 0), Err(Error::ShortCrease { count: 0, .. })));
    }

    #[test]
    fn half_interval_lengths() {
        let mut m = flat_grid(2);
        let chain = vec![3, 4, 5];
        let crease = CreasePolyline {
            id: 1,
            vertices: chain.clone(),
            closed: false,
        };
        let l = attributed_lengths(&m, &crease);
        let total: f64 = l.iter().sum();
        assert_relative_eq!(total, m.crease_length(&crease), epsilon = 1e-14);
        m.creases.push(crease);
        m.vertex_tags[4] = VertexTag::Crease(1);
        let f = angle_defect(&m).unwrap();
        let c = f.crease(1).unwrap();
        assert_eq!(c.vertices, 1);
        assert_relative_eq!(c.length, l[1]);
    }
}
