//! Indexed triangle meshes with vertex tags and crease polylines.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::Vec3;

/// Role of a vertex in curvature accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum VertexTag {
    Interior,
    /// On the crease polyline with this id.
    Crease(usize),
    /// On the mesh boundary. Takes precedence over every other tag.
    Boundary,
    /// Cone point shared by several creases, such as the pole of a gore sphere.
    Apex,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CreasePolyline {
    pub id: usize,
    pub vertices: Vec<usize>,
    /// The chain returns from its last vertex to its first.
    pub closed: bool,
}

/// Triangle mesh; triangles are counter-clockwise seen from the outward side.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TriMesh {
    pub vertices: Vec<Vec3>,
    pub triangles: Vec<[usize; 3]>,
    pub vertex_tags: Vec<VertexTag>,
    pub creases: Vec<CreasePolyline>,
}

/// Undirected edge with the triangles using it, in triangle order.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeUse {
    pub a: usize,
    pub b: usize,
    /// `(triangle, traversed a -> b)`.
    pub uses: Vec<(usize, bool)>,
}

impl TriMesh {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() || self.triangles.is_empty()
    }

    pub fn crease(&self, id: usize) -> Option<&CreasePolyline> {
        self.creases.iter().find(|c| c.id == id)
    }

    pub fn triangle_points(&self, t: usize) -> [Vec3; 3] {
        let [a, b, c] = self.triangles[t];
        [self.vertices[a], self.vertices[b], self.vertices[c]]
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        let [p, q, r] = self.triangle_points(t);
        0.5 * (q - p).cross(r - p).norm()
    }

    /// Diagonal of the axis-aligned bounding box.
    pub fn bbox_diagonal(&self) -> f64 {
        let mut lo = Vec3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY);
        let mut hi = -lo;
        for v in &self.vertices {
            lo = Vec3::new(lo.x.min(v.x), lo.y.min(v.y), lo.z.min(v.z));
            hi = Vec3::new(hi.x.max(v.x), hi.y.max(v.y), hi.z.max(v.z));
        }
        if self.vertices.is_empty() {
            0.0
        } else {
            (hi - lo).norm()
        }
    }

    /// All undirected edges, sorted by `(min, max)` vertex index.
    pub fn edges(&self) -> Vec<EdgeUse> {
        let mut directed: Vec<(usize, usize, usize, bool)> = Vec::with_capacity(3 * self.triangles.len());
        for (t, tri) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                let (p, q) = (tri[k], tri[(k + 1) % 3]);
                directed.push((p.min(q), p.max(q), t, p < q));
            }
        }
        directed.sort_unstable();
        let mut out: Vec<EdgeUse> = Vec::new();
        for (a, b, t, fwd) in directed {
            match out.last_mut() {
                Some(e) if e.a == a && e.b == b => e.uses.push((t, fwd)),
                _ => out.push(EdgeUse {
                    a,
                    b,
                    uses: vec![(t, fwd)],
                }),
            }
        }
        out
    }

    /// Per-vertex flag: lies on an edge used by exactly one triangle.
    pub fn boundary_vertices(&self) -> Vec<bool> {
        let mut on = vec![false; self.vertices.len()];
        for e in self.edges() {
            if e.uses.len() == 1 {
                on[e.a] = true;
                on[e.b] = true;
            }
        }
        on
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges().len() as i64 + self.triangles.len() as i64
    }

    /// No boundary edges.
    pub fn is_closed(&self) -> bool {
        self.edges().iter().all(|e| e.uses.len() == 2)
    }

    /// Length of a crease polyline, including the closing segment when closed.
    pub fn crease_length(&self, crease: &CreasePolyline) -> f64 {
        let pts = &crease.vertices;
        let open: f64 = pts
            .windows(2)
            .map(|w| (self.vertices[w[1]] - self.vertices[w[0]]).norm())
            .sum();
        match (crease.closed, pts.first(), pts.last()) {
            (true, Some(&f), Some(&l)) if pts.len() > 2 => open + (self.vertices[f] - self.vertices[l]).norm(),
            _ => open,
        }
    }

    /// Checks indices, degeneracy, orientation, manifoldness and crease chains.
    pub fn validate(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyMesh);
        }
        let nv = self.vertices.len();
        for (t, tri) in self.triangles.iter().enumerate() {
            if let Some(&v) = tri.iter().find(|&&v| v >= nv) {
                return Err(Error::IndexOutOfRange { triangle: t, vertex: v });
            }
        }
        let diag = self.bbox_diagonal();
        let min_area = 1e-12 * diag * diag;
        for t in 0..self.triangles.len() {
            let [a, b, c] = self.triangles[t];
            if a == b || b == c || a == c || !(self.triangle_area(t) > min_area) {
                return Err(Error::DegenerateTriangle(t));
            }
        }
        for e in self.edges() {
            match e.uses.as_slice() {
                [_] => {}
                [(_, f1), (_, f2)] => {
                    if f1 == f2 {
                        return Err(Error::Orientation(e.a, e.b));
                    }
                }
                _ => return Err(Error::NonManifoldEdge(e.a, e.b)),
            }
        }
        if self.vertex_tags.len() != nv {
            return Err(Error::param(
                "vertex_tags",
                self.vertex_tags.len() as f64,
                "one tag per vertex",
            ));
        }
        for c in &self.creases {
            let mut seen = c.vertices.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != c.vertices.len() || c.vertices.iter().any(|&v| v >= nv) {
                return Err(Error::NonSimpleCrease(c.id));
            }
        }
        Ok(())
    }
}

/// Incremental mesh assembly used by the surface generators.
#[derive(Debug, Default)]
pub(crate) struct MeshBuilder {
    mesh: TriMesh,
}

impl MeshBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, p: Vec3, tag: VertexTag) -> usize {
        self.mesh.vertices.push(p);
        self.mesh.vertex_tags.push(tag);
        self.mesh.vertices.len() - 1
    }

    pub fn set_tag(&mut self, v: usize, tag: VertexTag) {
        self.mesh.vertex_tags[v] = tag;
    }

    pub fn position(&self, v: usize) -> Vec3 {
        self.mesh.vertices[v]
    }

    pub fn triangle(&mut self, a: usize, b: usize, c: usize) {
        self.mesh.triangles.push([a, b, c]);
    }

    /// Quad `a b c d` in counter-clockwise order, split along the shorter diagonal.
    pub fn quad(&mut self, a: usize, b: usize, c: usize, d: usize) {
        let ac = (self.position(c) - self.position(a)).norm_squared();
        let bd = (self.position(d) - self.position(b)).norm_squared();
        if ac <= bd {
            self.triangle(a, b, c);
            self.triangle(a, c, d);
        } else {
            self.triangle(a, b, d);
            self.triangle(b, c, d);
        }
    }

    pub fn crease(&mut self, id: usize, vertices: Vec<usize>, closed: bool) {
        self.mesh.creases.push(CreasePolyline { id, vertices, closed });
    }

    /// Tags boundary vertices and validates the result.
    pub fn finish(mut self) -> Result<TriMesh> {
        let boundary = self.mesh.boundary_vertices();
        for (tag, on) in self.mesh.vertex_tags.iter_mut().zip(boundary) {
            if on {
                *tag = VertexTag::Boundary;
            }
        }
        self.mesh.validate()?;
        Ok(self.mesh)
    }
}
