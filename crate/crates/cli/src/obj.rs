//! Wavefront OBJ export and import with crease groups.
//!
//! Layout: an optional `# spec <json>` comment, `v` records with nine
//! significant digits, 1-based `f` records, then one `g crease_<id>` group per
//! crease holding a single `l` record. Closed creases repeat their first index.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use crease_core::{CreasePolyline, TriMesh, Vec3, VertexTag};

/// Header comment prefix that carries the generating spec.
pub const SPEC_PREFIX: &str = "# spec ";

#[derive(Debug, thiserror::Error)]
pub enum ObjError {
    #[error("refusing to write an empty mesh")]
    EmptyMesh,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Mesh read back from OBJ, with the parameter header if present.
#[derive(Debug, Clone)]
pub struct ObjMesh {
    pub mesh: TriMesh,
    pub spec: Option<String>,
}

fn fmt_coord(out: &mut String, x: f64) {
    // Avoid a "-0" that would differ from "0" in byte comparisons.
    let x = if x == 0.0 { 0.0 } else { x };
    let _ = write!(out, "{x:.8e}");
}

/// Serializes `mesh` to OBJ text.
pub fn to_obj_string(mesh: &TriMesh, spec: Option<&str>) -> Result<String, ObjError> {
    if mesh.is_empty() {
        return Err(ObjError::EmptyMesh);
    }
    let mut out = String::with_capacity(mesh.vertices.len() * 48 + mesh.triangles.len() * 24);
    if let Some(spec) = spec {
        out.push_str(SPEC_PREFIX);
        out.push_str(spec);
        out.push('\n');
    }
    for v in &mesh.vertices {
        out.push('v');
        for x in [v.x, v.y, v.z] {
            out.push(' ');
            fmt_coord(&mut out, x);
        }
        out.push('\n');
    }
    for t in &mesh.triangles {
        let _ = writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1);
    }
    for c in &mesh.creases {
        let _ = writeln!(out, "g crease_{}", c.id);
        out.push('l');
        let first = c.vertices.first().copied();
        for v in c.vertices.iter().copied().chain(first.filter(|_| c.closed)) {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn write_obj<W: Write>(mesh: &TriMesh, spec: Option<&str>, mut w: W) -> Result<(), ObjError> {
    w.write_all(to_obj_string(mesh, spec)?.as_bytes())?;
    w.flush()?;
    Ok(())
}

/// Reads OBJ text. Vertices on one crease are tagged with it, vertices shared
/// by several creases become apexes, and boundary tags come from topology.
pub fn read_obj<R: BufRead>(r: R) -> Result<ObjMesh, ObjError> {
    let mut vertices = Vec::new();
    let mut triangles = Vec::new();
    let mut chains: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut group: Option<usize> = None;
    let mut spec = None;

    for (n, line) in r.lines().enumerate() {
        let line = line?;
        let lineno = n + 1;
        let err = |message: String| ObjError::Parse { line: lineno, message };
        if let Some(rest) = line.strip_prefix(SPEC_PREFIX) {
            spec = Some(rest.trim().to_string());
            continue;
        }
        let mut fields = line.split_whitespace();
        let Some(kind) = fields.next() else { continue };
        match kind {
            "v" => {
                let xs: Vec<f64> = fields
                    .take(3)
                    .map(|s| s.parse::<f64>().map_err(|e| err(format!("bad coordinate {s:?}: {e}"))))
                    .collect::<Result<_, _>>()?;
                if xs.len() != 3 || xs.iter().any(|x| !x.is_finite()) {
                    return Err(err("vertex needs three finite coordinates".into()));
                }
                vertices.push(Vec3::new(xs[0], xs[1], xs[2]));
            }
            "f" => {
                let idx = fields
                    .map(|s| index(s, vertices.len()).map_err(&err))
                    .collect::<Result<Vec<_>, _>>()?;
                if idx.len() != 3 {
                    return Err(err(format!("only triangles are supported, got {} corners", idx.len())));
                }
                triangles.push([idx[0], idx[1], idx[2]]);
            }
            "g" => {
                let name = fields.next().unwrap_or("");
                group = match name.strip_prefix("crease_") {
                    Some(id) => Some(id.parse().map_err(|_| err(format!("bad crease group {name:?}")))?),
                    None => None,
                };
            }
            "l" => {
                let Some(id) = group else {
                    return Err(err("polyline outside a crease group".into()));
                };
                let idx = fields
                    .map(|s| index(s, vertices.len()).map_err(&err))
                    .collect::<Result<Vec<_>, _>>()?;
                if chains.insert(id, idx).is_some() {
                    return Err(err(format!("crease {id} defined twice")));
                }
            }
            "#" | "o" | "s" | "vn" | "vt" | "mtllib" | "usemtl" => {}
            _ if kind.starts_with('#') => {}
            other => return Err(err(format!("unsupported record {other:?}"))),
        }
    }

    let mut tags = vec![VertexTag::Interior; vertices.len()];
    let mut seen: Vec<Option<usize>> = vec![None; vertices.len()];
    let mut creases = Vec::with_capacity(chains.len());
    for (id, mut chain) in chains {
        let closed = chain.len() > 2 && chain.first() == chain.last();
        if closed {
            chain.pop();
        }
        for &v in &chain {
            match seen[v] {
                None => {
                    seen[v] = Some(id);
                    tags[v] = VertexTag::Crease(id);
                }
                Some(prev) if prev != id => tags[v] = VertexTag::Apex,
                Some(_) => {}
            }
        }
        creases.push(CreasePolyline {
            id,
            vertices: chain,
            closed,
        });
    }
    let mut mesh = TriMesh {
        vertices,
        triangles,
        vertex_tags: tags,
        creases,
    };
    let boundary = mesh.boundary_vertices();
    for (tag, b) in mesh.vertex_tags.iter_mut().zip(boundary) {
        if b {
            *tag = VertexTag::Boundary;
        }
    }
    Ok(ObjMesh { mesh, spec })
}

fn index(s: &str, count: usize) -> Result<usize, String> {
    let head = s.split('/').next().unwrap_or(s);
    let i: i64 = head.parse().map_err(|_| format!("bad index {s:?}"))?;
    let resolved = if i > 0 { i - 1 } else { count as i64 + i };
    if i == 0 || resolved < 0 || resolved >= count as i64 {
        return Err(format!("index {i} out of range for {count} vertices"));
    }
    Ok(resolved as usize)
}
