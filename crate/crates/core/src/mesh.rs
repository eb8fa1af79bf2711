//! Conforming triangular meshes of a rectangle with fully periodic (torus)
//! topology.
//!
//! The mesh stores the physical sheet: boundary vertices and edges exist in
//! duplicate copies and are identified by coordinate matching modulo the
//! domain extent. Identified edge classes carry a canonical direction, fixed
//! from lower to higher canonical vertex index, which downstream modules use
//! to orient Raviart-Thomas degrees of freedom deterministically.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Cell subdivision used by [`Mesh::periodic_rect`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshPattern {
    /// Two triangles per cell, split along the SW-NE diagonal.
    Diagonal,
    /// Four triangles per cell around a center vertex.
    Crisscross,
}

impl std::str::FromStr for MeshPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diagonal" => Ok(MeshPattern::Diagonal),
            "crisscross" => Ok(MeshPattern::Crisscross),
            other => Err(Error::InvalidArgument(format!(
                "unknown mesh pattern '{other}' (expected 'diagonal' or 'crisscross')"
            ))),
        }
    }
}

/// Affine map from the reference triangle `{(0,0),(1,0),(0,1)}` onto a
/// physical triangle.
#[derive(Debug, Clone)]
pub struct AffineMap {
    pub origin: [f64; 2],
    /// Row-major Jacobian; columns are the mapped edge vectors.
    pub jacobian: [[f64; 2]; 2],
    pub det: f64,
    pub inv_transpose: [[f64; 2]; 2],
}

impl AffineMap {
    fn new(v0: [f64; 2], v1: [f64; 2], v2: [f64; 2]) -> Self {
        let j = [
            [v1[0] - v0[0], v2[0] - v0[0]],
            [v1[1] - v0[1], v2[1] - v0[1]],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        let inv_transpose = [
            [j[1][1] / det, -j[1][0] / det],
            [-j[0][1] / det, j[0][0] / det],
        ];
        AffineMap {
            origin: v0,
            jacobian: j,
            det,
            inv_transpose,
        }
    }

    /// Physical coordinates of a reference point.
    pub fn apply(&self, p: [f64; 2]) -> [f64; 2] {
        [
            self.origin[0] + self.jacobian[0][0] * p[0] + self.jacobian[0][1] * p[1],
            self.origin[1] + self.jacobian[1][0] * p[0] + self.jacobian[1][1] * p[1],
        ]
    }

    /// `J v` for a reference vector `v`.
    pub fn apply_jacobian(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.jacobian[0][0] * v[0] + self.jacobian[0][1] * v[1],
            self.jacobian[1][0] * v[0] + self.jacobian[1][1] * v[1],
        ]
    }

    /// `J^{-T} g` for a reference gradient `g`.
    pub fn apply_inv_transpose(&self, g: [f64; 2]) -> [f64; 2] {
        [
            self.inv_transpose[0][0] * g[0] + self.inv_transpose[0][1] * g[1],
            self.inv_transpose[1][0] * g[0] + self.inv_transpose[1][1] * g[1],
        ]
    }
}

/// Reference from a triangle to one of its (identified) edges.
#[derive(Debug, Clone, Copy)]
pub struct EdgeRef {
    pub edge: usize,
    /// True when the triangle's counter-clockwise traversal of the edge runs
    /// against the edge class's canonical direction.
    pub reversed: bool,
}

/// An identified (torus) edge: one or two physical copies, always exactly two
/// incident triangles.
#[derive(Debug, Clone)]
pub struct EdgeClass {
    /// Physical endpoints of the representative copy, ordered along the
    /// canonical direction.
    pub rep: [usize; 2],
    /// Incident `(triangle, local edge)` pairs.
    pub tris: [(usize, u8); 2],
}

/// Periodic triangulation of `[0, Lx] x [0, Ly]`.
#[derive(Debug, Clone)]
pub struct Mesh {
    vertices: Vec<[f64; 2]>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<EdgeClass>,
    tri_edges: Vec<[EdgeRef; 3]>,
    vertex_canon: Vec<usize>,
    n_canon_vertices: usize,
    domain: [f64; 2],
    maps: Vec<AffineMap>,
    tol: f64,
}

impl Mesh {
    /// Structured periodic mesh of `nx * ny` cells.
    pub fn periodic_rect(
        nx: usize,
        ny: usize,
        lx: f64,
        ly: f64,
        pattern: MeshPattern,
    ) -> Result<Mesh> {
        if nx < 1 || ny < 1 {
            return Err(Error::InvalidArgument(format!(
                "cell counts must be at least 1, got {nx} x {ny}"
            )));
        }
        if !(lx > 0.0) || !(ly > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "domain extents must be positive, got {lx} x {ly}"
            )));
        }
        let dx = lx / nx as f64;
        let dy = ly / ny as f64;
        let grid = |i: usize, j: usize| j * (nx + 1) + i;
        let mut vertices = Vec::new();
        for j in 0..=ny {
            for i in 0..=nx {
                vertices.push([i as f64 * dx, j as f64 * dy]);
            }
        }
        let mut triangles = Vec::new();
        match pattern {
            MeshPattern::Diagonal => {
                for j in 0..ny {
                    for i in 0..nx {
                        let (a, b, c, d) = (
                            grid(i, j),
                            grid(i + 1, j),
                            grid(i + 1, j + 1),
                            grid(i, j + 1),
                        );
                        triangles.push([a, b, c]);
                        triangles.push([a, c, d]);
                    }
                }
            }
            MeshPattern::Crisscross => {
                let base = vertices.len();
                for j in 0..ny {
                    for i in 0..nx {
                        vertices.push([(i as f64 + 0.5) * dx, (j as f64 + 0.5) * dy]);
                    }
                }
                for j in 0..ny {
                    for i in 0..nx {
                        let (a, b, c, d) = (
                            grid(i, j),
                            grid(i + 1, j),
                            grid(i + 1, j + 1),
                            grid(i, j + 1),
                        );
                        let m = base + j * nx + i;
                        triangles.push([a, b, m]);
                        triangles.push([b, c, m]);
                        triangles.push([c, d, m]);
                        triangles.push([d, a, m]);
                    }
                }
            }
        }
        Mesh::build(vertices, triangles, [lx, ly])
    }

    /// Parse the plain-text mesh format.
    ///
    /// Line 1: `meevc-mesh 1`; line 2: `Lx Ly`; line 3: `nv nt`; then `nv`
    /// vertex lines `x y` and `nt` triangle lines `i j k` (0-based vertex
    /// indices). Anything after `#` on a line is a comment.
    pub fn parse(content: &str, origin: &Path) -> Result<Mesh> {
        let err = |line: usize, msg: String| Error::Parse {
            path: origin.to_path_buf(),
            line,
            msg,
        };
        let mut lines = content
            .lines()
            .enumerate()
            .map(|(k, raw)| {
                let text = raw.split('#').next().unwrap_or("").trim();
                (k + 1, text)
            })
            .filter(|(_, text)| !text.is_empty());
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| err(0, format!("unexpected end of file, expected {what}")))
        };

        let (ln, header) = next("header")?;
        if header != "meevc-mesh 1" {
            return Err(err(ln, format!("expected 'meevc-mesh 1', got '{header}'")));
        }
        let (ln, ext) = next("domain extent")?;
        let parts: Vec<&str> = ext.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(err(ln, "expected 'Lx Ly'".into()));
        }
        let lx: f64 = parts[0]
            .parse()
            .map_err(|e| err(ln, format!("bad Lx: {e}")))?;
        let ly: f64 = parts[1]
            .parse()
            .map_err(|e| err(ln, format!("bad Ly: {e}")))?;
        if !(lx > 0.0) || !(ly > 0.0) {
            return Err(err(ln, format!("domain extents must be positive, got {lx} {ly}")));
        }
        let (ln, counts) = next("counts")?;
        let parts: Vec<&str> = counts.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(err(ln, "expected 'nv nt'".into()));
        }
        let nv: usize = parts[0]
            .parse()
            .map_err(|e| err(ln, format!("bad vertex count: {e}")))?;
        let nt: usize = parts[1]
            .parse()
            .map_err(|e| err(ln, format!("bad triangle count: {e}")))?;

        let mut vertices = Vec::with_capacity(nv);
        for _ in 0..nv {
            let (ln, line) = next("vertex line")?;
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(err(ln, "expected 'x y'".into()));
            }
            let x: f64 = parts[0]
                .parse()
                .map_err(|e| err(ln, format!("bad x coordinate: {e}")))?;
            let y: f64 = parts[1]
                .parse()
                .map_err(|e| err(ln, format!("bad y coordinate: {e}")))?;
            vertices.push([x, y]);
        }
        let mut triangles = Vec::with_capacity(nt);
        for _ in 0..nt {
            let (ln, line) = next("triangle line")?;
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(err(ln, "expected 'i j k'".into()));
            }
            let mut tri = [0usize; 3];
            for (slot, part) in tri.iter_mut().zip(&parts) {
                let v: usize = part
                    .parse()
                    .map_err(|e| err(ln, format!("bad vertex index: {e}")))?;
                if v >= nv {
                    return Err(err(ln, format!("vertex index {v} out of range 0..{nv}")));
                }
                *slot = v;
            }
            triangles.push(tri);
        }
        if let Some((ln, line)) = lines.next() {
            return Err(err(ln, format!("trailing content: '{line}'")));
        }
        Mesh::build(vertices, triangles, [lx, ly])
    }

    /// Load a mesh file, validating all torus invariants.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Mesh> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Mesh::parse(&content, path)
    }

    /// Serialize in the plain-text mesh format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "meevc-mesh 1");
        let _ = writeln!(out, "{:.17e} {:.17e}", self.domain[0], self.domain[1]);
        let _ = writeln!(out, "{} {}", self.vertices.len(), self.triangles.len());
        for v in &self.vertices {
            let _ = writeln!(out, "{:.17e} {:.17e}", v[0], v[1]);
        }
        for t in &self.triangles {
            let _ = writeln!(out, "{} {} {}", t[0], t[1], t[2]);
        }
        out
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }

    fn build(vertices: Vec<[f64; 2]>, mut triangles: Vec<[usize; 3]>, domain: [f64; 2]) -> Result<Mesh> {
        let [lx, ly] = domain;
        let tol = 1e-10 * lx.max(ly);

        // Counter-clockwise ordering; reject degenerate triangles.
        let area_tol = 1e-14 * lx.max(ly) * lx.max(ly);
        for (t, tri) in triangles.iter_mut().enumerate() {
            let a = signed_area(&vertices, *tri);
            if a.abs() <= area_tol {
                return Err(Error::Geometry(format!(
                    "triangle {t} is degenerate (area {a:.3e})"
                )));
            }
            if a < 0.0 {
                tri.swap(1, 2);
            }
        }

        // Dangling vertices.
        let mut referenced = vec![false; vertices.len()];
        for tri in &triangles {
            for &v in tri {
                referenced[v] = true;
            }
        }
        if let Some(v) = referenced.iter().position(|r| !r) {
            return Err(Error::Topology(format!(
                "vertex {v} is not referenced by any triangle"
            )));
        }

        // Canonical vertex classes by coordinates modulo the domain extent.
        let wrapped: Vec<[f64; 2]> = vertices
            .iter()
            .map(|v| [wrap(v[0], lx, tol), wrap(v[1], ly, tol)])
            .collect();
        let raw_classes = cluster_rows(&wrapped, tol);
        let (vertex_canon, n_canon_vertices) = renumber_first_seen(&raw_classes);

        // Periodic partners differ by a lattice translation.
        let mut class_rep = vec![usize::MAX; n_canon_vertices];
        for (v, &c) in vertex_canon.iter().enumerate() {
            if class_rep[c] == usize::MAX {
                class_rep[c] = v;
            } else {
                let r = class_rep[c];
                let d = [
                    vertices[v][0] - vertices[r][0],
                    vertices[v][1] - vertices[r][1],
                ];
                if !is_lattice_vector(d, lx, ly, tol) {
                    return Err(Error::Topology(format!(
                        "vertices {r} and {v} identified but offset ({:.3e}, {:.3e}) is not a period",
                        d[0], d[1]
                    )));
                }
            }
        }

        // Physical edges from triangle connectivity.
        let mut phys_edge_ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut phys_edges: Vec<[usize; 2]> = Vec::new();
        let mut tri_phys: Vec<[usize; 3]> = Vec::with_capacity(triangles.len());
        for tri in &triangles {
            let mut ids = [0usize; 3];
            for k in 0..3 {
                let (p, q) = (tri[k], tri[(k + 1) % 3]);
                let key = (p.min(q), p.max(q));
                let id = *phys_edge_ids.entry(key).or_insert_with(|| {
                    phys_edges.push([key.0, key.1]);
                    phys_edges.len() - 1
                });
                ids[k] = id;
            }
            tri_phys.push(ids);
        }

        // Identify physical edges modulo translation: equal wrapped midpoint
        // and equal direction up to sign.
        let edge_keys: Vec<[f64; 4]> = phys_edges
            .iter()
            .map(|&[a, b]| {
                let (pa, pb) = (vertices[a], vertices[b]);
                let mid = [
                    wrap(0.5 * (pa[0] + pb[0]), lx, tol),
                    wrap(0.5 * (pa[1] + pb[1]), ly, tol),
                ];
                let mut d = [pb[0] - pa[0], pb[1] - pa[1]];
                if d[0] < -tol || (d[0].abs() <= tol && d[1] < 0.0) {
                    d = [-d[0], -d[1]];
                }
                [mid[0], mid[1], d[0], d[1]]
            })
            .collect();
        let raw_edge_classes = cluster_rows(&edge_keys, tol);
        let (edge_class_of_phys, n_edge_classes) = renumber_first_seen(&raw_edge_classes);

        // Representative copy per class: lexicographically smallest endpoint
        // pair; canonical direction from lower to higher canonical vertex
        // index, falling back to physical index order for self-loop classes.
        let mut rep_of_class: Vec<usize> = vec![usize::MAX; n_edge_classes];
        for (pe, &c) in edge_class_of_phys.iter().enumerate() {
            if rep_of_class[c] == usize::MAX || phys_edges[pe] < phys_edges[rep_of_class[c]] {
                rep_of_class[c] = pe;
            }
        }
        let mut class_rep_dir: Vec<[usize; 2]> = Vec::with_capacity(n_edge_classes);
        for c in 0..n_edge_classes {
            let [a, b] = phys_edges[rep_of_class[c]];
            let dir = if vertex_canon[a] != vertex_canon[b] {
                if vertex_canon[a] < vertex_canon[b] {
                    [a, b]
                } else {
                    [b, a]
                }
            } else {
                [a.min(b), a.max(b)]
            };
            class_rep_dir.push(dir);
        }

        // Incidences with orientation flags.
        let mut incidences: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n_edge_classes];
        let mut tri_edges: Vec<[EdgeRef; 3]> = Vec::with_capacity(triangles.len());
        for (t, tri) in triangles.iter().enumerate() {
            let mut refs = [EdgeRef {
                edge: 0,
                reversed: false,
            }; 3];
            for k in 0..3 {
                let c = edge_class_of_phys[tri_phys[t][k]];
                let (p, q) = (tri[k], tri[(k + 1) % 3]);
                let reversed = if vertex_canon[p] != vertex_canon[q] {
                    vertex_canon[p] > vertex_canon[q]
                } else {
                    let [rf, rt] = class_rep_dir[c];
                    match translation_match(&vertices, [p, q], [rf, rt], tol) {
                        Some(rev) => rev,
                        None => {
                            return Err(Error::Topology(format!(
                                "edge ({p}, {q}) of triangle {t} cannot be aligned with its periodic class"
                            )))
                        }
                    }
                };
                incidences[c].push((t, k as u8));
                refs[k] = EdgeRef { edge: c, reversed };
            }
            tri_edges.push(refs);
        }

        let mut edges = Vec::with_capacity(n_edge_classes);
        for (c, inc) in incidences.iter().enumerate() {
            if inc.len() != 2 {
                return Err(Error::Topology(format!(
                    "edge class {c} (vertices {:?}) has {} incident triangles, torus topology requires 2",
                    class_rep_dir[c],
                    inc.len()
                )));
            }
            let flags: Vec<bool> = inc
                .iter()
                .map(|&(t, k)| tri_edges[t][k as usize].reversed)
                .collect();
            if flags[0] == flags[1] {
                return Err(Error::Topology(format!(
                    "edge class {c} is traversed in the same direction by both incident triangles"
                )));
            }
            edges.push(EdgeClass {
                rep: class_rep_dir[c],
                tris: [inc[0], inc[1]],
            });
        }

        // Euler characteristic of the torus.
        let (v, e, f) = (n_canon_vertices as i64, edges.len() as i64, triangles.len() as i64);
        if v - e + f != 0 {
            return Err(Error::Topology(format!(
                "V - E + F = {} - {} + {} = {}, expected 0 for a torus",
                v,
                e,
                f,
                v - e + f
            )));
        }

        let maps = triangles
            .iter()
            .map(|&[a, b, c]| AffineMap::new(vertices[a], vertices[b], vertices[c]))
            .collect();

        Ok(Mesh {
            vertices,
            triangles,
            edges,
            tri_edges,
            vertex_canon,
            n_canon_vertices,
            domain,
            maps,
            tol,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_canonical_vertices(&self) -> usize {
        self.n_canon_vertices
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, v: usize) -> [f64; 2] {
        self.vertices[v]
    }

    pub fn triangle(&self, t: usize) -> [usize; 3] {
        self.triangles[t]
    }

    pub fn canonical_vertex(&self, v: usize) -> usize {
        self.vertex_canon[v]
    }

    pub fn edge(&self, e: usize) -> &EdgeClass {
        &self.edges[e]
    }

    pub fn tri_edge_refs(&self, t: usize) -> &[EdgeRef; 3] {
        &self.tri_edges[t]
    }

    pub fn domain_extent(&self) -> [f64; 2] {
        self.domain
    }

    pub fn periodic_tolerance(&self) -> f64 {
        self.tol
    }

    /// Affine map of triangle `t`; errors on an out-of-range index.
    pub fn affine_map(&self, t: usize) -> Result<&AffineMap> {
        self.maps.get(t).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "triangle index {t} out of range 0..{}",
                self.triangles.len()
            ))
        })
    }

    /// Precomputed affine maps, indexed by triangle.
    pub fn maps(&self) -> &[AffineMap] {
        &self.maps
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        0.5 * self.maps[t].det
    }

    /// Physical endpoints of local edge `k` of triangle `t`, in the
    /// triangle's counter-clockwise traversal order.
    pub fn local_edge_endpoints(&self, t: usize, k: usize) -> ([f64; 2], [f64; 2]) {
        let tri = self.triangles[t];
        (self.vertices[tri[k]], self.vertices[tri[(k + 1) % 3]])
    }
}

fn signed_area(vertices: &[[f64; 2]], [a, b, c]: [usize; 3]) -> f64 {
    let (pa, pb, pc) = (vertices[a], vertices[b], vertices[c]);
    0.5 * ((pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0]))
}

fn wrap(x: f64, period: f64, tol: f64) -> f64 {
    let r = x.rem_euclid(period);
    if r > period - tol {
        0.0
    } else {
        r
    }
}

fn is_lattice_vector(d: [f64; 2], lx: f64, ly: f64, tol: f64) -> bool {
    let near = |x: f64, p: f64| (x / p - (x / p).round()).abs() * p <= tol;
    near(d[0], lx) && near(d[1], ly)
}

/// For two physical copies of one torus edge, decide whether directed copy
/// `(p, q)` runs along or against the representative direction `(rf, rt)`,
/// by matching endpoints under a rigid translation.
fn translation_match(
    vertices: &[[f64; 2]],
    [p, q]: [usize; 2],
    [rf, rt]: [usize; 2],
    tol: f64,
) -> Option<bool> {
    let shift = |a: [f64; 2], b: [f64; 2]| [a[0] - b[0], a[1] - b[1]];
    let close = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).abs() <= tol && (a[1] - b[1]).abs() <= tol;
    let t_fwd = shift(vertices[p], vertices[rf]);
    if close(
        vertices[q],
        [vertices[rt][0] + t_fwd[0], vertices[rt][1] + t_fwd[1]],
    ) {
        return Some(false);
    }
    let t_rev = shift(vertices[p], vertices[rt]);
    if close(
        vertices[q],
        [vertices[rf][0] + t_rev[0], vertices[rf][1] + t_rev[1]],
    ) {
        return Some(true);
    }
    None
}

/// Group rows whose entries all agree within `tol`. Returns a class label per
/// row. Assumes distinct classes are separated well beyond `tol`.
fn cluster_rows<const K: usize>(rows: &[[f64; K]], tol: f64) -> Vec<usize> {
    let mut labels = vec![usize::MAX; rows.len()];
    let idx: Vec<usize> = (0..rows.len()).collect();
    let mut next = 0usize;
    cluster_recurse(rows, idx, 0, tol, &mut labels, &mut next);
    labels
}

fn cluster_recurse<const K: usize>(
    rows: &[[f64; K]],
    mut group: Vec<usize>,
    col: usize,
    tol: f64,
    labels: &mut [usize],
    next: &mut usize,
) {
    if col == K {
        for &i in &group {
            labels[i] = *next;
        }
        *next += 1;
        return;
    }
    group.sort_by(|&a, &b| rows[a][col].total_cmp(&rows[b][col]));
    let mut start = 0;
    for k in 1..=group.len() {
        let split = k == group.len()
            || (rows[group[k]][col] - rows[group[k - 1]][col]).abs() > tol;
        if split {
            cluster_recurse(rows, group[start..k].to_vec(), col + 1, tol, labels, next);
            start = k;
        }
    }
}

/// Renumber arbitrary labels into 0..n in order of first appearance.
fn renumber_first_seen(raw: &[usize]) -> (Vec<usize>, usize) {
    let mut remap: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::with_capacity(raw.len());
    for &r in raw {
        let n = remap.len();
        out.push(*remap.entry(r).or_insert(n));
    }
    let n = remap.len();
    (out, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_torus_counts() {
        let mesh = Mesh::periodic_rect(1, 1, 2.0, 2.0, MeshPattern::Diagonal).unwrap();
        assert_eq!(mesh.num_triangles(), 2);
        assert_eq!(mesh.num_canonical_vertices(), 1);
        assert_eq!(mesh.num_edges(), 3);
    }

    #[test]
    fn triangle_counts_match_pattern() {
        let mesh = Mesh::periodic_rect(
            20,
            20,
            2.0 * std::f64::consts::PI,
            2.0 * std::f64::consts::PI,
            MeshPattern::Diagonal,
        )
        .unwrap();
        assert_eq!(mesh.num_triangles(), 800);
        let mesh = Mesh::periodic_rect(
            40,
            40,
            2.0 * std::f64::consts::PI,
            2.0 * std::f64::consts::PI,
            MeshPattern::Crisscross,
        )
        .unwrap();
        assert_eq!(mesh.num_triangles(), 6400);
    }

    #[test]
    fn euler_characteristic_and_areas() {
        for &(nx, ny, pattern) in &[
            (1usize, 1usize, MeshPattern::Diagonal),
            (1, 1, MeshPattern::Crisscross),
            (3, 2, MeshPattern::Diagonal),
            (4, 5, MeshPattern::Crisscross),
            (8, 8, MeshPattern::Diagonal),
        ] {
            let (lx, ly) = (2.7, 1.3);
            let mesh = Mesh::periodic_rect(nx, ny, lx, ly, pattern).unwrap();
            let v = mesh.num_canonical_vertices() as i64;
            let e = mesh.num_edges() as i64;
            let f = mesh.num_triangles() as i64;
            assert_eq!(v - e + f, 0, "{nx}x{ny} {pattern:?}");
            let total: f64 = (0..mesh.num_triangles()).map(|t| mesh.triangle_area(t)).sum();
            assert!((total - lx * ly).abs() <= 1e-12 * lx * ly);
            for t in 0..mesh.num_triangles() {
                assert!(mesh.triangle_area(t) > 0.0);
            }
        }
    }

    #[test]
    fn incident_triangles_traverse_opposite() {
        let mesh = Mesh::periodic_rect(3, 4, 1.0, 2.0, MeshPattern::Crisscross).unwrap();
        for e in 0..mesh.num_edges() {
            let class = mesh.edge(e);
            let flags: Vec<bool> = class
                .tris
                .iter()
                .map(|&(t, k)| mesh.tri_edge_refs(t)[k as usize].reversed)
                .collect();
            assert_ne!(flags[0], flags[1]);
        }
    }

    #[test]
    fn affine_maps() {
        // Identity case: reference-like triangle.
        let content = "meevc-mesh 1\n1 1\n4 2\n0 0\n1 0\n0 1\n1 1\n0 1 2\n1 3 2\n";
        let mesh = Mesh::parse(content, Path::new("inline")).unwrap();
        let m = mesh.affine_map(0).unwrap();
        assert!((m.det - 1.0).abs() < 1e-15);
        assert_eq!(m.jacobian, [[1.0, 0.0], [0.0, 1.0]]);
        assert!(mesh.affine_map(5).is_err());
    }

    #[test]
    fn scaled_triangle_det() {
        let content = "meevc-mesh 1\n2 2\n4 2\n0 0\n2 0\n0 2\n2 2\n0 1 2\n1 3 2\n";
        let mesh = Mesh::parse(content, Path::new("inline")).unwrap();
        assert!((mesh.affine_map(0).unwrap().det - 4.0).abs() < 1e-14);
    }

    #[test]
    fn clockwise_triangle_reordered() {
        let ccw = "meevc-mesh 1\n1 1\n4 2\n0 0\n1 0\n0 1\n1 1\n0 1 2\n1 3 2\n";
        let cw = "meevc-mesh 1\n1 1\n4 2\n0 0\n1 0\n0 1\n1 1\n0 2 1\n1 3 2\n";
        let a = Mesh::parse(ccw, Path::new("inline")).unwrap();
        let b = Mesh::parse(cw, Path::new("inline")).unwrap();
        assert!(b.triangle_area(0) > 0.0);
        assert_eq!(a.triangle(0), b.triangle(0));
    }

    #[test]
    fn round_trip_preserves_topology() {
        let mesh = Mesh::periodic_rect(1, 1, 2.0, 2.0, MeshPattern::Diagonal).unwrap();
        let text = mesh.to_text();
        let reloaded = Mesh::parse(&text, Path::new("round-trip")).unwrap();
        assert_eq!(reloaded.num_triangles(), mesh.num_triangles());
        assert_eq!(reloaded.num_edges(), mesh.num_edges());
        assert_eq!(
            reloaded.num_canonical_vertices(),
            mesh.num_canonical_vertices()
        );
        assert_eq!(reloaded.triangle(0), mesh.triangle(0));
    }

    #[test]
    fn dangling_vertex_rejected() {
        let content = "meevc-mesh 1\n1 1\n5 2\n0 0\n1 0\n0 1\n1 1\n0.5 0.5\n0 1 2\n1 3 2\n";
        match Mesh::parse(content, Path::new("inline")) {
            Err(Error::Topology(msg)) => assert!(msg.contains('4')),
            other => panic!("expected topology error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_file_reports_line() {
        let content = "meevc-mesh 1\n1 1\n4 2\n0 0\nnot-a-number 0\n0 1\n1 1\n0 1 2\n1 3 2\n";
        match Mesh::parse(content, Path::new("inline")) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn non_torus_rejected() {
        // A single pair of triangles on a 2x2 sheet within a 4x4 domain:
        // boundary edges have no periodic partners.
        let content = "meevc-mesh 1\n4 4\n4 2\n0 0\n2 0\n0 2\n2 2\n0 1 2\n1 3 2\n";
        assert!(matches!(
            Mesh::parse(content, Path::new("inline")),
            Err(Error::Topology(_))
        ));
    }

    #[test]
    fn invalid_generation_arguments() {
        assert!(Mesh::periodic_rect(0, 1, 1.0, 1.0, MeshPattern::Diagonal).is_err());
        assert!(Mesh::periodic_rect(1, 1, -1.0, 1.0, MeshPattern::Diagonal).is_err());
    }

    #[test]
    fn shoelace_matches_jacobian_determinant() {
        let mesh = Mesh::periodic_rect(5, 3, 1.9, 0.7, MeshPattern::Crisscross).unwrap();
        for t in 0..mesh.num_triangles() {
            let tri = mesh.triangle(t);
            let shoelace = signed_area(
                &(0..mesh.num_vertices()).map(|v| mesh.vertex(v)).collect::<Vec<_>>(),
                tri,
            );
            let det = mesh.affine_map(t).unwrap().det;
            assert!((det - 2.0 * shoelace).abs() <= 1e-14 * det.abs());
        }
    }
}
