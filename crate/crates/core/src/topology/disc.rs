//! Filling loops in r-ample complexes (r ≥ 4) by simplicial discs.
//!
//! While the loop is longer than `r`, the arc of `r` consecutive vertices
//! starting at the smallest label is replaced by a single witness vertex
//! adjacent to the whole arc; the arc's `r − 2` interior vertices move into
//! the disc and `r − 1` triangles are added. The remaining loop of length at
//! most `r` is coned off by one more witness.

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::ampleness::ample_witness;
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// A triangulated disc mapped simplicially into a complex. Disc vertices
/// `0..boundary_length` are the loop, in order; later ones are internal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilledDisc {
    pub boundary_length: usize,
    pub r: usize,
    pub internal_vertex_count: usize,
    pub triangle_count: usize,
    /// Image of every disc vertex.
    pub labels: Vec<Vertex>,
    /// Triangles as triples of disc vertices.
    pub triangles: Vec<[usize; 3]>,
    pub internal_bound: usize,
    pub triangle_bound: usize,
}

/// Both size bounds for a loop of length `n ≥ 4`: `⌈(n−3)/(r−3)⌉` internal
/// vertices and `⌈(n−3)/(r−3)⌉·(r−1) + 1` triangles. A triangle loop needs
/// one internal vertex and three triangles unless it is itself filled.
pub fn disc_bounds(n: usize, r: usize) -> (usize, usize) {
    if n <= 3 {
        return (1, 3);
    }
    let k = (n - 3).div_ceil(r - 3);
    (k, k * (r - 1) + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscCertificate {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
    pub euler_characteristic: i64,
}

impl FilledDisc {
    pub fn within_bounds(&self) -> bool {
        self.internal_vertex_count <= self.internal_bound && self.triangle_count <= self.triangle_bound
    }

    /// Checks that the triangles form a disc bounded by the loop and map to
    /// simplexes of `x`: boundary edges lie in one triangle, interior edges
    /// in two, the Euler characteristic is 1, every internal vertex has a
    /// cyclic link and every boundary vertex a path link.
    pub fn validate(&self, x: &SimplicialComplex) -> Result<DiscCertificate> {
        let bad = |msg: String| Err(Error::InvalidInput(format!("disc check failed: {msg}")));
        let n = self.boundary_length;
        let nv = self.labels.len();
        if self.internal_vertex_count != nv - n || self.triangle_count != self.triangles.len() {
            return bad("counts disagree with the listing".into());
        }
        let mut edge_use: FxHashMap<(usize, usize), usize> = FxHashMap::default();
        let mut links: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for t in &self.triangles {
            if t.iter().any(|&v| v >= nv) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return bad(format!("malformed triangle {t:?}"));
            }
            let image = Simplex::new(t.iter().map(|&v| self.labels[v]));
            match image {
                Ok(s) if s.len() == 3 && x.contains(&s) => {}
                _ => return bad(format!("triangle {t:?} does not map to a triangle of the complex")),
            }
            for (a, b, c) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[0], t[2], t[1])] {
                *edge_use.entry((a.min(b), a.max(b))).or_default() += 1;
                links[c].push((a.min(b), a.max(b)));
            }
        }
        for i in 0..n {
            let (a, b) = (i, (i + 1) % n);
            if edge_use.get(&(a.min(b), a.max(b))) != Some(&1) {
                return bad(format!("boundary edge {a}-{b} is not in exactly one triangle"));
            }
        }
        for (&(a, b), &k) in &edge_use {
            let on_boundary = a < n && b < n && ((a + 1) % n == b || (b + 1) % n == a);
            if !on_boundary && k != 2 {
                return bad(format!("interior edge {a}-{b} lies in {k} triangles"));
            }
        }
        for (v, link) in links.iter().enumerate() {
            if !link_shape_ok(link, v >= n) {
                return bad(format!("link of disc vertex {v} is not a {}", if v >= n { "cycle" } else { "path" }));
            }
        }
        let euler = nv as i64 - edge_use.len() as i64 + self.triangles.len() as i64;
        if euler != 1 {
            return bad(format!("Euler characteristic {euler}"));
        }
        Ok(DiscCertificate { vertices: nv, edges: edge_use.len(), triangles: self.triangles.len(), euler_characteristic: euler })
    }

    /// One line per disc edge: `a b label_a label_b`.
    pub fn edge_list(&self) -> String {
        let mut edges: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges.iter().map(|&(a, b)| format!("{a} {b} {} {}\n", self.labels[a], self.labels[b])).collect()
    }
}

/// Whether a graph given by its edges is a single cycle (or a single path).
fn link_shape_ok(edges: &[(usize, usize)], cycle: bool) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut deg: FxHashMap<usize, usize> = FxHashMap::default();
    let mut adj: FxHashMap<usize, Vec<usize>> = FxHashMap::default();
    for &(a, b) in edges {
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let ends = deg.values().filter(|&&d| d == 1).count();
    let shape = if cycle { deg.values().all(|&d| d == 2) } else { ends == 2 && deg.values().all(|&d| d <= 2) };
    if !shape {
        return false;
    }
    // Connected.
    let start = *deg.keys().next().expect("non-empty");
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == deg.len()
}

fn path_complex(vs: &[Vertex], closed: bool) -> Result<SimplicialComplex> {
    let mut edges: Vec<Vec<Vertex>> = vs.windows(2).map(|w| vec![w[0], w[1]]).collect();
    if closed {
        edges.push(vec![vs[vs.len() - 1], vs[0]]);
    }
    edges.extend(vs.iter().map(|&v| vec![v]));
    SimplicialComplex::from_maximal(edges)
}

fn witness_for(x: &SimplicialComplex, vs: &[Vertex], closed: bool) -> Result<Vertex> {
    let mut u = vs.to_vec();
    u.sort_unstable();
    u.dedup();
    let a = path_complex(vs, closed)?;
    ample_witness(x, &u, &a)?.ok_or(Error::NotAmpleEnough { u, a })
}

/// Fills the closed loop `lp` (consecutive vertices, cyclically, must span
/// edges of `x`) assuming `x` is r-ample with `r ≥ 4`. A missing witness is
/// reported as the failing pair `(U, A)`.
pub fn fill_loop(x: &SimplicialComplex, lp: &[Vertex], r: usize) -> Result<FilledDisc> {
    if r < 4 {
        return Err(Error::InvalidParameters("disc filling needs r ≥ 4".into()));
    }
    let n = lp.len();
    if n < 3 {
        return Err(Error::InvalidInput("a loop needs at least three vertices".into()));
    }
    for i in 0..n {
        let (a, b) = (lp[i], lp[(i + 1) % n]);
        if a == b || !x.adjacent(a, b) {
            return Err(Error::InvalidInput(format!("{a}-{b} is not an edge of the complex")));
        }
    }
    let (internal_bound, triangle_bound) = disc_bounds(n, r);
    let mut labels: Vec<Vertex> = lp.to_vec();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    if n == 3 && x.contains_sorted(&{
        let mut t = lp.to_vec();
        t.sort_unstable();
        t
    }) {
        return Ok(FilledDisc {
            boundary_length: 3,
            r,
            internal_vertex_count: 0,
            triangle_count: 1,
            labels,
            triangles: vec![[0, 1, 2]],
            internal_bound: 0,
            triangle_bound: 1,
        });
    }
    // Current boundary as disc vertices.
    let mut boundary: Vec<usize> = (0..n).collect();
    while boundary.len() > r {
        let start = (0..boundary.len()).min_by_key(|&i| (labels[boundary[i]], i)).expect("non-empty");
        boundary.rotate_left(start);
        let arc: Vec<Vertex> = boundary[..r].iter().map(|&d| labels[d]).collect();
        let v = witness_for(x, &arc, false)?;
        let w = labels.len();
        labels.push(v);
        for i in 0..r - 1 {
            triangles.push([boundary[i], boundary[i + 1], w]);
        }
        boundary.splice(1..r - 1, [w]);
    }
    let rest: Vec<Vertex> = boundary.iter().map(|&d| labels[d]).collect();
    let v = witness_for(x, &rest, true)?;
    let w = labels.len();
    labels.push(v);
    for i in 0..boundary.len() {
        triangles.push([boundary[i], boundary[(i + 1) % boundary.len()], w]);
    }
    Ok(FilledDisc {
        boundary_length: n,
        r,
        internal_vertex_count: labels.len() - n,
        triangle_count: triangles.len(),
        labels,
        triangles,
        internal_bound,
        triangle_bound,
    })
}
