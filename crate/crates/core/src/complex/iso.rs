use rustc_hash::FxHashMap;

use super::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

pub const ISO_VERTEX_LIMIT: usize = 20;

/// Per-vertex invariant used to prune candidate images.
fn vertex_signature(x: &SimplicialComplex, v: Vertex) -> Vec<usize> {
    let lk = x.link(&Simplex::vertex(v)).expect("vertex is present");
    lk.f_vector()
}

fn stars(x: &SimplicialComplex) -> FxHashMap<Vertex, Vec<Simplex>> {
    let mut out: FxHashMap<Vertex, Vec<Simplex>> = x.vertices().iter().map(|&v| (v, Vec::new())).collect();
    for s in x.simplices().filter(|s| s.len() > 1) {
        for &v in s.vertices() {
            out.get_mut(&v).unwrap().push(s.clone());
        }
    }
    out
}

struct Search<'a> {
    x: &'a SimplicialComplex,
    y: &'a SimplicialComplex,
    order: Vec<Vertex>,
    candidates: Vec<Vec<Vertex>>,
    star_x: FxHashMap<Vertex, Vec<Simplex>>,
    star_y: FxHashMap<Vertex, Vec<Simplex>>,
    forward: FxHashMap<Vertex, Vertex>,
    backward: FxHashMap<Vertex, Vertex>,
}

impl Search<'_> {
    fn consistent(&self, xv: Vertex, yv: Vertex) -> bool {
        let check = |star: &[Simplex], map: &FxHashMap<Vertex, Vertex>, target: &SimplicialComplex, pivot: Vertex, image: Vertex| {
            star.iter().all(|s| {
                let mut img = Vec::with_capacity(s.len());
                for &u in s.vertices() {
                    if u == pivot {
                        img.push(image);
                    } else if let Some(&w) = map.get(&u) {
                        img.push(w);
                    } else {
                        return true;
                    }
                }
                img.sort_unstable();
                target.contains_sorted(&img)
            })
        };
        check(&self.star_x[&xv], &self.forward, self.y, xv, yv) && check(&self.star_y[&yv], &self.backward, self.x, yv, xv)
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let xv = self.order[depth];
        for i in 0..self.candidates[depth].len() {
            let yv = self.candidates[depth][i];
            if self.backward.contains_key(&yv) || !self.consistent(xv, yv) {
                continue;
            }
            self.forward.insert(xv, yv);
            self.backward.insert(yv, xv);
            if self.run(depth + 1) {
                return true;
            }
            self.forward.remove(&xv);
            self.backward.remove(&yv);
        }
        false
    }
}

/// Searches for a vertex bijection `X → Y` carrying simplexes to simplexes in
/// both directions. Returns the pairs `(x, f(x))` sorted by `x`, or `None`.
pub fn is_isomorphic(x: &SimplicialComplex, y: &SimplicialComplex) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    if x.vertex_count() > ISO_VERTEX_LIMIT || y.vertex_count() > ISO_VERTEX_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "isomorphism search is limited to {ISO_VERTEX_LIMIT} vertices"
        )));
    }
    if x.f_vector() != y.f_vector() {
        return Ok(None);
    }
    let sig_x: FxHashMap<Vertex, Vec<usize>> = x.vertices().iter().map(|&v| (v, vertex_signature(x, v))).collect();
    let sig_y: FxHashMap<Vertex, Vec<usize>> = y.vertices().iter().map(|&v| (v, vertex_signature(y, v))).collect();
    let mut order: Vec<Vertex> = x.vertices().to_vec();
    let cands = |v: Vertex| -> Vec<Vertex> { y.vertices().iter().copied().filter(|w| sig_y[w] == sig_x[&v]).collect() };
    // Most constrained first, ties broken towards high degree so that later
    // vertices see many mapped neighbours.
    order.sort_by_key(|&v| (cands(v).len(), std::cmp::Reverse(x.degree(v)), v));
    let candidates: Vec<Vec<Vertex>> = order.iter().map(|&v| cands(v)).collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut search = Search {
        x,
        y,
        order,
        candidates,
        star_x: stars(x),
        star_y: stars(y),
        forward: FxHashMap::default(),
        backward: FxHashMap::default(),
    };
    if !search.run(0) {
        return Ok(None);
    }
    let mut pairs: Vec<(Vertex, Vertex)> = search.forward.into_iter().collect();
    pairs.sort_unstable();
    Ok(Some(pairs))
}
