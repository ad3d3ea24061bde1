//! Extending embeddings one vertex at a time, the engine behind the
//! equivalence of r-ampleness with the extension property.

use std::collections::BTreeMap;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

use super::ample_witness;

/// Vertex map from a complex `A` into `X`, keyed by vertices of `A`.
pub type Embedding = BTreeMap<Vertex, Vertex>;

fn image(f: &Embedding, s: &Simplex) -> Simplex {
    let mut vs: Vec<Vertex> = s.vertices().iter().map(|v| f[v]).collect();
    vs.sort_unstable();
    Simplex::new(vs).expect("injective image of a simplex")
}

/// Checks that `f` is injective into `V(X)` and that a subset of its domain
/// spans a simplex of `A` exactly when its image spans one of `X`.
fn validate(x: &SimplicialComplex, a: &SimplicialComplex, domain: &[Vertex], f: &Embedding) -> Result<()> {
    let mut targets: Vec<Vertex> = f.values().copied().collect();
    targets.sort_unstable();
    targets.dedup();
    if targets.len() != f.len() {
        return Err(Error::InvalidEmbedding("map is not injective".into()));
    }
    if let Some(v) = targets.iter().find(|&&v| !x.has_vertex(v)) {
        return Err(Error::InvalidEmbedding(format!("image vertex {v} is not in X")));
    }
    let ab = a.induced(domain)?;
    let xb = x.induced(&targets)?;
    if ab.simplex_count() != xb.simplex_count() || ab.simplices().any(|s| !xb.contains(&image(f, s))) {
        return Err(Error::InvalidEmbedding("map is not an isomorphism onto an induced subcomplex".into()));
    }
    Ok(())
}

/// Extends `f_b`, an embedding of `A_B` onto an induced subcomplex of `X`, to
/// all of `A`. New vertices are placed in ascending id, each at the least
/// witness for its restricted link. Returns `None` when some witness is
/// missing, which cannot happen if `X` is r-ample and `|V(A)| ≤ r + 1`.
pub fn extend_embedding(
    x: &SimplicialComplex,
    a: &SimplicialComplex,
    b_vertices: &[Vertex],
    f_b: &Embedding,
) -> Result<Option<Embedding>> {
    let mut domain = b_vertices.to_vec();
    domain.sort_unstable();
    domain.dedup();
    if let Some(&v) = domain.iter().find(|&&v| !a.has_vertex(v)) {
        return Err(Error::AbsentVertex(v));
    }
    if f_b.len() != domain.len() || domain.iter().any(|v| !f_b.contains_key(v)) {
        return Err(Error::InvalidEmbedding("map domain differs from B".into()));
    }
    validate(x, a, &domain, f_b)?;
    let mut f = f_b.clone();
    for &w in a.vertices() {
        if f.contains_key(&w) {
            continue;
        }
        let lk = a.link(&Simplex::vertex(w))?.induced_by_mask(&mask_of(&domain, a.id_bound()));
        let target = SimplicialComplex::closure_of(lk.simplices().map(|s| image(&f, s)))?;
        let mut u: Vec<Vertex> = f.values().copied().collect();
        u.sort_unstable();
        match ample_witness(x, &u, &target)? {
            Some(v) => {
                f.insert(w, v);
                let pos = domain.binary_search(&w).unwrap_err();
                domain.insert(pos, w);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(f))
}

fn mask_of(vs: &[Vertex], bound: usize) -> crate::complex::VertexSet {
    let mut m = crate::complex::VertexSet::with_capacity(bound);
    for &v in vs {
        m.insert(v as usize);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::example_thirteen;

    fn cx(m: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_maximal(m.iter().map(|s| s.to_vec())).unwrap()
    }

    #[test]
    fn single_vertex_from_nothing() {
        let x = cx(&[&[3, 4]]);
        let f = extend_embedding(&x, &cx(&[&[7]]), &[], &Embedding::new()).unwrap().unwrap();
        assert_eq!(f[&7], 3);
    }

    #[test]
    fn path_into_example_thirteen() {
        let x = example_thirteen();
        let path = cx(&[&[0, 1], &[1, 2]]);
        // 0 and 2 are not adjacent in X (difference 2 is not ±1, ±3, ±4).
        let fb: Embedding = [(0, 0), (2, 2)].into_iter().collect();
        let f = extend_embedding(&x, &path, &[0, 2], &fb).unwrap().unwrap();
        let mapped = path.relabel(|v| f[&v]).unwrap();
        let vs: Vec<Vertex> = f.values().copied().collect();
        assert_eq!(x.induced(&vs).unwrap(), mapped);
    }

    #[test]
    fn triangle_into_hollow_triangle() {
        let hollow = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        let tri = cx(&[&[0, 1, 2]]);
        let fb: Embedding = [(0, 0), (1, 1)].into_iter().collect();
        assert_eq!(extend_embedding(&hollow, &tri, &[0, 1], &fb).unwrap(), None);
    }

    #[test]
    fn rejects_non_embeddings() {
        let hollow = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        let two_points = cx(&[&[0], &[1], &[2]]);
        let fb: Embedding = [(0, 0), (1, 1)].into_iter().collect();
        assert!(matches!(extend_embedding(&hollow, &two_points, &[0, 1], &fb), Err(Error::InvalidEmbedding(_))));
        let clash: Embedding = [(0, 0), (1, 0)].into_iter().collect();
        assert!(matches!(extend_embedding(&hollow, &two_points, &[0, 1], &clash), Err(Error::InvalidEmbedding(_))));
    }
}
