//! Bitmask view of an induced subcomplex `X_U` with at most 64 simplexes.
//!
//! Subcomplexes of `X_U` become `u64` masks over the canonical listing of its
//! simplexes, and the restricted link `Lk_X(v) ∩ X_U` of any outside vertex
//! becomes a mask computed with a handful of membership probes.

use rayon::prelude::*;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

pub(crate) const MAX_LOCAL_FACES: usize = 64;

pub(crate) struct LocalFaces {
    pub u: Vec<Vertex>,
    pub faces: Vec<Simplex>,
    facet_masks: Vec<u64>,
    /// For singleton faces, the vertex; used for the adjacency fast path.
    singleton: Vec<Option<Vertex>>,
}

impl LocalFaces {
    /// `u` sorted, every vertex present in `x`. Returns `None` when `X_U` has
    /// more than 64 simplexes.
    pub fn new(x: &SimplicialComplex, u: &[Vertex]) -> Option<Self> {
        let mut faces: Vec<Simplex> = Vec::new();
        let mut frontier: Vec<Simplex> = u.iter().map(|&v| Simplex::vertex(v)).collect();
        while !frontier.is_empty() {
            faces.extend(frontier.iter().cloned());
            if faces.len() > MAX_LOCAL_FACES {
                return None;
            }
            let mut next = Vec::new();
            for s in &frontier {
                for &w in u.iter().filter(|&&w| w > s.last()) {
                    let t = s.with_vertex(w);
                    if x.contains(&t) {
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        faces.sort_unstable();
        let facet_masks = faces
            .iter()
            .map(|s| {
                s.facets().fold(0u64, |m, f| {
                    let i = faces.binary_search(&f).expect("closed");
                    m | (1 << i)
                })
            })
            .collect();
        let singleton = faces.iter().map(|s| (s.len() == 1).then(|| s.first())).collect();
        Some(LocalFaces { u: u.to_vec(), faces, facet_masks, singleton })
    }

    /// Mask of `Lk_X(v) ∩ X_U`; `v` must not be in `U`.
    pub fn link_mask(&self, x: &SimplicialComplex, v: Vertex) -> u64 {
        let nbrs = x.neighbors(v);
        let mut mask = 0u64;
        for (i, s) in self.faces.iter().enumerate() {
            if self.facet_masks[i] & !mask != 0 {
                continue;
            }
            let hit = match self.singleton[i] {
                Some(u) => nbrs.contains(u as usize),
                None => x.contains(&s.with_vertex(v)),
            };
            if hit {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Subcomplex masks in canonical order (lexicographic on inclusion
    /// vectors, exclusion first), passed to `visit` until it returns `false`.
    pub fn for_each_subcomplex<F: FnMut(u64) -> bool>(&self, mut visit: F) {
        fn rec<F: FnMut(u64) -> bool>(lf: &LocalFaces, i: usize, mask: u64, visit: &mut F) -> bool {
            if i == lf.faces.len() {
                return visit(mask);
            }
            if !rec(lf, i + 1, mask, visit) {
                return false;
            }
            if lf.facet_masks[i] & !mask == 0 {
                return rec(lf, i + 1, mask | (1 << i), visit);
            }
            true
        }
        rec(self, 0, 0, &mut visit);
    }

    #[cfg(test)]
    pub fn subcomplex_count(&self) -> u64 {
        let mut n = 0;
        self.for_each_subcomplex(|_| {
            n += 1;
            true
        });
        n
    }

    pub fn complex_of(&self, mask: u64) -> SimplicialComplex {
        let list = self
            .faces
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, s)| s.clone())
            .collect();
        SimplicialComplex::from_sorted_closed(list)
    }

    /// Mask of `a`, which must be a subcomplex of `X_U`.
    pub fn mask_of(&self, a: &SimplicialComplex) -> Result<u64> {
        let mut mask = 0u64;
        for s in a.simplices() {
            match self.faces.binary_search(s) {
                Ok(i) => mask |= 1 << i,
                Err(_) => {
                    return Err(Error::InvalidSubcomplex(format!("{s:?} is not a simplex of X_U for U = {:?}", self.u)))
                }
            }
        }
        Ok(mask)
    }
}

/// Calls `f` on every subset of `vertices` with at most `max_size` elements, in
/// canonical order (by size, then lexicographically), returning the first
/// `Some`. Work within one size is spread over rayon workers by leading
/// element; the reduction keeps the canonical first hit regardless of schedule.
pub(crate) fn first_subset_hit<T, F>(vertices: &[Vertex], max_size: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(&[Vertex]) -> Option<T> + Sync,
{
    let n = vertices.len();
    for size in 0..=max_size.min(n) {
        if size == 0 {
            if let Some(hit) = f(&[]) {
                return Some(hit);
            }
            continue;
        }
        let hit = (0..=n - size).into_par_iter().find_map_first(|lead| {
            let mut idx: Vec<usize> = (lead..lead + size).collect();
            let mut buf: Vec<Vertex> = idx.iter().map(|&i| vertices[i]).collect();
            loop {
                if let Some(hit) = f(&buf) {
                    return Some(hit);
                }
                // Advance positions 1.. to the next combination, keeping idx[0] = lead.
                let mut k = size - 1;
                loop {
                    if k == 0 {
                        return None;
                    }
                    if idx[k] < n - size + k {
                        break;
                    }
                    k -= 1;
                }
                idx[k] += 1;
                for j in k + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                for j in k..size {
                    buf[j] = vertices[idx[j]];
                }
            }
        });
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Sequential counterpart of [`first_subset_hit`] visiting every subset.
pub(crate) fn for_each_subset<F: FnMut(&[Vertex])>(vertices: &[Vertex], max_size: usize, mut f: F) {
    fn rec<F: FnMut(&[Vertex])>(vs: &[Vertex], start: usize, size: usize, buf: &mut Vec<Vertex>, f: &mut F) {
        if buf.len() == size {
            f(buf);
            return;
        }
        for i in start..vs.len() {
            buf.push(vs[i]);
            rec(vs, i + 1, size, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::new();
    for size in 0..=max_size.min(vertices.len()) {
        rec(vertices, 0, size, &mut buf, &mut f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Mutex;

    #[test]
    fn subsets_in_canonical_order() {
        let seen = Mutex::new(Vec::new());
        let _ = first_subset_hit(&[1, 3, 5, 7], 2, |u| {
            seen.lock().unwrap().push(u.to_vec());
            None::<()>
        });
        let mut seen = seen.into_inner().unwrap();
        assert_eq!(seen.len(), 1 + 4 + 6);
        seen.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(seen[5], vec![1, 3]);
        assert_eq!(seen[10], vec![5, 7]);
    }

    #[test]
    fn first_hit_is_canonical() {
        let hit = first_subset_hit(&(0..30).collect::<Vec<_>>(), 3, |u| (u.len() == 3 && u[2] > 20).then(|| u.to_vec()));
        assert_eq!(hit, Some(vec![0, 1, 21]));
    }

    #[test]
    fn local_counts_match_enumeration() {
        let x = SimplicialComplex::from_maximal([vec![0, 1, 2], vec![2, 3], vec![4]]).unwrap();
        let lf = LocalFaces::new(&x, &[0, 1, 2, 3]).unwrap();
        let direct = x.induced(&[0, 1, 2, 3]).unwrap().subcomplexes().count() as u64;
        assert_eq!(lf.subcomplex_count(), direct);
        let mut order = Vec::new();
        lf.for_each_subcomplex(|m| {
            order.push(lf.complex_of(m));
            true
        });
        let direct: Vec<_> = x.induced(&[0, 1, 2, 3]).unwrap().subcomplexes().collect();
        assert_eq!(order, direct);
    }
}
