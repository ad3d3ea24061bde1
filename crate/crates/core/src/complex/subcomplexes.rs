use super::{Simplex, SimplicialComplex};

/// Facet positions of every simplex within the canonical listing of `x`.
fn facet_table(faces: &[&Simplex], x: &SimplicialComplex) -> Vec<Vec<usize>> {
    let mut offsets = vec![0usize];
    for d in 0..=x.dim().max(0) as usize {
        offsets.push(offsets[d] + x.level(d).len());
    }
    faces
        .iter()
        .map(|s| {
            if s.len() == 1 {
                return Vec::new();
            }
            let base = offsets[s.dim() - 1];
            s.facets().map(|f| base + x.index_of(&f).expect("complex is closed")).collect()
        })
        .collect()
}

/// Streaming enumeration of all subcomplexes of a complex.
///
/// Order: lexicographic on inclusion vectors indexed by the canonical simplex
/// order, exclusion before inclusion; the empty complex comes first and the
/// complex itself last.
pub struct Subcomplexes<'a> {
    faces: Vec<&'a Simplex>,
    facets: Vec<Vec<usize>>,
    chosen: Vec<bool>,
    started: bool,
    done: bool,
}

impl<'a> Subcomplexes<'a> {
    pub(super) fn new(x: &'a SimplicialComplex) -> Self {
        let faces: Vec<&Simplex> = x.simplices().collect();
        let facets = facet_table(&faces, x);
        let chosen = vec![false; faces.len()];
        Subcomplexes { faces, facets, chosen, started: false, done: false }
    }

    fn current(&self) -> SimplicialComplex {
        let list: Vec<Simplex> = self
            .faces
            .iter()
            .zip(&self.chosen)
            .filter(|(_, &c)| c)
            .map(|(s, _)| (*s).clone())
            .collect();
        SimplicialComplex::from_sorted_closed(list)
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.chosen.len()).rev() {
            if !self.chosen[i] && self.facets[i].iter().all(|&f| self.chosen[f]) {
                self.chosen[i] = true;
                for c in &mut self.chosen[i + 1..] {
                    *c = false;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Subcomplexes<'_> {
    type Item = SimplicialComplex;

    fn next(&mut self) -> Option<SimplicialComplex> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Number of subcomplexes of `x` (empty one included), stopping early once
/// `limit` is exceeded; the return value is then `limit + 1`.
pub fn count_subcomplexes(x: &SimplicialComplex, limit: u64) -> u64 {
    let faces: Vec<&Simplex> = x.simplices().collect();
    let facets = facet_table(&faces, x);
    let mut chosen = vec![false; faces.len()];
    let mut count = 0u64;
    fn rec(i: usize, facets: &[Vec<usize>], chosen: &mut [bool], count: &mut u64, limit: u64) {
        if *count > limit {
            return;
        }
        if i == facets.len() {
            *count += 1;
            return;
        }
        rec(i + 1, facets, chosen, count, limit);
        if facets[i].iter().all(|&f| chosen[f]) {
            chosen[i] = true;
            rec(i + 1, facets, chosen, count, limit);
            chosen[i] = false;
        }
    }
    rec(0, &facets, &mut chosen, &mut count, limit);
    count.min(limit.saturating_add(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let pt = SimplicialComplex::from_maximal([[0]]).unwrap();
        assert_eq!(pt.subcomplexes().count(), 2);
        let edge = SimplicialComplex::from_maximal([[0, 1]]).unwrap();
        assert_eq!(edge.subcomplexes().count(), 5);
        let x1 = SimplicialComplex::from_maximal([vec![0, 2], vec![1]]).unwrap();
        assert_eq!(x1.subcomplexes().count(), 10);
        assert_eq!(count_subcomplexes(&x1, u64::MAX), 10);
        assert_eq!(count_subcomplexes(&x1, 4), 5);
    }

    #[test]
    fn order_and_uniqueness() {
        let tri = SimplicialComplex::from_maximal([[0, 1, 2]]).unwrap();
        let all: Vec<_> = tri.subcomplexes().collect();
        assert_eq!(all.len(), 19);
        assert!(all[0].is_empty());
        assert_eq!(all.last().unwrap(), &tri);
        let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 19);
        assert!(all.iter().all(|a| a.is_downward_closed() && a.is_subcomplex_of(&tri)));
    }

    #[test]
    fn empty_complex_has_one_subcomplex() {
        assert_eq!(SimplicialComplex::empty().subcomplexes().count(), 1);
    }
}
