//! Cone towers. Each stage attaches a fresh apex over a family of
//! subcomplexes of the previous stage; apexes are never adjacent to each
//! other, so the previous stage stays induced.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::complex::{count_subcomplexes, Simplex, SimplicialComplex, Vertex, MAX_VERTEX_ID};
use crate::error::{Error, Result};

use super::fixtures::sphere_join;

/// Default cap on the number of vertices of any stage.
pub const DEFAULT_TOWER_BUDGET: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum BudgetStatus {
    Complete,
    /// Stage `stage` would need at least `required` vertices.
    Exhausted { stage: usize, required: u64, budget: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeLabel {
    pub vertex: Vertex,
    /// Position of `base` in the enumeration order of the generating family.
    pub index: u64,
    pub base: SimplicialComplex,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TowerStage {
    pub stage: usize,
    pub complex: SimplicialComplex,
    pub parent_vertex_count: usize,
    pub labels: Vec<ConeLabel>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Tower {
    pub stages: Vec<TowerStage>,
    pub status: BudgetStatus,
}

impl Tower {
    pub fn last(&self) -> &TowerStage {
        self.stages.last().expect("stage 0 always exists")
    }

    pub fn is_complete(&self) -> bool {
        self.status == BudgetStatus::Complete
    }
}

fn effective_budget(budget: u64) -> u64 {
    budget.min(MAX_VERTEX_ID as u64 + 1)
}

/// Attaches one apex per base, apexes numbered from one past the largest id.
fn attach_cones(prev: &SimplicialComplex, bases: Vec<SimplicialComplex>) -> Result<(SimplicialComplex, Vec<ConeLabel>)> {
    let first = prev.id_bound() as Vertex;
    let mut set: FxHashSet<Simplex> = prev.simplices().cloned().collect();
    let mut labels = Vec::with_capacity(bases.len());
    for (i, base) in bases.into_iter().enumerate() {
        let v = first + i as Vertex;
        set.insert(Simplex::vertex(v));
        set.extend(base.simplices().map(|s| s.with_vertex(v)));
        labels.push(ConeLabel { vertex: v, index: i as u64, base });
    }
    Ok((SimplicialComplex::from_closed(set)?, labels))
}

/// Rado tower: `X₀` is a point and `X_{k+1}` attaches a cone over every
/// subcomplex of `X_k`, the empty one included. Stops with a partial result
/// once a stage would exceed `budget` vertices.
pub fn rado_tower(levels: usize, budget: u64) -> Result<Tower> {
    let budget = effective_budget(budget);
    let x0 = SimplicialComplex::from_maximal([[0u32]])?;
    let mut stages = vec![TowerStage { stage: 0, complex: x0, parent_vertex_count: 0, labels: Vec::new() }];
    for k in 1..=levels {
        let prev = &stages[k - 1].complex;
        let have = prev.vertex_count() as u64;
        let room = budget.saturating_sub(have);
        let count = count_subcomplexes(prev, room);
        if count > room {
            let status = BudgetStatus::Exhausted { stage: k, required: have + count, budget };
            return Ok(Tower { stages, status });
        }
        let (complex, labels) = attach_cones(prev, prev.subcomplexes().collect())?;
        stages.push(TowerStage { stage: k, complex, parent_vertex_count: have as usize, labels });
    }
    Ok(Tower { stages, status: BudgetStatus::Complete })
}

/// `X ∪ v⊛A` for a fresh vertex `v` (one past the largest id): the part of
/// the next Rado stage that involves the apex over `A`. Since apexes are
/// pairwise non-adjacent, links relative to vertex sets of `X` are the same
/// here as in the full next stage.
pub fn rado_local_extension(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<(SimplicialComplex, Vertex)> {
    if !a.is_subcomplex_of(x) {
        return Err(Error::InvalidSubcomplex("cone base is not a subcomplex".into()));
    }
    let v = x.id_bound() as Vertex;
    let (ext, _) = attach_cones(x, vec![a.clone()])?;
    Ok((ext, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarmakOptions {
    /// Also attach a cone over the empty subcomplex (an isolated vertex).
    pub include_empty: bool,
}

impl Default for BarmakOptions {
    fn default() -> Self {
        BarmakOptions { include_empty: false }
    }
}

/// Subcomplexes of `x` with at most `max_vertices` vertices, ordered by
/// vertex set (size, then lexicographic) and then canonically. Returns
/// `None` once more than `limit` have been produced.
fn small_subcomplexes(x: &SimplicialComplex, max_vertices: usize, include_empty: bool, limit: u64) -> Result<Option<Vec<SimplicialComplex>>> {
    let mut out = Vec::new();
    if include_empty {
        out.push(SimplicialComplex::empty());
    }
    let vs = x.vertices();
    let mut w: Vec<Vertex> = Vec::new();
    fn rec(
        x: &SimplicialComplex,
        vs: &[Vertex],
        start: usize,
        size: usize,
        w: &mut Vec<Vertex>,
        out: &mut Vec<SimplicialComplex>,
        limit: u64,
    ) -> Result<bool> {
        if w.len() == size {
            for a in x.induced(w)?.subcomplexes().filter(|a| a.vertex_count() == size) {
                out.push(a);
                if out.len() as u64 > limit {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        for i in start..vs.len() {
            w.push(vs[i]);
            let go = rec(x, vs, i + 1, size, w, out, limit)?;
            w.pop();
            if !go {
                return Ok(false);
            }
        }
        Ok(true)
    }
    for size in 1..=max_vertices.min(vs.len()) {
        if !rec(x, vs, 0, size, &mut w, &mut out, limit)? {
            return Ok(None);
        }
    }
    Ok(Some(out))
}

/// Barmak tower: `K₀` is the join of `n + 1` copies of `S⁰` and `K_{i+1}`
/// attaches a cone over every non-empty subcomplex of `K_i` with at most
/// `2n + 1` vertices.
pub fn barmak_tower(n: usize, iterations: usize, budget: u64, opts: BarmakOptions) -> Result<Tower> {
    let budget = effective_budget(budget);
    let k0 = sphere_join(n + 1)?;
    let mut stages = vec![TowerStage { stage: 0, complex: k0, parent_vertex_count: 0, labels: Vec::new() }];
    for i in 1..=iterations {
        let prev = &stages[i - 1].complex;
        let have = prev.vertex_count() as u64;
        let room = budget.saturating_sub(have);
        let Some(bases) = small_subcomplexes(prev, 2 * n + 1, opts.include_empty, room)? else {
            let status = BudgetStatus::Exhausted { stage: i, required: budget + 1, budget };
            return Ok(Tower { stages, status });
        };
        let (complex, labels) = attach_cones(prev, bases)?;
        stages.push(TowerStage { stage: i, complex, parent_vertex_count: have as usize, labels });
    }
    Ok(Tower { stages, status: BudgetStatus::Complete })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rado_counts() {
        let t = rado_tower(2, DEFAULT_TOWER_BUDGET).unwrap();
        let counts: Vec<usize> = t.stages.iter().map(|s| s.complex.vertex_count()).collect();
        assert_eq!(counts, vec![1, 3, 13]);
        assert!(t.is_complete());
        assert_eq!(t.stages[1].complex.f_vector(), vec![3, 1]);
        assert_eq!(t.stages[2].complex.f_vector(), vec![13, 18, 2]);
        for k in 1..=2 {
            let prev = &t.stages[k - 1].complex;
            let cur = &t.stages[k].complex;
            assert_eq!(&cur.induced(prev.vertices()).unwrap(), prev);
        }
    }

    #[test]
    fn rado_budget_stops_stage_three() {
        let t = rado_tower(3, DEFAULT_TOWER_BUDGET).unwrap();
        assert_eq!(t.stages.len(), 3);
        match t.status {
            BudgetStatus::Exhausted { stage, required, .. } => {
                assert_eq!(stage, 3);
                assert!(required > DEFAULT_TOWER_BUDGET.min(MAX_VERTEX_ID as u64 + 1));
            }
            BudgetStatus::Complete => panic!("stage 3 must not fit"),
        }
    }

    #[test]
    fn barmak_first_iteration() {
        let t = barmak_tower(1, 1, DEFAULT_TOWER_BUDGET, BarmakOptions::default()).unwrap();
        assert_eq!(t.stages[0].complex.f_vector(), vec![4, 4]);
        // 4 single vertices, 10 on two vertices, 16 on three.
        assert_eq!(t.stages[1].labels.len(), 30);
        assert_eq!(t.stages[1].complex.vertex_count(), 34);
        let with_empty = barmak_tower(1, 1, DEFAULT_TOWER_BUDGET, BarmakOptions { include_empty: true }).unwrap();
        assert_eq!(with_empty.stages[1].labels.len(), 31);
        let n0 = barmak_tower(0, 0, 10, BarmakOptions::default()).unwrap();
        assert_eq!(n0.stages[0].complex.f_vector(), vec![2]);
    }
}
