use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::removal::{remove_family, resilience_threshold, RemovalFamily};
use super::report::ExperimentReport;
use crate::ampleness::{is_r_ample_with, AmpleOptions};
use crate::complex::{Simplex, SimplicialComplex};
use crate::constructions::search_ample;
use crate::error::{Error, Result};
use crate::topology::{betti_numbers, Field};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ResilienceConfig {
    /// Vertex counts of the ambient simplex for the medial search.
    pub ns: Vec<usize>,
    pub r: usize,
    pub k: usize,
    /// Trials whose family satisfies `|F| + dim F < M'(k) + k`.
    pub trials: usize,
    /// Trials whose family meets or exceeds the bound (observed only).
    pub control_trials: usize,
    pub seed: u64,
    /// Medial samples drawn per search before giving up.
    pub search_trials: u64,
    pub complexes_per_n: usize,
    /// Dimensions members of a removal family are drawn from.
    pub member_dims: Vec<usize>,
    pub force: bool,
}

impl Default for ResilienceConfig {
    fn default() -> Self {
        ResilienceConfig {
            ns: vec![20, 30, 40, 50, 60],
            r: 2,
            k: 1,
            trials: 200,
            control_trials: 50,
            seed: 0,
            search_trials: 100_000,
            complexes_per_n: 2,
            member_dims: vec![0, 1],
            force: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoolEntry {
    pub n: usize,
    pub search_seed: u64,
    pub found_at: u64,
    pub vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arm {
    Hypothesis,
    Control,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResilienceRecord {
    pub trial: usize,
    pub arm: Arm,
    pub n: usize,
    pub complex_index: usize,
    pub vertices_before: usize,
    pub vertices_after: usize,
    pub family_size: usize,
    pub total_dimension: usize,
    pub weight: usize,
    pub bound: u64,
    pub target_r: usize,
    pub ample_after: bool,
    pub connected_after: bool,
}

/// Seed of the search for the `j`-th complex at size `n`.
fn pool_seed(seed: u64, n: usize, j: usize) -> u64 {
    seed.wrapping_add((n as u64) << 40).wrapping_add((j as u64) << 32)
}

fn trial_rng(seed: u64, arm: Arm, t: usize) -> ChaCha8Rng {
    let salt = match arm {
        Arm::Hypothesis => 0x5eed_0001,
        Arm::Control => 0x5eed_0002,
    };
    ChaCha8Rng::seed_from_u64(seed ^ (salt << 32) ^ t as u64)
}

/// Draws members of the allowed dimensions until the antichain weight
/// reaches `target` or no member fits.
pub fn sample_family(x: &SimplicialComplex, dims: &[usize], target: usize, rng: &mut ChaCha8Rng) -> RemovalFamily {
    let mut members: Vec<Simplex> = Vec::new();
    let mut family = RemovalFamily::new(Vec::new());
    for _ in 0..8 * target.max(1) {
        let remaining = target.saturating_sub(family.weight());
        let fits: Vec<usize> = dims.iter().copied().filter(|&d| d < remaining && !x.level(d).is_empty()).collect();
        let Some(&d) = fits.choose(rng) else { break };
        let s = x.level(d).choose(rng).expect("non-empty level").clone();
        members.push(s);
        family = RemovalFamily::new(members.clone());
        members = family.simplexes().to_vec();
    }
    family
}

/// Finds r-ample complexes by medial search, removes random families on
/// either side of the resilience bound and checks `(r − k)`-ampleness of
/// what is left. Every hypothesis-arm trial must pass.
pub fn resilience_experiment(cfg: &ResilienceConfig) -> Result<ExperimentReport<ResilienceRecord>> {
    if cfg.k >= cfg.r {
        return Err(Error::InvalidParameters("k must be smaller than r".into()));
    }
    let opts = AmpleOptions { force: cfg.force, ..AmpleOptions::default() };
    let mut pool: Vec<(PoolEntry, SimplicialComplex)> = Vec::new();
    for &n in &cfg.ns {
        for j in 0..cfg.complexes_per_n {
            let s = pool_seed(cfg.seed, n, j);
            let out = search_ample(n, cfg.r, cfg.search_trials, s, &opts)?;
            if let (Some(found_at), Some(x)) = (out.found_at, out.complex) {
                pool.push((PoolEntry { n, search_seed: s, found_at, vertices: x.vertex_count() }, x));
            }
        }
    }
    let bound = resilience_threshold(cfg.k) as u64;
    let target_r = cfg.r - cfg.k;
    let plan: Vec<(Arm, usize)> = (0..cfg.trials)
        .map(|t| (Arm::Hypothesis, t))
        .chain((0..cfg.control_trials).map(|t| (Arm::Control, t)))
        .collect();
    let records: Vec<ResilienceRecord> = if pool.is_empty() {
        Vec::new()
    } else {
        plan.par_iter()
            .map(|&(arm, t)| -> Result<ResilienceRecord> {
                let idx = t % pool.len();
                let (entry, x) = &pool[idx];
                let mut rng = trial_rng(cfg.seed, arm, t);
                let target = match arm {
                    Arm::Hypothesis => rng.gen_range(1..bound as usize),
                    Arm::Control => rng.gen_range(bound as usize..=bound as usize + 2),
                };
                let family = sample_family(x, &cfg.member_dims, target, &mut rng);
                let y = remove_family(x, &family)?;
                let ample_after = is_r_ample_with(&y, target_r, &opts)?.is_ample();
                let connected_after = betti_numbers(&y, Field::Rational).betti.first() == Some(&1);
                Ok(ResilienceRecord {
                    trial: t,
                    arm,
                    n: entry.n,
                    complex_index: idx,
                    vertices_before: x.vertex_count(),
                    vertices_after: y.vertex_count(),
                    family_size: family.cardinality(),
                    total_dimension: family.total_dimension(),
                    weight: family.weight(),
                    bound,
                    target_r,
                    ample_after,
                    connected_after,
                })
            })
            .collect::<Result<_>>()?
    };
    let hyp: Vec<&ResilienceRecord> =
        records.iter().filter(|r| r.arm == Arm::Hypothesis && (r.weight as u64) < bound).collect();
    let ctl: Vec<&ResilienceRecord> = records.iter().filter(|r| r.arm == Arm::Control).collect();
    let passes = hyp.iter().filter(|r| r.ample_after).count();
    let ctl_passes = ctl.iter().filter(|r| r.ample_after).count();
    let mut report = ExperimentReport::new("resilience", false, cfg)?;
    report.summarize("pool", pool.iter().map(|(e, _)| e).collect::<Vec<_>>());
    report.summarize("hypothesis_trials", hyp.len());
    report.summarize("hypothesis_passes", passes);
    report.summarize("hypothesis_pass_rate", rate(passes, hyp.len()));
    report.summarize("control_trials", ctl.len());
    report.summarize("control_passes", ctl_passes);
    report.summarize("control_pass_rate", rate(ctl_passes, ctl.len()));
    report.records = records;
    Ok(report)
}

pub(crate) fn rate(hits: usize, total: usize) -> Option<f64> {
    (total > 0).then(|| hits as f64 / total as f64)
}
