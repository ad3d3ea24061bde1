use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::ExperimentReport;
use crate::ampleness::{is_r_ample_with, max_ampleness_with, AmpleOptions};
use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct PartitionConfig {
    pub parts: usize,
    pub seed: u64,
    pub r: usize,
    /// Independent random partitions, seeded `seed + i`.
    pub repeats: usize,
    pub force: bool,
}

impl Default for PartitionConfig {
    fn default() -> Self {
        PartitionConfig { parts: 2, seed: 0, r: 2, repeats: 1, force: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub repeat: usize,
    pub part: usize,
    pub vertices: usize,
    pub max_ampleness: usize,
}

/// Random equipartition of the vertices: shuffled, then dealt round-robin.
pub fn random_partition(x: &SimplicialComplex, parts: usize, seed: u64) -> Vec<Vec<Vertex>> {
    let mut vs = x.vertices().to_vec();
    vs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut out = vec![Vec::new(); parts];
    for (i, v) in vs.into_iter().enumerate() {
        out[i % parts].push(v);
    }
    for p in &mut out {
        p.sort_unstable();
    }
    out
}

/// Ampleness of the induced parts of random equipartitions of an r-ample
/// complex. A finite-scale look at partition behaviour; exploratory only.
pub fn partition_experiment(x: &SimplicialComplex, cfg: &PartitionConfig) -> Result<ExperimentReport<PartitionRecord>> {
    if cfg.parts == 0 || cfg.parts > x.vertex_count().max(1) {
        return Err(Error::InvalidParameters("parts must be between 1 and the number of vertices".into()));
    }
    let opts = AmpleOptions { force: cfg.force, ..AmpleOptions::default() };
    if !is_r_ample_with(x, cfg.r, &opts)?.is_ample() {
        return Err(Error::InvalidInput(format!("the complex is not {}-ample", cfg.r)));
    }
    let mut records = Vec::new();
    let mut max_over_parts = Vec::new();
    for repeat in 0..cfg.repeats {
        let mut best = 0;
        for (part, vs) in random_partition(x, cfg.parts, cfg.seed.wrapping_add(repeat as u64)).into_iter().enumerate() {
            let m = max_ampleness_with(&x.induced(&vs)?, cfg.r, &opts)?;
            best = best.max(m);
            records.push(PartitionRecord { repeat, part, vertices: vs.len(), max_ampleness: m });
        }
        max_over_parts.push(best);
    }
    let mut report = ExperimentReport::new("partition", true, cfg)?;
    report.summarize("max_over_parts", &max_over_parts);
    report.records = records;
    Ok(report)
}
