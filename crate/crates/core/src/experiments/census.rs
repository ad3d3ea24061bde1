use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::ExperimentReport;
use crate::ampleness::witnesses;
use crate::complex::{SimplicialComplex, Vertex};
use crate::constructions::medial_sample;
use crate::error::Result;

/// Number of vertices `v ∉ U` with `Lk_X(v) ∩ X_U = A`.
pub fn witness_census(x: &SimplicialComplex, u: &[Vertex], a: &SimplicialComplex) -> Result<usize> {
    Ok(witnesses(x, u, a)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CensusConfig {
    pub ns: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Size of the vertex set `U` (its smallest vertices are used).
    pub u_size: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig { ns: vec![16, 32, 64, 128], trials: 20, seed: 0, u_size: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    pub trial: usize,
    pub vertices: usize,
    /// Position of `A` among the subcomplexes of `X_U`.
    pub a_index: usize,
    pub a_simplexes: usize,
    pub census: usize,
}

pub(crate) fn sample_seed(seed: u64, n: usize, trial: usize) -> u64 {
    seed.wrapping_add((n as u64) << 32).wrapping_add(trial as u64)
}

/// Witness counts for every `A ⊆ X_U` in medial samples of growing size.
/// A finite-scale look at witness multiplicity; exploratory only.
pub fn census_trend(cfg: &CensusConfig) -> Result<ExperimentReport<CensusRecord>> {
    let jobs: Vec<(usize, usize)> = cfg.ns.iter().flat_map(|&n| (0..cfg.trials).map(move |t| (n, t))).collect();
    let per_job: Vec<Vec<CensusRecord>> = jobs
        .par_iter()
        .map(|&(n, trial)| -> Result<Vec<CensusRecord>> {
            let x = medial_sample(n, sample_seed(cfg.seed, n, trial), None)?.complex;
            if x.vertex_count() <= cfg.u_size {
                return Ok(Vec::new());
            }
            let u = &x.vertices()[..cfg.u_size];
            let xu = x.induced(u)?;
            xu.subcomplexes()
                .enumerate()
                .map(|(a_index, a)| {
                    Ok(CensusRecord {
                        n,
                        trial,
                        vertices: x.vertex_count(),
                        a_index,
                        a_simplexes: a.simplex_count(),
                        census: witness_census(&x, u, &a)?,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let records: Vec<CensusRecord> = per_job.into_iter().flatten().collect();
    let mut report = ExperimentReport::new("census", true, cfg)?;
    for &n in &cfg.ns {
        let rows: Vec<&CensusRecord> = records.iter().filter(|r| r.n == n).collect();
        let mean = if rows.is_empty() { None } else { Some(rows.iter().map(|r| r.census as f64).sum::<f64>() / rows.len() as f64) };
        let min = rows.iter().map(|r| r.census).min();
        report.summarize(&format!("mean_census_n{n}"), mean);
        report.summarize(&format!("min_census_n{n}"), min);
    }
    report.records = records;
    Ok(report)
}
