use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::census::sample_seed;
use super::report::ExperimentReport;
use super::resilience::rate;
use crate::constructions::medial_sample;
use crate::error::Result;
use crate::topology::{betti_numbers, Field};

/// `β(n) = log₂log₂ n + log₂log₂ ln n`; defined for `n > e`, finite once
/// `log₂ ln n > 0`.
pub fn beta(n: f64) -> Option<f64> {
    let v = n.log2().log2() + n.ln().log2().log2();
    v.is_finite().then_some(v)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MedialStatsConfig {
    pub ns: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub epsilon0: f64,
}

impl Default for MedialStatsConfig {
    fn default() -> Self {
        MedialStatsConfig { ns: vec![16, 32, 64, 128], trials: 20, seed: 0, epsilon0: 1.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MedialStatsRecord {
    pub n: usize,
    pub trial: usize,
    pub vertices: usize,
    pub dim: isize,
    pub beta: Option<f64>,
    pub in_range: Option<bool>,
    pub reduced_b0: i64,
    pub b1: i64,
    pub b2: i64,
}

/// Dimension and low Betti numbers of medial samples against
/// `⌊β(n)⌋ − 1 ≤ dim ≤ β(n) − 1 + ε₀`.
pub fn empirical_dimension_and_betti(cfg: &MedialStatsConfig) -> Result<ExperimentReport<MedialStatsRecord>> {
    let jobs: Vec<(usize, usize)> = cfg.ns.iter().flat_map(|&n| (0..cfg.trials).map(move |t| (n, t))).collect();
    let records: Vec<MedialStatsRecord> = jobs
        .par_iter()
        .map(|&(n, trial)| -> Result<MedialStatsRecord> {
            let x = medial_sample(n, sample_seed(cfg.seed, n, trial), None)?.complex;
            let b = betti_numbers(&x, Field::Rational);
            let beta = beta(n as f64);
            let in_range = beta.map(|b| {
                let d = x.dim() as f64;
                b.floor() - 1.0 <= d && d <= b - 1.0 + cfg.epsilon0
            });
            Ok(MedialStatsRecord {
                n,
                trial,
                vertices: x.vertex_count(),
                dim: x.dim(),
                beta,
                in_range,
                reduced_b0: b.reduced_at(0),
                b1: b.reduced_at(1),
                b2: b.reduced_at(2),
            })
        })
        .collect::<Result<_>>()?;
    let mut report = ExperimentReport::new("medial-stats", false, cfg)?;
    for &n in &cfg.ns {
        let rows: Vec<&MedialStatsRecord> = records.iter().filter(|r| r.n == n).collect();
        let inside = rows.iter().filter(|r| r.in_range == Some(true)).count();
        let b1_zero = rows.iter().filter(|r| r.b1 == 0).count();
        report.summarize(&format!("dim_in_range_rate_n{n}"), rate(inside, rows.len()));
        report.summarize(&format!("b1_vanishing_rate_n{n}"), rate(b1_zero, rows.len()));
        report.summarize(&format!("beta_n{n}"), beta(n as f64));
    }
    report.records = records;
    Ok(report)
}
