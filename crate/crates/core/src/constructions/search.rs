use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::medial::medial_sample;
use crate::ampleness::{is_r_ample_with, AmpleOptions};
use crate::complex::SimplicialComplex;
use crate::error::Result;

/// Seed of trial `i` in a search started from `seed`.
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_add(i)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub r: usize,
    pub seed: u64,
    pub trials: u64,
    /// Index of the first passing trial.
    pub found_at: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub complex: Option<SimplicialComplex>,
    /// Trials examined up to and including the first success (all trials on
    /// failure).
    pub trials_used: u64,
}

/// Draws medial samples on `n` vertices with seeds `seed + i` and returns the
/// first one (in trial order) that is r-ample. Trials run in parallel; the
/// outcome does not depend on scheduling.
pub fn search_ample(n: usize, r: usize, trials: u64, seed: u64, opts: &AmpleOptions) -> Result<SearchOutcome> {
    let opts = AmpleOptions { witness_table: false, ..*opts };
    // Validate the guards once so that errors are not confused with misses.
    is_r_ample_with(&SimplicialComplex::empty(), r, &opts)?;
    let hit = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<Option<(u64, SimplicialComplex)>> {
            let sample = medial_sample(n, trial_seed(seed, i), None)?;
            let verdict = is_r_ample_with(&sample.complex, r, &opts)?;
            Ok(verdict.is_ample().then_some((i, sample.complex)))
        })
        .find_map_first(Result::transpose);
    let (found_at, complex) = match hit.transpose()? {
        Some((i, x)) => (Some(i), Some(x)),
        None => (None, None),
    };
    Ok(SearchOutcome { n, r, seed, trials, found_at, complex, trials_used: found_at.map_or(trials, |i| i + 1) })
}
