//! Generators: Iterated Paley complexes, the medial-regime sampler, the Rado
//! and Barmak towers, random search for ample complexes and small fixtures.

mod fixtures;
mod medial;
mod paley;
mod search;
mod towers;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use fixtures::{builtin, example_thirteen, octahedron, projective_plane, sphere_join, BUILTIN_NAMES};
pub use medial::{
    ampleness_failure_bound, ampleness_failure_log2_bound, existence_threshold, medial_probability, medial_sample,
    MedialSample,
};
pub use paley::{
    is_prime, least_primitive_root, paley_complex, paley_parameter_check, paley_residues, PaleyResidueSet,
    PrimeFieldSpec, MAX_PALEY_Q,
};
pub use search::{search_ample, trial_seed, SearchOutcome};
pub use towers::{
    barmak_tower, rado_tower, rado_local_extension, BarmakOptions, BudgetStatus, ConeLabel, Tower, TowerStage,
    DEFAULT_TOWER_BUDGET,
};

/// Description of how a complex was produced, echoed next to every
/// generated file.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ConstructionMetadata {
    pub generator: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub budget_status: Option<BudgetStatus>,
}

impl ConstructionMetadata {
    pub fn new(generator: &str) -> Self {
        ConstructionMetadata { generator: generator.to_string(), ..Default::default() }
    }

    pub fn param<T: Serialize>(mut self, key: &str, value: T) -> Self {
        let v = serde_json::to_value(value).expect("plain parameter");
        self.parameters.insert(key.to_string(), v);
        self
    }
}
