//! Seeded batch experiments: resilience under deletion, witness census,
//! partitions and medial-sample statistics.
//!
//! Trials are independent and seeded from the configuration, so a report is
//! a pure function of its configuration and thread count does not matter.

mod census;
mod medial_stats;
mod partition;
mod removal;
mod report;
mod resilience;

pub use census::{census_trend, witness_census, CensusConfig, CensusRecord};
pub use medial_stats::{beta, empirical_dimension_and_betti, MedialStatsConfig, MedialStatsRecord};
pub use partition::{partition_experiment, random_partition, PartitionConfig, PartitionRecord};
pub use removal::{
    connectivity_after_removal_bound, connectivity_after_removal_explicit, remove_family, resilience_guarantee,
    resilience_k, resilience_threshold, RemovalFamily, TABULATED_K,
};
pub use report::ExperimentReport;
pub use resilience::{resilience_experiment, sample_family, Arm, PoolEntry, ResilienceConfig, ResilienceRecord};
