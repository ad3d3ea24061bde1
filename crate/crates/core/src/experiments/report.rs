use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Per-trial records plus aggregates and the configuration that produced
/// them. Reports carry no timings, so rerunning a configuration reproduces
/// the report byte for byte.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentReport<R> {
    pub experiment: String,
    /// Finite-scale analogue of a statement about infinite complexes; no
    /// theorem predicts these numbers.
    pub exploratory: bool,
    pub config: serde_json::Value,
    pub summary: BTreeMap<String, serde_json::Value>,
    pub records: Vec<R>,
}

impl<R: Serialize> ExperimentReport<R> {
    pub fn new<C: Serialize>(experiment: &str, exploratory: bool, config: &C) -> Result<Self> {
        Ok(ExperimentReport {
            experiment: experiment.to_string(),
            exploratory,
            config: serde_json::to_value(config)?,
            summary: BTreeMap::new(),
            records: Vec::new(),
        })
    }

    pub fn summarize<T: Serialize>(&mut self, key: &str, value: T) {
        self.summary.insert(key.to_string(), serde_json::to_value(value).expect("plain summary value"));
    }

    /// One row per record, header from the record's field names.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            w.serialize(r)?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn to_json(&self, pretty: bool) -> Result<String> {
        Ok(if pretty { serde_json::to_string_pretty(self)? } else { serde_json::to_string(self)? })
    }
}
