//! Canonical serialisations.
//!
//! Text: first line `vertices <n>`, then one maximal simplex per line as
//! space-separated sorted ids, lines in lexicographic order.
//!
//! Structured: a JSON object `{"vertices": n, "maximal_simplices": [[...], ...]}`
//! with the same ordering. Both forms round-trip byte for byte.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Structured,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "structured" | "json" => Ok(Format::Structured),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: usize,
    pub maximal_simplices: Vec<Vec<Vertex>>,
}

impl ComplexFile {
    pub fn from_complex(x: &SimplicialComplex) -> Self {
        ComplexFile {
            vertices: x.vertex_count(),
            maximal_simplices: x.maximal_simplices().into_iter().map(|s| s.vertices().to_vec()).collect(),
        }
    }

    pub fn into_complex(self) -> Result<SimplicialComplex> {
        let x = SimplicialComplex::from_maximal(&self.maximal_simplices)?;
        if x.vertex_count() != self.vertices {
            return Err(Error::MalformedInput(format!(
                "header declares {} vertices but the simplexes use {}",
                self.vertices,
                x.vertex_count()
            )));
        }
        Ok(x)
    }
}

impl SimplicialComplex {
    pub fn to_text(&self) -> String {
        let file = ComplexFile::from_complex(self);
        let mut out = format!("vertices {}\n", file.vertices);
        for s in &file.maximal_simplices {
            let line: Vec<String> = s.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::MalformedInput("missing `vertices` header".into()))?;
        let count = header
            .trim()
            .strip_prefix("vertices")
            .map(str::trim)
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| Error::MalformedInput(format!("bad header line {header:?}")))?;
        let mut maximal = Vec::new();
        for line in lines {
            let ids = line
                .split_whitespace()
                .map(|t| t.parse::<Vertex>().map_err(|_| Error::MalformedInput(format!("bad vertex id {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            maximal.push(ids);
        }
        ComplexFile { vertices: count, maximal_simplices: maximal }.into_complex()
    }

    pub fn to_structured(&self) -> String {
        serde_json::to_string(&ComplexFile::from_complex(self)).expect("plain data serialises")
    }

    pub fn from_structured(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text)?;
        file.into_complex()
    }

    pub fn serialize_as(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => self.to_structured(),
        }
    }

    pub fn parse_as(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Text => Self::from_text(text),
            Format::Structured => Self::from_structured(text),
        }
    }

    /// Parses either format, detecting JSON by a leading `{`.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_structured(text)
        } else {
            Self::from_text(text)
        }
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexFile::from_complex(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        ComplexFile::deserialize(deserializer)?.into_complex().map_err(serde::de::Error::custom)
    }
}
