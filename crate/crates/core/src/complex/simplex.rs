use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Vertex identifier. Ids are non-negative and unique within a complex.
pub type Vertex = u32;

/// A non-empty, strictly increasing sequence of vertex ids.
///
/// Simplexes order canonically: first by dimension, then lexicographically
/// on the vertex sequence. Every stream and serialized listing in the crate
/// uses this order.
#[derive(Clone, PartialEq, Eq)]
pub struct Simplex(SmallVec<[Vertex; 6]>);

impl Simplex {
    /// Builds a simplex from arbitrary-order vertices, rejecting empty input and
    /// repeated vertices.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut vs: SmallVec<[Vertex; 6]> = vertices.into_iter().collect();
        if vs.is_empty() {
            return Err(Error::MalformedInput("empty simplex".into()));
        }
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedInput(format!("repeated vertex in simplex {:?}", vs.as_slice())));
        }
        Ok(Simplex(vs))
    }

    /// Caller guarantees `vertices` is non-empty and strictly increasing.
    pub(crate) fn from_sorted_unchecked(vertices: &[Vertex]) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(SmallVec::from_slice(vertices))
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(smallvec::smallvec![v])
    }

    pub fn edge(a: Vertex, b: Vertex) -> Result<Self> {
        Self::new([a, b])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True when every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut out: SmallVec<[Vertex; 6]> = SmallVec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let next = match (self.0.get(i), other.0.get(j)) {
                (Some(&a), Some(&b)) if a == b => {
                    i += 1;
                    j += 1;
                    a
                }
                (Some(&a), Some(&b)) if a < b => {
                    i += 1;
                    a
                }
                (Some(_), Some(&b)) => {
                    j += 1;
                    b
                }
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (None, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            out.push(next);
        }
        Simplex(out)
    }

    /// `self ∪ {v}`; returns a clone when `v` is already present.
    pub fn with_vertex(&self, v: Vertex) -> Simplex {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                Simplex(out)
            }
        }
    }

    /// `self − {v}`, or `None` when that would leave nothing.
    pub fn without_vertex(&self, v: Vertex) -> Option<Simplex> {
        let pos = self.0.binary_search(&v).ok()?;
        if self.0.len() == 1 {
            return None;
        }
        let mut out = self.0.clone();
        out.remove(pos);
        Some(Simplex(out))
    }

    /// Codimension-one faces in order of the removed position; empty for a vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |skip| {
            let mut out = self.0.clone();
            out.remove(skip);
            Simplex(out)
        })
    }

    /// All non-empty faces including `self`, canonical order.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < 32, "simplex too large to enumerate faces");
        let mut out: Vec<Simplex> = (1u32..(1 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out
    }

    pub fn map<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Result<Simplex> {
        Simplex::new(self.0.iter().map(|&v| f(v)))
    }
}

pub(crate) fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut j = 0;
    for &v in small {
        while j < big.len() && big[j] < v {
            j += 1;
        }
        if j == big.len() || big[j] != v {
            return false;
        }
        j += 1;
    }
    true
}

impl Hash for Simplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.as_slice().hash(state)
    }
}

impl Borrow<[Vertex]> for Simplex {
    fn borrow(&self) -> &[Vertex] {
        &self.0
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<Vertex>::deserialize(deserializer)?;
        Simplex::new(vs).map_err(serde::de::Error::custom)
    }
}
