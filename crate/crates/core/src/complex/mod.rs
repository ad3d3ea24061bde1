//! Finite abstract simplicial complexes.
//!
//! A [`SimplicialComplex`] stores every simplex explicitly (not only the
//! maximal ones), grouped by dimension in canonical order, together with a
//! hash index and per-vertex neighbour bitsets. Complexes are immutable once
//! built; every operation returns a new complex.

mod format;
mod iso;
mod simplex;
mod subcomplexes;

use std::fmt;

use fixedbitset::FixedBitSet;
use rustc_hash::{FxHashMap, FxHashSet};

pub use format::{ComplexFile, Format};
pub use iso::{is_isomorphic, ISO_VERTEX_LIMIT};
pub use simplex::{Simplex, Vertex};
pub use subcomplexes::{count_subcomplexes, Subcomplexes};

use crate::error::{Error, Result};

/// Bitset over vertex ids.
pub type VertexSet = FixedBitSet;

/// Largest vertex id a complex may use. The neighbour index is quadratic in
/// the id range.
pub const MAX_VERTEX_ID: Vertex = (1 << 14) - 1;

#[derive(Clone, Default)]
pub struct SimplicialComplex {
    levels: Vec<Vec<Simplex>>,
    lookup: FxHashMap<Simplex, usize>,
    vertices: Vec<Vertex>,
    vertex_mask: VertexSet,
    neighbors: Vec<VertexSet>,
}

/// The ambient simplex relative to which external simplexes are counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientContext {
    ambient: Vec<Vertex>,
}

impl AmbientContext {
    pub fn new<I: IntoIterator<Item = Vertex>>(ambient: I, complex: &SimplicialComplex) -> Result<Self> {
        let mut ambient: Vec<Vertex> = ambient.into_iter().collect();
        ambient.sort_unstable();
        ambient.dedup();
        if let Some(&v) = complex.vertices().iter().find(|v| ambient.binary_search(v).is_err()) {
            return Err(Error::InvalidInput(format!("vertex {v} of the complex is outside the ambient vertex set")));
        }
        Ok(AmbientContext { ambient })
    }

    /// The standard simplex on `0..n`.
    pub fn standard(n: u32, complex: &SimplicialComplex) -> Result<Self> {
        Self::new(0..n, complex)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.ambient
    }
}

fn vertex_set_from(vs: &[Vertex], bound: usize) -> VertexSet {
    let mut set = VertexSet::with_capacity(bound);
    for &v in vs {
        set.insert(v as usize);
    }
    set
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of a list of simplexes given as vertex lists.
    pub fn from_maximal<I, S>(maximal: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[Vertex]>,
    {
        let simplexes = maximal
            .into_iter()
            .map(|s| Simplex::new(s.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::closure_of(simplexes)
    }

    /// Downward closure of arbitrary simplexes.
    pub fn closure_of<I: IntoIterator<Item = Simplex>>(simplexes: I) -> Result<Self> {
        let mut set: FxHashSet<Simplex> = FxHashSet::default();
        for s in simplexes {
            if set.contains(&s) {
                continue;
            }
            for f in s.faces() {
                set.insert(f);
            }
        }
        Self::from_closed_set(set)
    }

    /// Builds from a family that must already be downward closed.
    pub fn from_closed<I: IntoIterator<Item = Simplex>>(simplexes: I) -> Result<Self> {
        let set: FxHashSet<Simplex> = simplexes.into_iter().collect();
        for s in &set {
            if let Some(missing) = s.facets().find(|f| !set.contains(f)) {
                return Err(Error::MalformedInput(format!(
                    "family is not downward closed: {s:?} present but face {missing:?} missing"
                )));
            }
        }
        Self::from_closed_set(set)
    }

    pub(crate) fn from_closed_set(set: FxHashSet<Simplex>) -> Result<Self> {
        if let Some(max) = set.iter().map(|s| s.last()).max() {
            if max > MAX_VERTEX_ID {
                return Err(Error::ResourceLimit(format!(
                    "vertex id {max} exceeds the supported maximum {MAX_VERTEX_ID}"
                )));
            }
        }
        let mut list: Vec<Simplex> = set.into_iter().collect();
        list.sort_unstable();
        Ok(Self::from_sorted_closed(list))
    }

    /// `list` is canonically sorted and downward closed.
    pub(crate) fn from_sorted_closed(list: Vec<Simplex>) -> Self {
        let mut levels: Vec<Vec<Simplex>> = Vec::new();
        for s in list {
            let d = s.dim();
            while levels.len() <= d {
                levels.push(Vec::new());
            }
            levels[d].push(s);
        }
        let mut lookup = FxHashMap::default();
        lookup.reserve(levels.iter().map(Vec::len).sum());
        for level in &levels {
            for (i, s) in level.iter().enumerate() {
                lookup.insert(s.clone(), i);
            }
        }
        let vertices: Vec<Vertex> = levels.first().map(|l| l.iter().map(|s| s.first()).collect()).unwrap_or_default();
        let bound = vertices.last().map_or(0, |&v| v as usize + 1);
        let vertex_mask = vertex_set_from(&vertices, bound);
        let mut neighbors = vec![VertexSet::with_capacity(bound); bound];
        if let Some(edges) = levels.get(1) {
            for e in edges {
                let (a, b) = (e.vertices()[0] as usize, e.vertices()[1] as usize);
                neighbors[a].insert(b);
                neighbors[b].insert(a);
            }
        }
        SimplicialComplex { levels, lookup, vertices, vertex_mask, neighbors }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Sorted vertex ids.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_mask(&self) -> &VertexSet {
        &self.vertex_mask
    }

    /// One past the largest vertex id (0 for the empty complex).
    pub fn id_bound(&self) -> usize {
        self.vertex_mask.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertex_mask.contains(v as usize)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.lookup.contains_key(s)
    }

    /// Membership test for a strictly increasing vertex slice.
    pub fn contains_sorted(&self, vs: &[Vertex]) -> bool {
        match vs.len() {
            0 => false,
            1 => self.has_vertex(vs[0]),
            2 => self.adjacent(vs[0], vs[1]),
            _ => self.lookup.contains_key(vs),
        }
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbors.get(a as usize).is_some_and(|n| n.contains(b as usize))
    }

    /// Neighbour bitset of `v` (empty for absent vertices).
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        static EMPTY: std::sync::OnceLock<VertexSet> = std::sync::OnceLock::new();
        self.neighbors.get(v as usize).unwrap_or_else(|| EMPTY.get_or_init(VertexSet::new))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count_ones(..)
    }

    /// Position of `s` within its dimension level.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    /// Dimension; −1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 1
    }

    pub fn level(&self, d: usize) -> &[Simplex] {
        self.levels.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn simplex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// All simplexes in canonical order.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.levels.iter().flatten()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Maximal simplexes sorted lexicographically by vertex sequence.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: FxHashSet<&Simplex> = FxHashSet::default();
        let mut out = Vec::new();
        for level in self.levels.iter().rev() {
            for s in level {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            for s in level {
                for f in s.facets() {
                    if let Some((k, _)) = self.lookup.get_key_value(&f) {
                        covered.insert(k);
                    }
                }
            }
        }
        out.sort_by(|a, b| a.vertices().cmp(b.vertices()));
        out
    }

    /// Every face of every stored simplex is stored, and the vertex index is consistent.
    pub fn is_downward_closed(&self) -> bool {
        self.simplices().all(|s| s.facets().all(|f| self.contains(&f)))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.simplices().all(|s| other.contains(s))
    }

    fn require_vertex(&self, v: Vertex) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::AbsentVertex(v))
        }
    }

    /// `Lk_X(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`.
    pub fn link(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::AbsentSimplex(sigma.vertices().to_vec()));
        }
        let mut out = Vec::new();
        for level in self.levels.iter().skip(sigma.len()) {
            for s in level {
                if sigma.is_face_of(s) {
                    let rest: Vec<Vertex> = s.vertices().iter().copied().filter(|v| !sigma.contains(*v)).collect();
                    out.push(Simplex::from_sorted_unchecked(&rest));
                }
            }
        }
        out.sort_unstable();
        Ok(Self::from_sorted_closed(out))
    }

    /// Smallest subcomplex containing every simplex that contains `v`.
    pub fn closed_star(&self, v: Vertex) -> Result<SimplicialComplex> {
        self.require_vertex(v)?;
        let mut set = FxHashSet::default();
        for level in &self.levels {
            for s in level {
                if s.contains(v) {
                    for f in s.faces() {
                        set.insert(f);
                    }
                }
            }
        }
        Self::from_closed_set(set)
    }

    /// Simplexes of the closed star of `v`, as a membership predicate that
    /// avoids building the star: `σ ∈ St(v) ⟺ σ ∪ {v} ∈ X`.
    pub fn in_closed_star(&self, v: Vertex, s: &Simplex) -> bool {
        if s.contains(v) {
            return self.contains(s);
        }
        self.contains(&s.with_vertex(v))
    }

    /// Induced subcomplex `X_U`.
    pub fn induced(&self, u: &[Vertex]) -> Result<SimplicialComplex> {
        let mut mask = VertexSet::with_capacity(self.id_bound());
        for &v in u {
            self.require_vertex(v)?;
            mask.insert(v as usize);
        }
        Ok(self.induced_by_mask(&mask))
    }

    /// Induced subcomplex on the vertices in `mask` that belong to the complex.
    pub fn induced_by_mask(&self, mask: &VertexSet) -> SimplicialComplex {
        let out: Vec<Simplex> = self
            .simplices()
            .filter(|s| s.vertices().iter().all(|&v| mask.contains(v as usize)))
            .cloned()
            .collect();
        Self::from_sorted_closed(out)
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if let Some(&v) = self.vertices.iter().find(|&&v| other.has_vertex(v)) {
            return Err(Error::IdCollision(format!("vertex {v} appears in both join factors")));
        }
        let mut set: FxHashSet<Simplex> = self.simplices().chain(other.simplices()).cloned().collect();
        for a in self.simplices() {
            for b in other.simplices() {
                set.insert(a.union(b));
            }
        }
        Self::from_closed_set(set)
    }

    /// Cone with apex `v` over `self`; the cone over the empty complex is `{v}`.
    pub fn cone(&self, v: Vertex) -> Result<SimplicialComplex> {
        if self.has_vertex(v) {
            return Err(Error::IdCollision(format!("cone apex {v} is already a vertex of the base")));
        }
        let mut list: Vec<Simplex> = self.simplices().cloned().collect();
        list.push(Simplex::vertex(v));
        list.extend(self.simplices().map(|s| s.with_vertex(v)));
        Self::from_closed_set(list.into_iter().collect())
    }

    /// Union of two complexes (ids are shared, not relabelled).
    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        Self::from_closed_set(self.simplices().chain(other.simplices()).cloned().collect())
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let (small, big) = if self.simplex_count() <= other.simplex_count() { (self, other) } else { (other, self) };
        Self::from_sorted_closed(small.simplices().filter(|s| big.contains(s)).cloned().collect())
    }

    /// Relabels vertices through `f`, which must be injective on the vertex set.
    pub fn relabel<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Result<SimplicialComplex> {
        let mut images: Vec<Vertex> = self.vertices.iter().map(|&v| f(v)).collect();
        images.sort_unstable();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IdCollision("relabelling is not injective".into()));
        }
        let list = self.simplices().map(|s| s.map(&f)).collect::<Result<Vec<_>>>()?;
        Self::from_closed_set(list.into_iter().collect())
    }

    /// Shifts every id by `offset`.
    pub fn shifted(&self, offset: Vertex) -> Result<SimplicialComplex> {
        self.relabel(|v| v + offset)
    }

    /// Simplexes over the ambient vertices of dimension at most `max_dim`
    /// that are not in the complex but whose whole boundary is. A missing
    /// ambient vertex is external because the boundary of a vertex is empty.
    pub fn external_simplexes(&self, ctx: &AmbientContext, max_dim: usize) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = ctx.vertices().iter().filter(|&&v| !self.has_vertex(v)).map(|&v| Simplex::vertex(v)).collect();
        for d in 1..=max_dim {
            let Some(base) = self.levels.get(d - 1) else { break };
            for tau in base {
                for w in self.extension_candidates(tau) {
                    let sigma = tau.with_vertex(w);
                    if !self.contains(&sigma) && sigma.facets().all(|f| self.contains(&f)) {
                        out.push(sigma);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertices `w > max(τ)` adjacent to every vertex of `τ` (any vertex above
    /// `τ` when `τ` is a single vertex, since then the edge itself is in question).
    pub(crate) fn extension_candidates(&self, tau: &Simplex) -> Vec<Vertex> {
        let last = tau.last();
        if tau.len() == 1 {
            return self.vertices.iter().copied().filter(|&w| w > last).collect();
        }
        let mut common = self.neighbors(tau.first()).clone();
        for &v in &tau.vertices()[1..] {
            common.intersect_with(self.neighbors(v));
        }
        common.ones().map(|w| w as Vertex).filter(|&w| w > last).collect()
    }

    /// Lazily enumerates every subcomplex, empty one first, in lexicographic
    /// order of inclusion vectors over the canonical simplex order.
    pub fn subcomplexes(&self) -> Subcomplexes<'_> {
        Subcomplexes::new(self)
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.levels.hash(state)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(V={}, max=", self.vertex_count())?;
        f.debug_list().entries(self.maximal_simplices()).finish()?;
        write!(f, ")")
    }
}
