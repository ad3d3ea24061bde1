use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::chain::{boundary_matrix, ChainComplexMatrices, Field};
use super::linalg::{rank_gf2, rank_rational, torsion_coefficients, SparseMatrix};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Default cap on the number of simplexes for Smith normal form.
pub const TORSION_GUARD: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub field: Field,
    /// Unreduced Betti numbers in dimensions `0..=dim X`.
    pub betti: Vec<usize>,
    /// Invariant factors greater than one of `H_d(X; Z)`, per dimension.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub torsion: Option<Vec<Vec<u64>>>,
}

impl BettiReport {
    /// Reduced Betti numbers indexed from dimension −1: entry 0 is `b̃_{−1}`
    /// (1 only for the empty complex), entry `d + 1` is `b̃_d`.
    pub fn reduced(&self) -> Vec<i64> {
        let mut out = vec![if self.betti.is_empty() { 1 } else { 0 }];
        out.extend(self.betti.iter().enumerate().map(|(d, &b)| if d == 0 { b as i64 - 1 } else { b as i64 }));
        out
    }

    /// Reduced Betti number in dimension `d ≥ −1`; zero above the dimension.
    pub fn reduced_at(&self, d: i64) -> i64 {
        self.reduced().get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// Whether `b̃_i = 0` for every `−1 ≤ i ≤ k`.
    pub fn vanishes_through(&self, k: i64) -> bool {
        (-1..=k).all(|i| self.reduced_at(i) == 0)
    }

    /// Largest `k` with `b̃_i = 0` for all `i ≤ k`, capped at `dim X`
    /// (`−2` for the empty complex).
    pub fn homological_connectivity(&self) -> i64 {
        let top = self.betti.len() as i64 - 1;
        (-1..=top).take_while(|&i| self.reduced_at(i) == 0).last().unwrap_or(-2)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

/// Unreduced Betti numbers `b_d = f_d − rank ∂_d − rank ∂_{d+1}`.
pub fn betti_numbers(x: &SimplicialComplex, field: Field) -> BettiReport {
    let chain = ChainComplexMatrices::of(x);
    let ranks: Vec<usize> = chain.maps.iter().map(|m| field.rank(m)).collect();
    let f = x.f_vector();
    let betti = (0..f.len()).map(|d| f[d] - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0)).collect();
    BettiReport { field, betti, torsion: None }
}

/// Torsion of `H_d(X; Z)` for every `d`, via Smith normal form of `∂_{d+1}`.
pub fn integral_torsion(x: &SimplicialComplex) -> Result<Vec<Vec<u64>>> {
    integral_torsion_with_guard(x, TORSION_GUARD)
}

pub fn integral_torsion_with_guard(x: &SimplicialComplex, guard: usize) -> Result<Vec<Vec<u64>>> {
    if x.simplex_count() > guard {
        return Err(Error::ResourceLimit(format!(
            "Smith normal form is limited to {guard} simplexes (complex has {})",
            x.simplex_count()
        )));
    }
    let top = x.dim();
    if top < 0 {
        return Ok(Vec::new());
    }
    (0..=top as usize)
        .map(|d| {
            torsion_coefficients(&boundary_matrix(x, d + 1))
                .into_iter()
                .map(|t| t.to_u64().ok_or_else(|| Error::ResourceLimit("torsion coefficient exceeds 64 bits".into())))
                .collect()
        })
        .collect()
}

/// Betti numbers over `field` together with integral torsion.
pub fn betti_with_torsion(x: &SimplicialComplex, field: Field) -> Result<BettiReport> {
    let mut report = betti_numbers(x, field);
    report.torsion = Some(integral_torsion(x)?);
    Ok(report)
}

/// A `dim`-cycle of `x_sub` carried with coefficient ±1 on each of its
/// top simplexes, signs propagated across shared facets.
fn fundamental_cycle(x_sub: &SimplicialComplex, dim: usize) -> Result<Vec<i64>> {
    let tops = x_sub.level(dim);
    if dim == 0 || tops.is_empty() {
        return Err(Error::InvalidInput(format!("no fundamental cycle in dimension {dim}")));
    }
    let bd = boundary_matrix(x_sub, dim);
    // Facet → incident top simplexes with incidence signs.
    let mut incident: Vec<Vec<(usize, i64)>> = vec![Vec::new(); bd.rows];
    for (j, col) in bd.cols.iter().enumerate() {
        for &(i, s) in col {
            incident[i].push((j, s));
        }
    }
    let mut coef = vec![0i64; tops.len()];
    for start in 0..tops.len() {
        if coef[start] != 0 {
            continue;
        }
        coef[start] = 1;
        let mut stack = vec![start];
        while let Some(j) = stack.pop() {
            for &(i, s) in &bd.cols[j] {
                for &(k, t) in &incident[i] {
                    if k != j && coef[k] == 0 {
                        // Opposite contributions on the shared facet.
                        coef[k] = -coef[j] * s * t;
                        stack.push(k);
                    }
                }
            }
        }
    }
    let mut residual = vec![0i64; bd.rows];
    for (j, col) in bd.cols.iter().enumerate() {
        for &(i, s) in col {
            residual[i] += coef[j] * s;
        }
    }
    if residual.iter().any(|&r| r != 0) {
        return Err(Error::InvalidInput(format!(
            "the top simplexes of the subcomplex do not form an oriented {dim}-cycle"
        )));
    }
    Ok(coef)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSurvival {
    pub rational: bool,
    pub gf2: bool,
}

/// Whether the fundamental `dim`-cycle of `x_sub` is not a boundary in `x`,
/// over the rationals and over GF(2).
pub fn cycle_survives(x_sub: &SimplicialComplex, x: &SimplicialComplex, dim: usize) -> Result<CycleSurvival> {
    if !x_sub.is_subcomplex_of(x) {
        return Err(Error::InvalidInput("the cycle carrier is not a subcomplex".into()));
    }
    let coef = fundamental_cycle(x_sub, dim)?;
    let mut column: Vec<(usize, i64)> = x_sub
        .level(dim)
        .iter()
        .zip(&coef)
        .map(|(s, &c)| (x.index_of(s).expect("subcomplex"), c))
        .collect();
    column.sort_unstable();
    let image = boundary_matrix(x, dim + 1);
    let mut extended = image.clone();
    if extended.rows == 0 {
        extended.rows = x.level(dim).len();
    }
    extended.cols.push(column);
    let image = SparseMatrix { rows: extended.rows, cols: image.cols };
    Ok(CycleSurvival {
        rational: rank_rational(&extended) > rank_rational(&image),
        gf2: rank_gf2(&extended) > rank_gf2(&image),
    })
}
