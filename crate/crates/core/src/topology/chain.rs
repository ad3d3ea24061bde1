use serde::{Deserialize, Serialize};

use super::linalg::SparseMatrix;
use crate::complex::SimplicialComplex;

/// Boundary matrices `∂_d : C_d → C_{d−1}` with rows and columns in the
/// canonical simplex order of each dimension. `∂_0` is the zero map to the
/// trivial group.
#[derive(Clone, Debug, Default)]
pub struct ChainComplexMatrices {
    pub maps: Vec<SparseMatrix>,
}

/// Coefficient of the facet omitting position `i` is `(−1)^i`.
pub fn boundary_matrix(x: &SimplicialComplex, d: usize) -> SparseMatrix {
    if d == 0 {
        return SparseMatrix::zero(0, x.level(0).len());
    }
    let cols = x
        .level(d)
        .iter()
        .map(|s| {
            let mut col: Vec<(usize, i64)> = s
                .facets()
                .enumerate()
                .map(|(i, f)| {
                    let row = x.index_of(&f).expect("closed complex");
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    SparseMatrix { rows: x.level(d - 1).len(), cols }
}

impl ChainComplexMatrices {
    pub fn of(x: &SimplicialComplex) -> Self {
        let top = x.dim();
        let maps = if top < 0 { Vec::new() } else { (0..=top as usize).map(|d| boundary_matrix(x, d)).collect() };
        ChainComplexMatrices { maps }
    }

    /// `∂_{d−1} ∘ ∂_d = 0` for every `d`.
    pub fn is_chain_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    Rational,
}

impl std::str::FromStr for Field {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "gf2" | "GF2" | "2" => Ok(Field::Gf2),
            "rational" | "Q" | "q" | "rationals" => Ok(Field::Rational),
            other => Err(crate::Error::InvalidInput(format!("unknown field {other:?}"))),
        }
    }
}

impl Field {
    pub(crate) fn rank(self, m: &SparseMatrix) -> usize {
        match self {
            Field::Gf2 => super::linalg::rank_gf2(m),
            Field::Rational => super::linalg::rank_rational(m),
        }
    }
}
