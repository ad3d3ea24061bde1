//! Upper-bound arithmetic for topological complexity: for an r-connected
//! complex, `TC(X) < (2·dim X + 1)/(r + 1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest integer strictly below `(2·dim + 1)/(conn + 1)`, which is
/// `⌊2·dim/(conn + 1)⌋`.
pub fn tc_upper_bound(dim: u64, conn: u64) -> u64 {
    2 * dim / (conn + 1)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TcCalculation {
    /// `L = log₂ log₂ n`.
    pub l: f64,
    pub epsilon0: f64,
    /// `β(n) = log₂log₂ n + log₂log₂ ln n`, with the second term written as
    /// `log₂(L + log₂ ln 2)`.
    pub beta: f64,
    pub dim_bound: u64,
    pub conn_bound: u64,
    pub tc_bound: u64,
    /// Whether the bound has reached its limiting value 4.
    pub asymptotic: bool,
}

/// Chains the a.a.s. bounds for medial-regime complexes: `dim ≤ ⌊β − 1 + ε₀⌋`
/// and connectivity `⌊L/2 − 3⌋`, then applies [`tc_upper_bound`]. The whole
/// computation is in terms of `L`, so astronomically large `n` are fine.
pub fn medial_tc_calculator(l: f64, epsilon0: f64) -> Result<TcCalculation> {
    if !(l > 8.0) || !l.is_finite() {
        return Err(Error::OutOfRegime(format!("L = {l} must exceed 8 for a positive connectivity bound")));
    }
    if !(epsilon0 > 0.0) {
        return Err(Error::InvalidParameters("ε₀ must be positive".into()));
    }
    let beta = l + (l + std::f64::consts::LN_2.log2()).log2();
    let dim_bound = (beta - 1.0 + epsilon0).floor() as u64;
    let conn_bound = (l / 2.0 - 3.0).floor() as u64;
    let tc_bound = tc_upper_bound(dim_bound, conn_bound);
    Ok(TcCalculation { l, epsilon0, beta, dim_bound, conn_bound, tc_bound, asymptotic: tc_bound <= 4 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_bound() {
        assert_eq!(tc_upper_bound(3, 1), 3);
        assert_eq!(tc_upper_bound(2, 0), 4);
        assert_eq!(tc_upper_bound(4, 2), 2);
    }

    #[test]
    fn calculator_regimes() {
        let c = medial_tc_calculator(100.0, 1.0).unwrap();
        assert!(c.tc_bound <= 4);
        assert_eq!((c.dim_bound, c.conn_bound), (106, 47));
        assert_eq!(medial_tc_calculator(40.0, 1.0).unwrap().tc_bound, 5);
        assert!(medial_tc_calculator(8.0, 1.0).is_err());
        assert_eq!(medial_tc_calculator(1e6, 1.0).unwrap().tc_bound, 4);
    }
}
