use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::chain::Field;
use super::disc::{fill_loop, FilledDisc};
use super::homology::{betti_numbers, BettiReport};
use crate::complex::{SimplicialComplex, Vertex};

/// Simple connectivity established by filling the fundamental cycles of a
/// spanning tree of the 1-skeleton; these loops generate the fundamental
/// group, so all of them bounding discs proves it trivial.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimpleConnectivityCertificate {
    pub r: usize,
    pub loops: usize,
    pub discs: Vec<FilledDisc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConnectivityReport {
    /// Largest `k` (capped at the dimension) with vanishing reduced Betti
    /// numbers through `k` over both fields; −1 when disconnected, −2 when empty.
    pub homological_connectivity: i64,
    pub gf2: BettiReport,
    pub rational: BettiReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simply_connected_certificate: Option<SimpleConnectivityCertificate>,
    /// Set when the report rests on homology alone; homology cannot rule out
    /// a non-trivial perfect fundamental group.
    pub homological_only: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Cycles `lca → … → u → w → … → lca` closing each non-tree edge `uw` of a
/// breadth-first spanning tree, or `None` when the 1-skeleton is
/// disconnected.
pub fn fundamental_cycles(x: &SimplicialComplex) -> Option<Vec<Vec<Vertex>>> {
    let root = *x.vertices().first()?;
    let bound = x.id_bound();
    let mut parent: Vec<Option<Vertex>> = vec![None; bound];
    let mut depth = vec![usize::MAX; bound];
    depth[root as usize] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in x.neighbors(v).ones() {
            if depth[w] == usize::MAX {
                depth[w] = depth[v as usize] + 1;
                parent[w] = Some(v);
                queue.push_back(w as Vertex);
            }
        }
    }
    if x.vertices().iter().any(|&v| depth[v as usize] == usize::MAX) {
        return None;
    }
    let mut cycles = Vec::new();
    for e in x.level(1) {
        let (u, w) = (e.vertices()[0], e.vertices()[1]);
        if parent[w as usize] == Some(u) || parent[u as usize] == Some(w) {
            continue;
        }
        let (mut a, mut b) = (vec![u], vec![w]);
        while a.last() != b.last() {
            let (la, lb) = (*a.last().unwrap(), *b.last().unwrap());
            if depth[la as usize] >= depth[lb as usize] {
                a.push(parent[la as usize].expect("not the root"));
            } else {
                b.push(parent[lb as usize].expect("not the root"));
            }
        }
        b.pop();
        // a runs u → lca, b runs w → just below lca.
        let mut cycle: Vec<Vertex> = a;
        cycle.extend(b.into_iter().rev());
        cycles.push(cycle);
    }
    Some(cycles)
}

/// Homological connectivity over GF(2) and the rationals. When the complex
/// is known to be r-ample with `r ≥ 4`, additionally certifies simple
/// connectivity by filling every fundamental cycle.
pub fn connectivity_report(x: &SimplicialComplex, verified_ample_r: Option<usize>) -> ConnectivityReport {
    let gf2 = betti_numbers(x, Field::Gf2);
    let rational = betti_numbers(x, Field::Rational);
    let homological_connectivity = gf2.homological_connectivity().min(rational.homological_connectivity());
    let mut certificate = None;
    let mut note = None;
    if let Some(r) = verified_ample_r.filter(|&r| r >= 4) {
        match fundamental_cycles(x) {
            None => note = Some("1-skeleton is disconnected; no simple-connectivity certificate".to_string()),
            Some(cycles) => {
                let discs: Result<Vec<FilledDisc>, _> = cycles.iter().map(|c| fill_loop(x, c, r)).collect();
                match discs.and_then(|ds| ds.iter().try_for_each(|d| d.validate(x).map(drop)).map(|_| ds)) {
                    Ok(discs) => certificate = Some(SimpleConnectivityCertificate { r, loops: cycles.len(), discs }),
                    Err(e) => note = Some(format!("disc filling failed: {e}")),
                }
            }
        }
    }
    ConnectivityReport {
        homological_connectivity,
        gf2,
        rational,
        homological_only: certificate.is_none(),
        simply_connected_certificate: certificate,
        note,
    }
}
