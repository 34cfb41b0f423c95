//! Restriction of `B̂^{i,s}` to `Î_0` and the closed branching formulas.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cartan::{Case, OrbitDatum};
use crate::crystal::highest_weight_decomposition;
use crate::error::{Error, Result};
use crate::fixedpoint::FixedPointCrystal;
use crate::intertwiner::TildeCrystal;
use crate::lie;
use crate::scope::hat_rank;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchComponent {
    /// Coordinates in `ϖ̂_1, …, ϖ̂_n`.
    pub weight: Vec<i64>,
    pub mult: usize,
    pub dim: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingResult {
    pub components: Vec<BranchComponent>,
    pub total: usize,
}

impl BranchingResult {
    pub fn multiset(&self) -> BTreeMap<Vec<i64>, usize> {
        self.components.iter().map(|c| (c.weight.clone(), c.mult)).collect()
    }

    /// `Σ mult · dim`.
    pub fn weighted_dim(&self) -> u128 {
        self.components.iter().map(|c| c.mult as u128 * c.dim).sum()
    }
}

/// Cartan matrix of `ĝ_{Î_0}`.
pub fn classical_hat_matrix(orbit: &OrbitDatum) -> Vec<Vec<i64>> {
    let labels: Vec<usize> = (1..orbit.len()).collect();
    orbit.hat.submatrix(&labels)
}

/// Dimension of the irreducible `ĝ_{Î_0}`-module of highest weight `λ`
/// (in `ϖ̂` coordinates), by the product formula.
pub fn weyl_dimension(orbit: &OrbitDatum, lambda: &[i64]) -> Result<u128> {
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    lie::weyl_dimension(&classical_hat_matrix(orbit), lambda)
}

/// The same dimension as the total multiplicity of the Freudenthal character.
pub fn weyl_dimension_freudenthal(orbit: &OrbitDatum, lambda: &[i64]) -> Result<u128> {
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let ch = lie::freudenthal_character(&classical_hat_matrix(orbit), lambda)?;
    Ok(ch.values().map(|&m| m as u128).sum())
}

/// `ϖ_i = Λ_i − a_i^∨ Λ_0` on `I`.
pub fn varpi(orbit: &OrbitDatum, i: usize) -> Vec<i64> {
    orbit.datum.level_zero_fundamental(i)
}

/// `ϖ̂_i` on `Î`.
pub fn varpi_hat(orbit: &OrbitDatum, i: usize) -> Vec<i64> {
    orbit.hat_fundamental(i)
}

/// `ϖ̃_i = Σ_k ϖ_{ω^k(i)}`.
pub fn varpi_tilde(orbit: &OrbitDatum, i: usize) -> Vec<i64> {
    orbit.tilde_fundamental(i)
}

/// Highest weights of `B̂` for `Î_0`, cross-checked against the `ω`-fixed
/// `I_0`-highest nodes of the parent.
pub fn branch_hat(fp: &FixedPointCrystal) -> Result<BranchingResult> {
    let labels: Vec<usize> = (1..fp.orbit.len()).collect();
    let dec = highest_weight_decomposition(&fp.graph, &labels)?;
    let hat_hw: BTreeSet<usize> = dec.components.iter().map(|c| fp.nodes[c.highest]).collect();
    let parent_labels: Vec<usize> = (1..fp.parent.labels()).collect();
    let parent_hw: BTreeSet<usize> =
        fp.parent.highest_nodes(&parent_labels).into_iter().filter(|&b| fp.parent_omega[b] == b).collect();
    if hat_hw != parent_hw {
        return Err(Error::Decomposition(format!(
            "Î_0-highest nodes {hat_hw:?} differ from ω-fixed I_0-highest nodes {parent_hw:?}"
        )));
    }
    let mut comps: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for c in &dec.components {
        let dim = weyl_dimension(&fp.orbit, &c.weight[1..])?;
        if dim != c.size as u128 {
            return Err(Error::Decomposition(format!(
                "component of weight {:?} has {} nodes, dimension {dim}",
                &c.weight[1..],
                c.size
            )));
        }
        *comps.entry(c.weight[1..].to_vec()).or_insert(0) += 1;
    }
    collect(&fp.orbit, comps, fp.len())
}

fn collect(orbit: &OrbitDatum, comps: BTreeMap<Vec<i64>, usize>, total: usize) -> Result<BranchingResult> {
    let components = comps
        .into_iter()
        .map(|(weight, mult)| Ok(BranchComponent { dim: weyl_dimension(orbit, &weight)?, weight, mult }))
        .collect::<Result<Vec<_>>>()?;
    Ok(BranchingResult { components, total })
}

/// All vectors of `len` entries, supported on `support`, with entry sum
/// `≤ s` (or `= s` when `exact`).
fn bounded(len: usize, support: &[usize], s: i64, exact: bool) -> Vec<Vec<i64>> {
    fn rec(support: &[usize], left: i64, exact: bool, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        match support.split_first() {
            None => {
                if !exact || left == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&k, rest)) => {
                for c in 0..=left {
                    cur[k] = c;
                    rec(rest, left - c, exact, cur, out);
                }
                cur[k] = 0;
            }
        }
    }
    let mut out = Vec::new();
    rec(support, s, exact, &mut vec![0; len], &mut out);
    out
}

/// Closed-form multiset for `B̂^{i,s}` in `ϖ̂` coordinates, all multiplicities one.
pub fn expected_branching(case: Case, n: usize, i: usize, s: usize) -> Result<BTreeMap<Vec<i64>, usize>> {
    let n = case.normalize_rank(n);
    let len = hat_rank(case, n);
    if i == 0 || i > len {
        return Err(Error::OutOfRange { what: "node", index: i });
    }
    let s = s as i64;
    let weights: Vec<Vec<i64>> = match case {
        Case::A if i == n => {
            let mut w = vec![0; len];
            w[n - 1] = s;
            vec![w]
        }
        Case::A | Case::B => bounded(len, &(0..i).collect::<Vec<_>>(), s, false),
        Case::C => {
            // Indices p_i, p_i + 2, …, i with exact sum s; ϖ̂_0 = 0 absorbs the slack.
            if i.is_multiple_of(2) {
                let support: Vec<usize> = (2..=i).step_by(2).map(|k| k - 1).collect();
                bounded(len, &support, s, false)
            } else {
                let support: Vec<usize> = (1..=i).step_by(2).map(|k| k - 1).collect();
                bounded(len, &support, s, true)
            }
        }
        Case::D if i == 1 => bounded(len, &[0], s, false),
        Case::D => return Err(Error::NoFormula(format!("case (d), i = {i}"))),
    };
    Ok(weights.into_iter().map(|w| (w, 1)).collect())
}

/// Branching of `B̂^{i,s}` for the `E_6^(1)` orbit algebra. Recorded for
/// `i ∈ {1, 4}`; there is no `E_6` model, so these are never exercised.
pub fn expected_branching_e6(i: usize, s: usize) -> Result<BTreeMap<Vec<i64>, usize>> {
    let s = s as i64;
    let weights = match i {
        1 => bounded(4, &[0], s, false),
        4 => bounded(4, &[0, 3], s, false),
        _ => return Err(Error::NoFormula(format!("case (e), i = {i}"))),
    };
    Ok(weights.into_iter().map(|w| (w, 1)).collect())
}

/// Outcome of the multiplicity-freeness gate on `B̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateResult {
    pub multiplicity_free: bool,
    /// When multiplicity-free: whether the `ω*`-fixed-weight characterisation
    /// reproduces the highest nodes of `B̂`.
    pub fixed_weight_agrees: Option<bool>,
}

pub fn multiplicity_free_gate(t: &TildeCrystal, fp: &FixedPointCrystal) -> Result<GateResult> {
    let labels: Vec<usize> = (1..t.graph.labels()).collect();
    let dec = highest_weight_decomposition(&t.graph, &labels)?;
    let free = dec.multiset().values().all(|&m| m == 1);
    if !free {
        return Ok(GateResult { multiplicity_free: false, fixed_weight_agrees: None });
    }
    let by_weight: BTreeSet<usize> = dec
        .components
        .iter()
        .filter(|c| t.orbit.omega.act_on_weight(&c.weight) == c.weight)
        .map(|c| c.highest)
        .collect();
    let hat_labels: Vec<usize> = (1..fp.orbit.len()).collect();
    let hat_hw: BTreeSet<usize> = fp.graph.highest_nodes(&hat_labels).into_iter().map(|h| fp.nodes[h]).collect();
    Ok(GateResult { multiplicity_free: true, fixed_weight_agrees: Some(by_weight == hat_hw) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_counts() {
        assert_eq!(bounded(3, &[0, 1], 2, false).len(), 6);
        assert_eq!(bounded(3, &[0, 2], 2, true).len(), 3);
    }

    #[test]
    fn formulas() {
        let set = |v: Vec<Vec<i64>>| v.into_iter().map(|w| (w, 1)).collect::<BTreeMap<_, _>>();
        assert_eq!(expected_branching(Case::C, 3, 2, 1).unwrap(), set(vec![vec![0, 0, 0], vec![0, 1, 0]]));
        assert_eq!(expected_branching(Case::B, 2, 1, 1).unwrap(), set(vec![vec![0, 0], vec![1, 0]]));
        assert_eq!(expected_branching(Case::A, 3, 3, 2).unwrap(), set(vec![vec![0, 0, 2]]));
        assert_eq!(
            expected_branching(Case::A, 2, 1, 2).unwrap(),
            set(vec![vec![0, 0], vec![1, 0], vec![2, 0]])
        );
        assert_eq!(expected_branching(Case::C, 3, 1, 2).unwrap(), set(vec![vec![2, 0, 0]]));
        assert_eq!(expected_branching(Case::C, 3, 3, 1).unwrap(), set(vec![vec![1, 0, 0], vec![0, 0, 1]]));
        assert!(matches!(expected_branching(Case::D, 3, 2, 1), Err(Error::NoFormula(_))));
        assert_eq!(expected_branching_e6(4, 1).unwrap().len(), 3);
        assert!(expected_branching_e6(3, 1).is_err());
    }
}
