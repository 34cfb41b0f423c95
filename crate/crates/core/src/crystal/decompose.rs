use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::crystal::graph::CrystalGraph;
use crate::error::{Error, Result};
use crate::lie;
use crate::report::Stage;

/// Freudenthal characters keyed by (labels, highest weight).
pub type CharacterCache = HashMap<(Vec<usize>, Vec<i64>), BTreeMap<Vec<i64>, u64>>;

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub highest: usize,
    pub weight: Vec<i64>,
    pub size: usize,
    #[serde(skip)]
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HighestWeightDecomposition {
    pub labels: Vec<usize>,
    pub components: Vec<Component>,
}

impl HighestWeightDecomposition {
    /// Highest weights restricted to the labels, with multiplicities.
    pub fn multiset(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut out = BTreeMap::new();
        for c in &self.components {
            let w: Vec<i64> = self.labels.iter().map(|&j| c.weight[j]).collect();
            *out.entry(w).or_insert(0) += 1;
        }
        out
    }

    pub fn total(&self) -> usize {
        self.components.iter().map(|c| c.size).sum()
    }
}

/// Connected components of the subgraph with labels in `j`, each sorted,
/// ordered by smallest member.
pub fn components(b: &CrystalGraph, j: &[usize]) -> Vec<Vec<usize>> {
    let n = b.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &k in j {
                for y in [b.f(k, x), b.e(k, x)].into_iter().flatten() {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Splits `b` into `J`-components, each with exactly one `J`-highest node.
pub fn highest_weight_decomposition(b: &CrystalGraph, j: &[usize]) -> Result<HighestWeightDecomposition> {
    if j.len() >= b.labels() && b.labels() > 0 {
        return Err(Error::Decomposition("J must be a proper subset of I".into()));
    }
    let mut comps = Vec::new();
    for members in components(b, j) {
        let hw: Vec<usize> =
            members.iter().copied().filter(|&x| j.iter().all(|&k| b.e(k, x).is_none())).collect();
        if hw.len() != 1 {
            return Err(Error::Decomposition(format!(
                "component containing {} has {} highest nodes for J = {j:?}",
                members[0],
                hw.len()
            )));
        }
        comps.push(Component { highest: hw[0], weight: b.wt(hw[0]).to_vec(), size: members.len(), members });
    }
    Ok(HighestWeightDecomposition { labels: j.to_vec(), components: comps })
}

/// Compares each component's `J`-weight multiset with the character of its
/// highest weight.
pub fn check_characters(
    b: &CrystalGraph,
    dec: &HighestWeightDecomposition,
    cache: &mut CharacterCache,
) -> std::result::Result<(), String> {
    let j = &dec.labels;
    let a = b.datum().submatrix(j);
    for c in &dec.components {
        let lam: Vec<i64> = j.iter().map(|&k| c.weight[k]).collect();
        let key = (j.clone(), lam.clone());
        if !cache.contains_key(&key) {
            let ch = lie::freudenthal_character(&a, &lam).map_err(|e| e.to_string())?;
            cache.insert(key.clone(), ch);
        }
        let expected = &cache[&key];
        let mut got: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for &x in &c.members {
            let w: Vec<i64> = j.iter().map(|&k| b.wt(x)[k]).collect();
            *got.entry(w).or_insert(0) += 1;
        }
        if &got != expected {
            return Err(format!("J = {j:?}: component of node {} has weights unlike V({lam:?})", c.highest));
        }
    }
    Ok(())
}

/// Which proper subsets `J ⊊ I` a regularity check visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RegularityMode {
    /// `|J| ≤ 2`.
    #[default]
    RankTwo,
    /// All proper subsets.
    Full,
}

pub fn proper_subsets(r: usize, mode: RegularityMode) -> Vec<Vec<usize>> {
    let max = match mode {
        RegularityMode::RankTwo => 2.min(r.saturating_sub(1)),
        RegularityMode::Full => r.saturating_sub(1),
    };
    let mut out = Vec::new();
    for mask in 1u32..(1 << r) - 1 {
        if (mask.count_ones() as usize) <= max {
            out.push((0..r).filter(|&k| mask & (1 << k) != 0).collect::<Vec<_>>());
        }
    }
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

/// Every `J`-restriction decomposes into highest weight crystals with the
/// expected characters.
pub fn verify_regularity(b: &CrystalGraph, mode: RegularityMode) -> Stage {
    let mut cache = HashMap::new();
    for j in proper_subsets(b.labels(), mode) {
        let dec = match highest_weight_decomposition(b, &j) {
            Ok(d) => d,
            Err(e) => return Stage::fail("regularity", e.to_string()),
        };
        if let Err(w) = check_characters(b, &dec, &mut cache) {
            return Stage::fail("regularity", w);
        }
    }
    Stage::pass("regularity")
}

/// Regularity for a single subset, character check included.
pub fn check_regular(b: &CrystalGraph, j: &[usize]) -> Result<HighestWeightDecomposition> {
    let dec = highest_weight_decomposition(b, j)?;
    check_characters(b, &dec, &mut HashMap::new()).map_err(Error::Decomposition)?;
    Ok(dec)
}
