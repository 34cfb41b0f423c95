use std::collections::{BTreeSet, HashMap};

use crate::cartan::AffineCartanDatum;
use crate::crystal::graph::CrystalGraph;
use crate::crystal::weyl::{extremal_orbits, weyl_orbits};
use crate::report::{Report, Stage};

/// Simplicity conditions S1–S3.
pub fn is_simple(b: &CrystalGraph) -> Report {
    let mut rep = Report::new();
    let d = b.datum();
    let s1 = (0..b.len()).find(|&x| d.level(b.wt(x)) != 0);
    rep.push(match s1 {
        None => Stage::pass("simple:S1"),
        Some(x) => Stage::fail("simple:S1", format!("node {x} has nonzero level")),
    });
    let orbits = match weyl_orbits(b) {
        Ok(o) => o,
        Err(e) => {
            rep.push(Stage::fail("simple:S2", e.to_string()));
            return rep;
        }
    };
    let ext: Vec<Vec<usize>> = match extremal_orbits(b) {
        Ok(o) => o,
        Err(e) => {
            rep.push(Stage::fail("simple:S2", e.to_string()));
            return rep;
        }
    };
    rep.push(if ext.len() == 1 {
        Stage::pass("simple:S2")
    } else {
        Stage::fail("simple:S2", format!("{} extremal orbits among {} orbits", ext.len(), orbits.len()))
    });
    let mut counts: HashMap<&[i64], usize> = HashMap::new();
    for x in 0..b.len() {
        *counts.entry(b.wt(x)).or_insert(0) += 1;
    }
    let s3 = ext.iter().flatten().find(|&&x| counts[b.wt(x)] != 1);
    rep.push(match s3 {
        None => Stage::pass("simple:S3"),
        Some(&x) => Stage::fail("simple:S3", format!("extremal node {x} has weight multiplicity {}", counts[b.wt(x)])),
    });
    rep
}

/// `lev B = min_b ⟨c, ε(b)⟩` and the nodes attaining it.
pub fn level_and_minimal(b: &CrystalGraph) -> (i64, Vec<usize>) {
    let d = b.datum();
    let levels: Vec<i64> = (0..b.len()).map(|x| d.level(&b.eps_vector(x))).collect();
    let lev = levels.iter().copied().min().unwrap_or(0);
    let min = (0..b.len()).filter(|&x| levels[x] == lev).collect();
    (lev, min)
}

/// `(P_cl^+)_s`: nonnegative vectors with `Σ a_j^∨ c_j = s`.
pub fn dominant_level_weights(d: &AffineCartanDatum, s: i64) -> Vec<Vec<i64>> {
    fn rec(com: &[i64], k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == com.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut c = 0;
        while c * com[k] <= left {
            cur.push(c);
            rec(com, k + 1, left - c * com[k], cur, out);
            cur.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    if s >= 0 {
        rec(&d.comarks, 0, s, &mut Vec::new(), &mut out);
    }
    out
}

/// Perfectness of level `s`: `lev = s`, `⟨c, ε(b)⟩ = ⟨c, φ(b)⟩`, and `ε`, `φ`
/// restricted to `B_min` are bijections onto `(P_cl^+)_s`.
pub fn is_perfect(b: &CrystalGraph, s: i64) -> Report {
    let mut rep = Report::new();
    let d = b.datum();
    let (lev, min) = level_and_minimal(b);
    rep.push(if lev == s {
        Stage::pass("level")
    } else {
        Stage::fail("level", format!("level {lev}, expected {s}"))
    });
    let bad = (0..b.len()).find(|&x| d.level(&b.eps_vector(x)) != d.level(&b.phi_vector(x)));
    rep.push(match bad {
        None => Stage::pass("level:eps=phi"),
        Some(x) => Stage::fail("level:eps=phi", format!("node {x}")),
    });
    let target: BTreeSet<Vec<i64>> = dominant_level_weights(d, s).into_iter().collect();
    for (name, image) in [
        ("perfect:eps", min.iter().map(|&x| b.eps_vector(x)).collect::<Vec<_>>()),
        ("perfect:phi", min.iter().map(|&x| b.phi_vector(x)).collect::<Vec<_>>()),
    ] {
        let set: BTreeSet<Vec<i64>> = image.iter().cloned().collect();
        rep.push(if set.len() == image.len() && set == target {
            Stage::pass(name)
        } else {
            Stage::fail(
                name,
                format!("|B_min| = {}, |image| = {}, |(P_cl^+)_{s}| = {}", min.len(), set.len(), target.len()),
            )
        });
    }
    rep
}
