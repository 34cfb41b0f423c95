//! KR crystals of `D_N^(1)` (0 and 1 attached to 2; `N−2` carries `N−1` and `N`).
//!
//! Letters are `1, …, N, N̄, …, 1̄`, with `k̄` stored as `-k`. Classical
//! highest weight crystals are realised as components of tensor powers of the
//! letter crystal. The affine edges of `B^{1,s}` and `B^{2,s}` come from an
//! involution `σ` commuting with the operators `2..=N`, with `f_0 = σ f_1 σ`.
//! Spin crystals carry their `0`-edges directly.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::cartan::{AffineCartanDatum, Lattice};
use crate::crystal::{signature_rule, CrystalGraph, Payload};
use crate::error::{Error, Result};

type Letter = i8;

fn letter_sig(n: usize, x: Letter, j: usize) -> (u32, u32) {
    let (j, n) = (j as i8, n as i8);
    if j < n {
        ((x == j + 1 || x == -j) as u32, (x == j || x == -(j + 1)) as u32)
    } else {
        ((x == -n || x == -(n - 1)) as u32, (x == n - 1 || x == n) as u32)
    }
}

fn letter_op(n: usize, x: Letter, j: usize, up: bool) -> Letter {
    let (j, n) = (j as i8, n as i8);
    match (j < n, up) {
        (true, true) => if x == j { j + 1 } else { -j },
        (true, false) => if x == j + 1 { j } else { -(j + 1) },
        (false, true) => if x == n - 1 { -n } else { -(n - 1) },
        (false, false) => if x == -n { n - 1 } else { n },
    }
}

/// Classical `f_j` / `e_j` on a word, `1 ≤ j ≤ n`.
pub fn word_op(n: usize, w: &[Letter], j: usize, up: bool) -> Option<Vec<Letter>> {
    let sig = signature_rule(w.iter().map(|&x| letter_sig(n, x, j)));
    let at = if up { sig.f_at } else { sig.e_at }?;
    let mut out = w.to_vec();
    out[at] = letter_op(n, w[at], j, up);
    Some(out)
}

fn eps_coords(n: usize, w: &[Letter]) -> Vec<i64> {
    let mut c = vec![0i64; n];
    for &x in w {
        if x > 0 {
            c[x as usize - 1] += 1;
        } else {
            c[(-x) as usize - 1] -= 1;
        }
    }
    c
}

/// Pairings with `h_0, …, h_N` of a weight given by doubled `ε`-coordinates.
fn pairings_doubled(n: usize, w2: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n + 1];
    out[0] = -(w2[0] + w2[1]) / 2;
    for j in 1..n {
        out[j] = (w2[j - 1] - w2[j]) / 2;
    }
    out[n] = (w2[n - 2] + w2[n - 1]) / 2;
    out
}

fn pairings(n: usize, w: &[i64]) -> Vec<i64> {
    let w2: Vec<i64> = w.iter().map(|x| 2 * x).collect();
    pairings_doubled(n, &w2)
}

/// Words reachable from `hw` by classical lowering operators.
pub fn classical_component(n: usize, hw: &[Letter]) -> Vec<Vec<Letter>> {
    let mut seen: HashMap<Vec<Letter>, ()> = HashMap::new();
    let mut out = vec![hw.to_vec()];
    seen.insert(hw.to_vec(), ());
    let mut i = 0;
    while i < out.len() {
        for j in 1..=n {
            if let Some(y) = word_op(n, &out[i], j, true) {
                if seen.insert(y.clone(), ()).is_none() {
                    out.push(y);
                }
            }
        }
        i += 1;
    }
    out
}

fn kmn_coords(n: usize, w: &[Letter]) -> Vec<u32> {
    let mut c = vec![0u32; 2 * n];
    for &x in w {
        let k = if x > 0 { x as usize - 1 } else { 2 * n - (-x) as usize };
        c[k] += 1;
    }
    c
}

/// `B^{r,s}` of `D_n^(1)` for `r ∈ {1, 2}` via the involution `σ`.
pub fn build_kr_type_d_sigma(n: usize, r: usize, s: usize) -> Result<CrystalGraph> {
    let datum = Arc::new(AffineCartanDatum::untwisted_d(n)?);
    if !(r == 1 || r == 2) {
        return Err(Error::OutOfScope(format!("node {r} of D_{n}^(1) with s = {s} has no model")));
    }
    if s == 0 {
        return Err(Error::OutOfRange { what: "level", index: s });
    }
    // (component index k, word)
    let mut nodes: Vec<(usize, Vec<Letter>)> = Vec::new();
    if r == 1 {
        nodes.extend(classical_component(n, &vec![1; s]).into_iter().map(|w| (s, w)));
    } else {
        for k in 0..=s {
            let hw: Vec<Letter> = (0..k).flat_map(|_| [1, 2]).collect();
            nodes.extend(classical_component(n, &hw).into_iter().map(|w| (k, w)));
        }
    }
    let payload = |w: &[Letter]| {
        if r == 1 {
            Payload::Coords(kmn_coords(n, w))
        } else {
            Payload::Word(w.to_vec())
        }
    };
    nodes.sort_by_key(|(_, w)| payload(w));
    let count = nodes.len();
    let index: HashMap<&[Letter], usize> = nodes.iter().enumerate().map(|(b, (_, w))| (w.as_slice(), b)).collect();
    let payloads: Vec<Payload> = nodes.iter().map(|(_, w)| payload(w)).collect();
    if r == 1 {
        let mut p = payloads.clone();
        p.dedup();
        if p.len() != count {
            return Err(Error::Model("coordinate payload not injective".into()));
        }
    }

    let mut f: Vec<Vec<Option<usize>>> = vec![vec![None; count]; n + 1];
    let mut e: Vec<Vec<Option<usize>>> = vec![vec![None; count]; n + 1];
    for j in 1..=n {
        for (b, (_, w)) in nodes.iter().enumerate() {
            if let Some(y) = word_op(n, w, j, true) {
                let t = *index.get(y.as_slice()).ok_or_else(|| Error::Model("component not closed".into()))?;
                f[j][b] = Some(t);
                e[j][t] = Some(b);
            }
        }
    }

    let coords: Vec<Vec<i64>> = nodes.iter().map(|(_, w)| eps_coords(n, w)).collect();
    let x_labels: Vec<usize> = (2..=n).collect();
    let mut by_key: HashMap<(usize, i64, Vec<i64>), usize> = HashMap::new();
    let mut x_highest = Vec::new();
    for b in 0..count {
        if x_labels.iter().all(|&a| e[a][b].is_none()) {
            let key = (nodes[b].0, coords[b][0], coords[b][1..].to_vec());
            if by_key.insert(key, b).is_some() {
                return Err(Error::Model(format!("ambiguous {{2..{n}}}-highest element at {b}")));
            }
            x_highest.push(b);
        }
    }

    let mut sigma = vec![usize::MAX; count];
    let mut queue = VecDeque::new();
    for &u in &x_highest {
        let (k, w1, lam) = (nodes[u].0 as i64, coords[u][0], &coords[u][1..]);
        let k2 = if r == 2 { lam[0] + s as i64 - k } else { k };
        let v = *by_key
            .get(&(k2 as usize, -w1, lam.to_vec()))
            .ok_or_else(|| Error::Model(format!("no partner for {{2..{n}}}-highest element {u}")))?;
        sigma[u] = v;
        queue.push_back(u);
    }
    while let Some(x) = queue.pop_front() {
        let sx = sigma[x];
        for &a in &x_labels {
            if let Some(y) = f[a][x] {
                let sy = f[a][sx].ok_or_else(|| Error::Conflict(format!("σ breaks f_{a} at {x}")))?;
                if sigma[y] == usize::MAX {
                    sigma[y] = sy;
                    queue.push_back(y);
                } else if sigma[y] != sy {
                    return Err(Error::Conflict(format!("σ ambiguous at {y}")));
                }
            }
        }
    }
    if let Some(b) = (0..count).find(|&b| sigma[b] == usize::MAX || sigma[sigma[b]] != b) {
        return Err(Error::Model(format!("σ is not an involution at {b}")));
    }
    for b in 0..count {
        f[0][b] = f[1][sigma[b]].map(|y| sigma[y]);
    }
    let wts = coords.iter().map(|c| pairings(n, c)).collect();
    Ok(CrystalGraph::from_f(datum, Lattice::Untwisted, wts, payloads, f))
}

/// Vector-node crystal `B^{1,s}`.
pub fn build_kr_type_d_vector(n: usize, s: usize) -> Result<CrystalGraph> {
    build_kr_type_d_sigma(n, 1, s)
}

/// `B^{2,s}`; classically `⊕_{k ≤ s} B(kϖ_2)`.
pub fn build_kr_type_d_adjoint(n: usize, s: usize) -> Result<CrystalGraph> {
    build_kr_type_d_sigma(n, 2, s)
}

/// Spin crystal `B^{node,1}`, `node ∈ {n−1, n}`, on sign vectors.
pub fn build_kr_type_d_spin(n: usize, node: usize) -> Result<CrystalGraph> {
    let datum = Arc::new(AffineCartanDatum::untwisted_d(n)?);
    if node != n && node + 1 != n {
        return Err(Error::OutOfRange { what: "spin node", index: node });
    }
    let parity = if node == n { 0 } else { 1 };
    let mut signs: Vec<String> = (0..1u32 << n)
        .filter(|m| (m.count_ones() % 2) == parity)
        .map(|m| (0..n).map(|k| if m & (1 << k) != 0 { '-' } else { '+' }).collect())
        .collect();
    signs.sort();
    let index: HashMap<&str, usize> = signs.iter().enumerate().map(|(b, s)| (s.as_str(), b)).collect();
    let count = signs.len();
    let mut f = vec![vec![None; count]; n + 1];
    for (b, s) in signs.iter().enumerate() {
        let v: Vec<u8> = s.bytes().collect();
        let set = |p: usize, q: usize, from: (u8, u8), to: (u8, u8)| -> Option<usize> {
            if (v[p], v[q]) != from {
                return None;
            }
            let mut w = v.clone();
            w[p] = to.0;
            w[q] = to.1;
            index.get(std::str::from_utf8(&w).ok()?).copied()
        };
        for j in 1..n {
            f[j][b] = set(j - 1, j, (b'+', b'-'), (b'-', b'+'));
        }
        f[n][b] = set(n - 2, n - 1, (b'+', b'+'), (b'-', b'-'));
        f[0][b] = set(0, 1, (b'-', b'-'), (b'+', b'+'));
    }
    let wts = signs
        .iter()
        .map(|s| {
            let w2: Vec<i64> = s.bytes().map(|c| if c == b'+' { 1 } else { -1 }).collect();
            pairings_doubled(n, &w2)
        })
        .collect();
    let payloads = signs.into_iter().map(Payload::Signs).collect();
    Ok(CrystalGraph::from_f(datum, Lattice::Untwisted, wts, payloads, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_two_is_highest() {
        for j in 1..=4 {
            assert_eq!(word_op(4, &[1, 2], j, false), None);
        }
    }

    #[test]
    fn letter_crystal_shape() {
        let c = classical_component(4, &[1]);
        assert_eq!(c.len(), 8);
    }

    #[test]
    fn sizes() {
        assert_eq!(build_kr_type_d_vector(4, 1).unwrap().len(), 8);
        assert_eq!(build_kr_type_d_vector(4, 2).unwrap().len(), 35);
        assert_eq!(build_kr_type_d_spin(4, 3).unwrap().len(), 8);
        assert_eq!(build_kr_type_d_adjoint(4, 1).unwrap().len(), 29);
    }
}
