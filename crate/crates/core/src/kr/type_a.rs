//! `B^{i,s}` of `A_n^(1)` on rectangular semistandard tableaux, with `e_0`
//! conjugated from `e_1` by promotion.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cartan::{AffineCartanDatum, Lattice};
use crate::crystal::{signature_rule, CrystalGraph, Payload};
use crate::error::{Error, Result};

pub type Tableau = Vec<Vec<u8>>;

/// All semistandard fillings of the `rows × cols` rectangle over `1..=letters`,
/// in lexicographic row-major order.
pub fn rect_tableaux(rows: usize, cols: usize, letters: u8) -> Vec<Tableau> {
    fn fill(t: &mut Tableau, k: usize, rows: usize, cols: usize, letters: u8, out: &mut Vec<Tableau>) {
        if k == rows * cols {
            out.push(t.clone());
            return;
        }
        let (r, c) = (k / cols, k % cols);
        let lo_left = if c > 0 { t[r][c - 1] } else { 1 };
        let lo_up = if r > 0 { t[r - 1][c] + 1 } else { 1 };
        let lo = lo_left.max(lo_up).max(r as u8 + 1);
        let hi = letters - (rows - 1 - r) as u8;
        for x in lo..=hi {
            t[r][c] = x;
            fill(t, k + 1, rows, cols, letters, out);
        }
        t[r][c] = 0;
    }
    let mut out = Vec::new();
    if rows as u8 <= letters {
        fill(&mut vec![vec![0; cols]; rows], 0, rows, cols, letters, &mut out);
    }
    out
}

/// Cells in reading order: columns right to left, each top to bottom.
fn reading_cells(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    (0..cols).rev().flat_map(|c| (0..rows).map(move |r| (r, c))).collect()
}

/// Classical `f_j` (`up = true`) or `e_j` on a tableau, `1 ≤ j < letters`.
pub fn classical_op(t: &Tableau, j: u8, up: bool) -> Option<Tableau> {
    let cells = reading_cells(t.len(), t[0].len());
    let sig = signature_rule(cells.iter().map(|&(r, c)| {
        let x = t[r][c];
        ((x == j + 1) as u32, (x == j) as u32)
    }));
    let at = if up { sig.f_at } else { sig.e_at }?;
    let (r, c) = cells[at];
    let mut out = t.clone();
    out[r][c] = if up { j + 1 } else { j };
    Some(out)
}

/// Promotion: drop the letters `letters`, slide the holes to the top-left
/// by reverse jeu de taquin, fill them with 0 and add 1 throughout.
pub fn promotion(t: &Tableau, letters: u8) -> Tableau {
    let rows = t.len();
    let cols = t[0].len();
    let mut g: Vec<Vec<Option<u8>>> =
        t.iter().map(|row| row.iter().map(|&x| (x != letters).then_some(x)).collect()).collect();
    let mut holes: Vec<(usize, usize)> =
        (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).filter(|&(r, c)| g[r][c].is_none()).collect();
    holes.sort_by_key(|&(r, c)| (c, std::cmp::Reverse(r)));
    for (mut r, mut c) in holes {
        loop {
            let up = if r > 0 { g[r - 1][c] } else { None };
            let left = if c > 0 { g[r][c - 1] } else { None };
            let from_up = match (up, left) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(u), Some(l)) => u >= l,
            };
            let (nr, nc) = if from_up { (r - 1, c) } else { (r, c - 1) };
            g[r][c] = g[nr][nc].take();
            r = nr;
            c = nc;
        }
    }
    g.iter().map(|row| row.iter().map(|x| x.unwrap_or(0) + 1).collect()).collect()
}

/// Tableau model together with its promotion table.
pub struct TypeAModel {
    pub graph: CrystalGraph,
    pub tableaux: Vec<Tableau>,
    pub promotion: Vec<usize>,
}

/// `B^{i,s}` of `A_rank^(1)`.
pub fn build_kr_type_a(rank: usize, i: usize, s: usize) -> Result<CrystalGraph> {
    Ok(build_type_a_model(rank, i, s)?.graph)
}

pub fn build_type_a_model(rank: usize, i: usize, s: usize) -> Result<TypeAModel> {
    let datum = Arc::new(AffineCartanDatum::untwisted_a(rank)?);
    if i == 0 || i > rank {
        return Err(Error::OutOfRange { what: "node", index: i });
    }
    if s == 0 {
        return Err(Error::OutOfRange { what: "level", index: s });
    }
    let letters = (rank + 1) as u8;
    let tabs = rect_tableaux(i, s, letters);
    let index: HashMap<&Tableau, usize> = tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let lookup = |t: &Tableau| -> Result<usize> {
        index.get(t).copied().ok_or_else(|| Error::Model(format!("not semistandard: {t:?}")))
    };
    let n = tabs.len();
    let r = rank + 1;
    let mut f: Vec<Vec<Option<usize>>> = vec![vec![None; n]; r];
    for j in 1..r {
        for (b, t) in tabs.iter().enumerate() {
            if let Some(u) = classical_op(t, j as u8, true) {
                f[j][b] = Some(lookup(&u)?);
            }
        }
    }
    let pr: Vec<usize> = tabs.iter().map(|t| lookup(&promotion(t, letters))).collect::<Result<_>>()?;
    let mut pr_inv = vec![usize::MAX; n];
    for (b, &p) in pr.iter().enumerate() {
        if pr_inv[p] != usize::MAX {
            return Err(Error::Model("promotion is not injective".into()));
        }
        pr_inv[p] = b;
    }
    for b in 0..n {
        f[0][b] = f[1][pr[b]].map(|y| pr_inv[y]);
    }
    let wts = tabs
        .iter()
        .map(|t| {
            let mut content = vec![0i64; r + 1];
            for &x in t.iter().flatten() {
                content[x as usize] += 1;
            }
            let mut w = vec![0; r];
            for j in 1..r {
                w[j] = content[j] - content[j + 1];
            }
            w[0] = content[r] - content[1];
            w
        })
        .collect();
    let payloads = tabs.iter().cloned().map(Payload::Tableau).collect();
    let graph = CrystalGraph::from_f(datum, Lattice::Untwisted, wts, payloads, f);
    Ok(TypeAModel { graph, tableaux: tabs, promotion: pr })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_single_box_cycles() {
        assert_eq!(promotion(&vec![vec![4]], 4), vec![vec![1]]);
        assert_eq!(promotion(&vec![vec![2]], 4), vec![vec![3]]);
    }

    #[test]
    fn column_one_two_is_highest() {
        let t = vec![vec![1], vec![2]];
        assert_eq!(classical_op(&t, 1, false), None);
        assert_eq!(classical_op(&t, 2, false), None);
        assert_eq!(classical_op(&t, 2, true), Some(vec![vec![1], vec![3]]));
    }

    #[test]
    fn sizes() {
        assert_eq!(build_kr_type_a(3, 1, 1).unwrap().len(), 4);
        assert_eq!(build_kr_type_a(3, 2, 1).unwrap().len(), 6);
        assert!(build_kr_type_a(3, 4, 1).is_err());
    }
}
