//! Finite-type root systems from a Cartan matrix: positive roots, Weyl
//! dimension formula and Freudenthal characters.
//!
//! Cartan matrices use the same convention as the affine data,
//! `a[i][j] = α_j(h_i)`. Weights are given by their pairings with the `h_i`.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;

use crate::error::{Error, Result};

/// Positive roots in simple-root coordinates, ordered by height.
pub fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let mut roots: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i)).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut start = 0;
    while start < roots.len() {
        let end = roots.len();
        for idx in start..end {
            let beta = roots[idx].clone();
            for i in 0..r {
                // α_i-string through β: p steps down, q steps up.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|k| beta[k] * a[i][k]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        roots.push(up);
                    }
                }
            }
        }
        start = end;
    }
    roots.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    roots
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

/// Positive integers `d_i` with `d_i a[i][j] = d_j a[j][i]`.
pub fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    // Rational d as (num, den), propagated along edges of the diagram.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; r];
    for root in 0..r {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some((1, 1));
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let (n, m) = d[i].unwrap();
            for j in 0..r {
                if j != i && a[i][j] != 0 && d[j].is_none() {
                    // d_j = d_i a[i][j] / a[j][i]
                    let num = n * a[i][j];
                    let den = m * a[j][i];
                    let g = num.gcd(&den);
                    d[j] = Some((num / g, den / g));
                    stack.push(j);
                }
            }
        }
    }
    let l = d.iter().fold(1i64, |acc, x| acc.lcm(&x.unwrap().1));
    let mut out: Vec<i64> = d.iter().map(|x| {
        let (n, m) = x.unwrap();
        (n * (l / m)).abs()
    }).collect();
    let g = out.iter().fold(0i64, |acc, v| acc.gcd(v));
    out.iter_mut().for_each(|v| *v /= g);
    out
}

/// Dimension of the irreducible module with highest weight `lambda`,
/// by the Weyl dimension formula.
pub fn weyl_dimension(a: &[Vec<i64>], lambda: &[i64]) -> Result<u128> {
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    if a.is_empty() {
        return Ok(1);
    }
    let at: Vec<Vec<i64>> = (0..a.len()).map(|i| (0..a.len()).map(|j| a[j][i]).collect()).collect();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for c in positive_roots(&at) {
        let top: i64 = c.iter().zip(lambda).map(|(ci, li)| ci * (li + 1)).sum();
        let bot: i64 = c.iter().sum();
        num *= top as u128;
        den *= bot as u128;
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

/// Weight multiplicities of the irreducible module with highest weight
/// `lambda`, by Freudenthal's formula. Keys are pairings with the `h_i`.
pub fn freudenthal_character(a: &[Vec<i64>], lambda: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let r = a.len();
    let mut out = BTreeMap::new();
    if r == 0 {
        out.insert(vec![], 1);
        return Ok(out);
    }
    let d = symmetrizer(a);
    let roots = positive_roots(a);
    let form = |x: &[i64], y: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += x[i] * y[j] * d[i] * a[i][j];
            }
        }
        s
    };
    // (λ, β) for β in root coordinates.
    let lam_pair = |beta: &[i64]| -> i64 { (0..r).map(|i| beta[i] * d[i] * lambda[i]).sum() };
    let rho_pair = |beta: &[i64]| -> i64 { (0..r).map(|i| beta[i] * d[i]).sum() };

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    let zero = vec![0i64; r];
    mult.insert(zero.clone(), 1);
    let mut layer = vec![zero];
    while !layer.is_empty() {
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let mut b = beta.clone();
                b[i] += 1;
                candidates.push(b);
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for beta in candidates {
            // μ = λ − β
            let lhs = 2 * (lam_pair(&beta) + rho_pair(&beta)) - form(&beta, &beta);
            let mut rhs = 0i64;
            for alpha in &roots {
                let mut k = 1;
                loop {
                    let shifted: Vec<i64> = beta.iter().zip(alpha).map(|(b, x)| b - k * x).collect();
                    if shifted.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&shifted) {
                        // (μ + kα, α) = (λ, α) − (β − kα, α)
                        rhs += m * (lam_pair(alpha) - form(&shifted, alpha));
                    }
                    k += 1;
                }
            }
            rhs *= 2;
            if rhs == 0 {
                continue;
            }
            if lhs <= 0 || rhs % lhs != 0 {
                return Err(Error::Model(format!("Freudenthal recursion not integral at {beta:?}")));
            }
            mult.insert(beta.clone(), rhs / lhs);
            next.push(beta);
        }
        layer = next;
    }
    for (beta, m) in mult {
        let w: Vec<i64> = (0..r).map(|k| lambda[k] - (0..r).map(|i| beta[i] * a[k][i]).sum::<i64>()).collect();
        *out.entry(w).or_insert(0) += m as u64;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Vec<Vec<i64>> {
        vec![vec![2, -1], vec![-1, 2]]
    }

    fn b2() -> Vec<Vec<i64>> {
        vec![vec![2, -2], vec![-1, 2]]
    }

    fn g2() -> Vec<Vec<i64>> {
        vec![vec![2, -1], vec![-3, 2]]
    }

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(&a2()).len(), 3);
        assert_eq!(positive_roots(&b2()).len(), 4);
        assert_eq!(positive_roots(&g2()).len(), 6);
        let d4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        assert_eq!(positive_roots(&d4).len(), 12);
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dimension(&a2(), &[1, 1]).unwrap(), 8);
        assert_eq!(weyl_dimension(&g2(), &[1, 0]).unwrap() * weyl_dimension(&g2(), &[0, 1]).unwrap(), 7 * 14);
        assert_eq!(weyl_dimension(&b2(), &[0, 0]).unwrap(), 1);
        assert!(weyl_dimension(&b2(), &[-1, 0]).is_err());
    }

    #[test]
    fn freudenthal_adjoint_a2() {
        let ch = freudenthal_character(&a2(), &[1, 1]).unwrap();
        assert_eq!(ch.get(&vec![0, 0]), Some(&2));
        assert_eq!(ch.values().sum::<u64>(), 8);
    }

    #[test]
    fn symmetrizer_g2() {
        let d = symmetrizer(&g2());
        assert_eq!(d[0] * g2()[0][1], d[1] * g2()[1][0]);
    }
}
