use crate::crystal::graph::{CrystalGraph, Payload, NONE};
use crate::error::{Error, Result};

/// Outcome of the signature rule on a sequence of `(ε, φ)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    /// Factor acted on by `f`.
    pub f_at: Option<usize>,
    /// Factor acted on by `e`.
    pub e_at: Option<usize>,
    pub eps: u32,
    pub phi: u32,
}

/// Each factor contributes `−^ε +^φ`; adjacent `+ −` pairs cancel. `f` acts on
/// the leftmost surviving `+`, `e` on the rightmost surviving `−`.
pub fn signature_rule(pairs: impl IntoIterator<Item = (u32, u32)>) -> Signature {
    let mut plus: Vec<(usize, u32)> = Vec::new();
    let mut e_at = None;
    let mut eps = 0;
    for (k, (m, p)) in pairs.into_iter().enumerate() {
        let mut m = m;
        while m > 0 {
            match plus.last_mut() {
                Some(top) => {
                    let c = top.1.min(m);
                    top.1 -= c;
                    m -= c;
                    if top.1 == 0 {
                        plus.pop();
                    }
                }
                None => {
                    eps += m;
                    e_at = Some(k);
                    m = 0;
                }
            }
        }
        if p > 0 {
            plus.push((k, p));
        }
    }
    Signature {
        f_at: plus.first().map(|x| x.0),
        e_at,
        eps,
        phi: plus.iter().map(|x| x.1).sum(),
    }
}

/// Mixed-radix index of a tensor node; the first factor is most significant.
pub fn tensor_index(dims: &[usize], parts: &[usize]) -> usize {
    dims.iter().zip(parts).fold(0, |acc, (d, p)| acc * d + p)
}

pub fn tensor_parts(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

/// Tensor product `B_1 ⊗ ⋯ ⊗ B_m`. Node ids are lexicographic in factor ids.
pub fn tensor(factors: &[&CrystalGraph]) -> Result<CrystalGraph> {
    let first = factors.first().ok_or_else(|| Error::DatumMismatch("empty tensor".into()))?;
    let datum = first.datum().clone();
    for g in factors {
        if **g.datum() != *datum || g.lattice() != first.lattice() {
            return Err(Error::DatumMismatch(format!("{} vs {}", datum.name(), g.datum().name())));
        }
    }
    let dims: Vec<usize> = factors.iter().map(|g| g.len()).collect();
    let total: usize = dims.iter().product();
    let r = datum.rank();
    let mut wts = Vec::with_capacity(total);
    let mut payloads = Vec::with_capacity(total);
    let mut f = vec![vec![NONE; total]; r];
    let mut e = vec![vec![NONE; total]; r];
    for idx in 0..total {
        let parts = tensor_parts(&dims, idx);
        let mut w = vec![0i64; r];
        for (g, &p) in factors.iter().zip(&parts) {
            for (a, b) in w.iter_mut().zip(g.wt(p)) {
                *a += b;
            }
        }
        wts.push(w);
        payloads.push(Payload::Tensor(parts.iter().map(|&p| p as u32).collect()));
        for j in 0..r {
            let sig = signature_rule(factors.iter().zip(&parts).map(|(g, &p)| (g.eps(j, p), g.phi(j, p))));
            if let Some(k) = sig.f_at {
                let mut q = parts.clone();
                q[k] = factors[k].f(j, parts[k]).expect("φ > 0 implies f defined");
                f[j][idx] = tensor_index(&dims, &q) as u32;
            }
            if let Some(k) = sig.e_at {
                let mut q = parts.clone();
                q[k] = factors[k].e(j, parts[k]).expect("ε > 0 implies e defined");
                e[j][idx] = tensor_index(&dims, &q) as u32;
            }
        }
    }
    Ok(CrystalGraph::from_raw(datum, first.lattice(), wts, payloads, f, e))
}

/// Binary tensor product.
pub fn tensor2(b1: &CrystalGraph, b2: &CrystalGraph) -> Result<CrystalGraph> {
    tensor(&[b1, b2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_cancels_plus_minus() {
        // + then − cancel.
        let s = signature_rule([(0, 1), (1, 0)]);
        assert_eq!((s.f_at, s.e_at), (None, None));
        // − then + survive.
        let s = signature_rule([(1, 0), (0, 1)]);
        assert_eq!((s.f_at, s.e_at, s.eps, s.phi), (Some(1), Some(0), 1, 1));
        let s = signature_rule([(0, 2), (1, 0), (0, 1)]);
        assert_eq!((s.f_at, s.e_at, s.eps, s.phi), (Some(0), None, 0, 2));
    }

    #[test]
    fn index_roundtrip() {
        let dims = [3, 4, 5];
        for i in 0..60 {
            assert_eq!(tensor_index(&dims, &tensor_parts(&dims, i)), i);
        }
    }
}
