use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cartan::{AffineCartanDatum, ClassicalWeight, Lattice};
use crate::error::{Error, Result};

pub(crate) const NONE: u32 = u32::MAX;

/// Model-specific data carried by a node. Ordering of payloads fixes node ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Payload {
    /// Rectangular tableau, row by row.
    Tableau(Vec<Vec<u8>>),
    /// Coordinate tuple `(x_1, …, x_N, x̄_N, …, x̄_1)`.
    Coords(Vec<u32>),
    /// Word in type D letters, a barred letter `k̄` stored as `-k`.
    Word(Vec<i8>),
    /// Sign string such as `+-+-`.
    Signs(String),
    /// Factor ids of a tensor product node.
    Tensor(Vec<u32>),
    /// Id of a node in a parent crystal.
    Parent(u32),
    Empty,
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>, sep: &str| v.join(sep);
        match self {
            Payload::Tableau(rows) => {
                let r: Vec<String> =
                    rows.iter().map(|row| join(row.iter().map(u8::to_string).collect(), " ")).collect();
                write!(f, "{}", r.join(" / "))
            }
            Payload::Coords(c) => write!(f, "({})", join(c.iter().map(u32::to_string).collect(), ",")),
            Payload::Word(w) if w.is_empty() => write!(f, "∅"),
            Payload::Word(w) => write!(
                f,
                "{}",
                join(w.iter().map(|&x| if x < 0 { format!("{}\u{305}", -x) } else { x.to_string() }).collect(), " ")
            ),
            Payload::Signs(s) => write!(f, "{s}"),
            Payload::Tensor(t) => write!(f, "{}", join(t.iter().map(u32::to_string).collect(), "⊗")),
            Payload::Parent(p) => write!(f, "#{p}"),
            Payload::Empty => write!(f, "·"),
        }
    }
}

/// A finite crystal stored as an explicit graph with `j`-labelled edges.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    datum: Arc<AffineCartanDatum>,
    lattice: Lattice,
    wts: Vec<Vec<i64>>,
    payloads: Vec<Payload>,
    f: Vec<Vec<u32>>,
    e: Vec<Vec<u32>>,
    eps: Vec<Vec<u32>>,
    phi: Vec<Vec<u32>>,
}

fn opt(x: u32) -> Option<usize> {
    (x != NONE).then_some(x as usize)
}

impl CrystalGraph {
    /// Builds a graph from lowering edges `f[j][b]`; raising edges are their inverses.
    pub fn from_f(
        datum: Arc<AffineCartanDatum>,
        lattice: Lattice,
        wts: Vec<Vec<i64>>,
        payloads: Vec<Payload>,
        f: Vec<Vec<Option<usize>>>,
    ) -> Self {
        let n = wts.len();
        let r = datum.rank();
        let mut fe = vec![vec![NONE; n]; r];
        let mut ee = vec![vec![NONE; n]; r];
        for j in 0..r {
            for b in 0..n {
                if let Some(t) = f[j][b] {
                    fe[j][b] = t as u32;
                    if ee[j][t] == NONE {
                        ee[j][t] = b as u32;
                    }
                }
            }
        }
        Self::from_raw(datum, lattice, wts, payloads, fe, ee)
    }

    /// Builds a graph from independent `f` and `e` tables. Used by tests that
    /// need a graph violating the pairing axiom.
    pub fn from_tables(
        datum: Arc<AffineCartanDatum>,
        lattice: Lattice,
        wts: Vec<Vec<i64>>,
        payloads: Vec<Payload>,
        f: Vec<Vec<Option<usize>>>,
        e: Vec<Vec<Option<usize>>>,
    ) -> Self {
        let conv = |t: Vec<Vec<Option<usize>>>| -> Vec<Vec<u32>> {
            t.into_iter().map(|row| row.into_iter().map(|x| x.map_or(NONE, |v| v as u32)).collect()).collect()
        };
        Self::from_raw(datum, lattice, wts, payloads, conv(f), conv(e))
    }

    pub(crate) fn from_raw(
        datum: Arc<AffineCartanDatum>,
        lattice: Lattice,
        wts: Vec<Vec<i64>>,
        payloads: Vec<Payload>,
        f: Vec<Vec<u32>>,
        e: Vec<Vec<u32>>,
    ) -> Self {
        let eps = string_lengths(&e);
        let phi = string_lengths(&f);
        Self { datum, lattice, wts, payloads, f, e, eps, phi }
    }

    pub fn datum(&self) -> &Arc<AffineCartanDatum> {
        &self.datum
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.wts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wts.is_empty()
    }

    pub fn labels(&self) -> usize {
        self.datum.rank()
    }

    pub fn f(&self, j: usize, b: usize) -> Option<usize> {
        opt(self.f[j][b])
    }

    pub fn e(&self, j: usize, b: usize) -> Option<usize> {
        opt(self.e[j][b])
    }

    pub fn eps(&self, j: usize, b: usize) -> u32 {
        self.eps[j][b]
    }

    pub fn phi(&self, j: usize, b: usize) -> u32 {
        self.phi[j][b]
    }

    pub fn wt(&self, b: usize) -> &[i64] {
        &self.wts[b]
    }

    pub fn weight(&self, b: usize) -> ClassicalWeight {
        ClassicalWeight::new(self.wts[b].clone(), self.lattice)
    }

    pub fn payload(&self, b: usize) -> &Payload {
        &self.payloads[b]
    }

    pub fn payloads(&self) -> &[Payload] {
        &self.payloads
    }

    /// `ε(b) = Σ_j ε_j(b) Λ_j`.
    pub fn eps_vector(&self, b: usize) -> Vec<i64> {
        (0..self.labels()).map(|j| self.eps[j][b] as i64).collect()
    }

    pub fn phi_vector(&self, b: usize) -> Vec<i64> {
        (0..self.labels()).map(|j| self.phi[j][b] as i64).collect()
    }

    /// All lowering edges `(src, dst, j)`, sorted by source then label.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            for j in 0..self.labels() {
                if let Some(t) = self.f(j, b) {
                    out.push((b, t, j));
                }
            }
        }
        out
    }

    pub fn f_pow(&self, j: usize, b: usize, m: usize) -> Option<usize> {
        (0..m).try_fold(b, |x, _| self.f(j, x))
    }

    pub fn e_pow(&self, j: usize, b: usize, m: usize) -> Option<usize> {
        (0..m).try_fold(b, |x, _| self.e(j, x))
    }

    /// Nodes killed by every `e_j`, `j ∈ J`.
    pub fn highest_nodes(&self, j: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&b| j.iter().all(|&k| self.e(k, b).is_none())).collect()
    }

    /// Node with the given payload.
    pub fn find(&self, p: &Payload) -> Option<usize> {
        self.payloads.iter().position(|q| q == p)
    }

    /// Renames labels: old label `j` becomes `perm[j]` in `datum`.
    pub fn relabel(&self, perm: &[usize], datum: Arc<AffineCartanDatum>) -> Result<Self> {
        if datum.rank() != self.labels() || perm.len() != self.labels() {
            return Err(Error::DatumMismatch("relabelling rank".into()));
        }
        let r = self.labels();
        let mut f = vec![Vec::new(); r];
        let mut e = vec![Vec::new(); r];
        for j in 0..r {
            f[perm[j]] = self.f[j].clone();
            e[perm[j]] = self.e[j].clone();
        }
        let wts = self
            .wts
            .iter()
            .map(|w| {
                let mut out = vec![0; r];
                for j in 0..r {
                    out[perm[j]] = w[j];
                }
                out
            })
            .collect();
        Ok(Self::from_raw(datum, self.lattice, wts, self.payloads.clone(), f, e))
    }

    /// Copy with the raising edge paired to the first lowering edge removed.
    /// Test hook for negative fixtures.
    pub fn with_corrupted_edge(&self) -> Self {
        let mut g = self.clone();
        'outer: for j in 0..g.labels() {
            for b in 0..g.len() {
                let t = g.f[j][b];
                if t != NONE {
                    g.e[j][t as usize] = NONE;
                    break 'outer;
                }
            }
        }
        g.eps = string_lengths(&g.e);
        g
    }

    /// Copy with node `b`'s lowering edge of label `j` removed (both directions).
    pub fn without_edge(&self, j: usize, b: usize) -> Self {
        let mut g = self.clone();
        let t = g.f[j][b];
        if t != NONE {
            g.f[j][b] = NONE;
            g.e[j][t as usize] = NONE;
        }
        g.eps = string_lengths(&g.e);
        g.phi = string_lengths(&g.f);
        g
    }

    /// Disjoint union of two graphs over the same datum.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if *self.datum != *other.datum {
            return Err(Error::DatumMismatch(format!("{} vs {}", self.datum.name(), other.datum.name())));
        }
        let shift = self.len() as u32;
        let mut wts = self.wts.clone();
        wts.extend(other.wts.iter().cloned());
        let mut payloads = Vec::with_capacity(wts.len());
        for b in 0..self.len() {
            payloads.push(Payload::Tensor(vec![0, b as u32]));
        }
        for b in 0..other.len() {
            payloads.push(Payload::Tensor(vec![1, b as u32]));
        }
        let join = |a: &Vec<Vec<u32>>, b: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
            a.iter()
                .zip(b)
                .map(|(x, y)| {
                    let mut row = x.clone();
                    row.extend(y.iter().map(|&t| if t == NONE { NONE } else { t + shift }));
                    row
                })
                .collect()
        };
        let f = join(&self.f, &other.f);
        let e = join(&self.e, &other.e);
        Ok(Self::from_raw(self.datum.clone(), self.lattice, wts, payloads, f, e))
    }
}

/// Length of the chain starting at each node, capped at the node count.
fn string_lengths(next: &[Vec<u32>]) -> Vec<Vec<u32>> {
    next.iter()
        .map(|row| {
            let n = row.len();
            let mut out = vec![u32::MAX; n];
            for b in 0..n {
                if out[b] != u32::MAX {
                    continue;
                }
                let mut path = vec![b];
                let mut x = row[b];
                let mut base = 0;
                while x != NONE {
                    if out[x as usize] != u32::MAX {
                        base = out[x as usize] + 1;
                        break;
                    }
                    if path.len() > n {
                        base = n as u32;
                        break;
                    }
                    path.push(x as usize);
                    x = row[x as usize];
                }
                for (k, &p) in path.iter().rev().enumerate() {
                    if out[p] == u32::MAX {
                        out[p] = base + k as u32;
                    }
                }
            }
            out
        })
        .collect()
}
