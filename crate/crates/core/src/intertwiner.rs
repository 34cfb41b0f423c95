//! `τ_ω`, combinatorial R-matrices, energy functions and the `ω`-action on
//! `B̃^{i,s}`.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use crate::cartan::{build_affine_datum, Case, OrbitDatum};
use crate::crystal::{dominant_extremal, tensor, tensor2, tensor_index, tensor_parts, CrystalGraph};
use crate::error::{Error, Result};
use crate::kr::build_kr;
use crate::report::{Report, Stage};
use crate::scope::check_scope;

/// Traversal order used when propagating an intertwiner from its anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Bfs,
    Dfs,
}

/// A bijection `src → dst` with `map(x_j b) = x_{relabel(j)} map(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntertwinerMap {
    pub table: Vec<usize>,
    pub relabel: Vec<usize>,
}

impl IntertwinerMap {
    pub fn apply(&self, b: usize) -> usize {
        self.table[b]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.table.len()];
        for (b, &t) in self.table.iter().enumerate() {
            inv[t] = b;
        }
        let mut rel = vec![0; self.relabel.len()];
        for (j, &k) in self.relabel.iter().enumerate() {
            rel[k] = j;
        }
        Self { table: inv, relabel: rel }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<[usize; 2]> = self.table.iter().enumerate().map(|(a, &b)| [a, b]).collect();
        serde_json::json!({ "relabel": self.relabel, "pairs": pairs })
    }
}

/// Extends `anchor.0 ↦ anchor.1` along every edge of the connected crystal `src`.
pub fn propagate(
    src: &CrystalGraph,
    dst: &CrystalGraph,
    anchor: (usize, usize),
    relabel: &[usize],
    order: Order,
) -> Result<IntertwinerMap> {
    let n = src.len();
    if n != dst.len() {
        return Err(Error::Conflict(format!("sizes differ: {} vs {}", n, dst.len())));
    }
    let mut table = vec![usize::MAX; n];
    table[anchor.0] = anchor.1;
    let mut work = VecDeque::from([anchor.0]);
    while let Some(x) = match order {
        Order::Bfs => work.pop_front(),
        Order::Dfs => work.pop_back(),
    } {
        let tx = table[x];
        for j in 0..src.labels() {
            let k = relabel[j];
            for (y, ty) in [(src.f(j, x), dst.f(k, tx)), (src.e(j, x), dst.e(k, tx))] {
                match (y, ty) {
                    (None, None) => {}
                    (Some(y), Some(ty)) => {
                        if table[y] == usize::MAX {
                            table[y] = ty;
                            work.push_back(y);
                        } else if table[y] != ty {
                            return Err(Error::Conflict(format!("node {y} forced to {} and {ty}", table[y])));
                        }
                    }
                    _ => return Err(Error::Conflict(format!("edge of label {j} at node {x} has no image"))),
                }
            }
        }
    }
    if let Some(b) = table.iter().position(|&t| t == usize::MAX) {
        return Err(Error::Conflict(format!("node {b} unreachable from the anchor")));
    }
    Ok(IntertwinerMap { table, relabel: relabel.to_vec() })
}

/// Bijectivity, weight law and commutation on every node and label.
pub fn verify_intertwiner(src: &CrystalGraph, dst: &CrystalGraph, map: &IntertwinerMap) -> Report {
    let mut rep = Report::new();
    let mut hit = vec![false; dst.len()];
    let bij = src.len() == dst.len() && map.table.iter().all(|&t| t < dst.len() && !std::mem::replace(&mut hit[t], true));
    rep.push(if bij { Stage::pass("intertwiner:bijective") } else { Stage::fail("intertwiner:bijective", "table") });
    let wt_bad = (0..src.len()).find(|&b| {
        let w = src.wt(b);
        let t = dst.wt(map.table[b]);
        (0..src.labels()).any(|j| t[map.relabel[j]] != w[j])
    });
    rep.push(match wt_bad {
        None => Stage::pass("intertwiner:weight"),
        Some(b) => Stage::fail("intertwiner:weight", format!("node {b}")),
    });
    let mut comm = Ok(());
    'outer: for b in 0..src.len() {
        for j in 0..src.labels() {
            let k = map.relabel[j];
            let t = map.table[b];
            if src.f(j, b).map(|y| map.table[y]) != dst.f(k, t) || src.e(j, b).map(|y| map.table[y]) != dst.e(k, t) {
                comm = Err(format!("label {j} at node {b}"));
                break 'outer;
            }
        }
    }
    rep.push(Stage::from_result("intertwiner:commute", comm));
    rep
}

/// `τ_ω: B_src → B_dst` with `τ_ω ∘ e_j = e_{ω(j)} ∘ τ_ω`.
pub fn compute_tau_omega(src: &CrystalGraph, dst: &CrystalGraph, omega: &[usize]) -> Result<IntertwinerMap> {
    let u = dominant_extremal(src)?;
    let v = dominant_extremal(dst)?;
    let mut image = vec![0; omega.len()];
    for (j, &c) in src.wt(u).iter().enumerate() {
        image[omega[j]] = c;
    }
    if image != dst.wt(v) {
        return Err(Error::AnchorMismatch(format!("ω*({:?}) = {image:?} ≠ {:?}", src.wt(u), dst.wt(v))));
    }
    propagate(src, dst, (u, v), omega, Order::Bfs)
}

/// R-matrix `B_1 ⊗ B_2 → B_2 ⊗ B_1` together with both tensor products.
#[derive(Clone, Debug)]
pub struct RMatrix {
    pub map: IntertwinerMap,
    pub b12: CrystalGraph,
    pub b21: CrystalGraph,
    pub dims: (usize, usize),
}

impl RMatrix {
    /// `R(b1 ⊗ b2) = (b2', b1')`.
    pub fn apply_pair(&self, b1: usize, b2: usize) -> (usize, usize) {
        let t = self.map.table[tensor_index(&[self.dims.0, self.dims.1], &[b1, b2])];
        let p = tensor_parts(&[self.dims.1, self.dims.0], t);
        (p[0], p[1])
    }
}

fn identity(r: usize) -> Vec<usize> {
    (0..r).collect()
}

/// Combinatorial R-matrix anchored at `ũ_1 ⊗ ũ_2 ↦ ũ_2 ⊗ ũ_1`.
pub fn compute_r_matrix(b1: &CrystalGraph, b2: &CrystalGraph) -> Result<RMatrix> {
    compute_r_matrix_with(b1, b2, Order::Bfs)
}

pub fn compute_r_matrix_with(b1: &CrystalGraph, b2: &CrystalGraph, order: Order) -> Result<RMatrix> {
    let u1 = dominant_extremal(b1)?;
    let u2 = dominant_extremal(b2)?;
    let b12 = tensor2(b1, b2)?;
    let b21 = tensor2(b2, b1)?;
    let dims = (b1.len(), b2.len());
    let src = tensor_index(&[dims.0, dims.1], &[u1, u2]);
    let dst = tensor_index(&[dims.1, dims.0], &[u2, u1]);
    let map = propagate(&b12, &b21, (src, dst), &identity(b1.labels()), order)?;
    Ok(RMatrix { map, b12, b21, dims })
}

/// Energy function on `B ⊗ B`, normalised by `H(ũ ⊗ ũ) = 0`.
#[derive(Clone, Debug)]
pub struct EnergyTable {
    pub bb: CrystalGraph,
    pub values: Vec<i64>,
    pub base: usize,
    pub dim: usize,
}

impl EnergyTable {
    pub fn h(&self, b1: usize, b2: usize) -> i64 {
        self.values[tensor_index(&[self.dim, self.dim], &[b1, b2])]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<(usize, i64)> = self.values.iter().copied().enumerate().collect();
        serde_json::json!(rows)
    }
}

/// Change of `H` along `e_j` at `b1 ⊗ b2`.
pub fn energy_step(b: &CrystalGraph, j: usize, b1: usize, b2: usize) -> i64 {
    if j != 0 {
        0
    } else if b.phi(0, b1) >= b.eps(0, b2) {
        1
    } else {
        -1
    }
}

pub fn compute_energy(b: &CrystalGraph) -> Result<EnergyTable> {
    let u = dominant_extremal(b)?;
    let bb = tensor2(b, b)?;
    let dim = b.len();
    let dims = [dim, dim];
    let base = tensor_index(&dims, &[u, u]);
    let mut values = vec![i64::MIN; bb.len()];
    values[base] = 0;
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        let p = tensor_parts(&dims, x);
        for j in 0..bb.labels() {
            if let Some(y) = bb.e(j, x) {
                if values[y] == i64::MIN {
                    values[y] = values[x] + energy_step(b, j, p[0], p[1]);
                    queue.push_back(y);
                }
            }
            if let Some(y) = bb.f(j, x) {
                if values[y] == i64::MIN {
                    let q = tensor_parts(&dims, y);
                    values[y] = values[x] - energy_step(b, j, q[0], q[1]);
                    queue.push_back(y);
                }
            }
        }
    }
    if let Some(x) = values.iter().position(|&v| v == i64::MIN) {
        return Err(Error::Energy(x));
    }
    let table = EnergyTable { bb, values, base, dim };
    if let Err(x) = check_energy(b, &table) {
        return Err(Error::Energy(x));
    }
    Ok(table)
}

/// Re-checks the `e`-relations on every edge; returns a violating node.
pub fn check_energy(b: &CrystalGraph, t: &EnergyTable) -> std::result::Result<(), usize> {
    let dims = [t.dim, t.dim];
    for x in 0..t.bb.len() {
        let p = tensor_parts(&dims, x);
        for j in 0..t.bb.labels() {
            if let Some(y) = t.bb.e(j, x) {
                if t.values[y] != t.values[x] + energy_step(b, j, p[0], p[1]) {
                    return Err(x);
                }
            }
        }
    }
    Ok(())
}

/// `B̃^{i,s} = B^{i,s} ⊗ B^{ω(i),s} ⊗ ⋯` with its `ω`-action.
#[derive(Clone, Debug)]
pub struct TildeCrystal {
    pub case: Case,
    pub n: usize,
    pub i: usize,
    pub s: usize,
    pub orbit: OrbitDatum,
    pub factors: Vec<CrystalGraph>,
    pub graph: CrystalGraph,
    pub omega: Vec<usize>,
    pub taus: Vec<IntertwinerMap>,
    pub r_matrices: Vec<RMatrix>,
}

impl TildeCrystal {
    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|g| g.len()).collect()
    }

    pub fn omega_pow(&self, b: usize, k: usize) -> usize {
        (0..k).fold(b, |x, _| self.omega[x])
    }
}

/// Builds `B̃^{i,s}` and its `ω`-action for an in-scope `(case, n, i, s)`.
pub fn build_tilde_crystal(case: Case, n: usize, i: usize, s: usize) -> Result<TildeCrystal> {
    let n = case.normalize_rank(n);
    check_scope(case, n, i, s)?;
    let datum = Arc::new(build_affine_datum(case, n)?);
    let orbit = OrbitDatum::for_case(case, n)?;
    let nodes = orbit.orbit_of(i);
    let factors: Vec<CrystalGraph> =
        nodes.iter().map(|&k| build_kr(case, n, k, s)).collect::<Result<_>>()?;
    if factors.iter().any(|g| **g.datum() != *datum) {
        return Err(Error::DatumMismatch("factor datum".into()));
    }
    let omega_perm = orbit.omega.perm.clone();
    let m = factors.len();
    let taus: Vec<IntertwinerMap> = (0..m)
        .map(|k| compute_tau_omega(&factors[k], &factors[(k + 1) % m], &omega_perm))
        .collect::<Result<_>>()?;
    let refs: Vec<&CrystalGraph> = factors.iter().collect();
    let graph = tensor(&refs)?;
    let dims: Vec<usize> = factors.iter().map(|g| g.len()).collect();
    let mut r_matrices = Vec::new();
    let omega: Vec<usize> = match m {
        1 => taus[0].table.clone(),
        2 => {
            // (τ ⊗ τ) lands in B^{ω i} ⊗ B^{i}; R brings it back.
            let r = compute_r_matrix(&factors[1], &factors[0])?;
            let table = (0..graph.len())
                .map(|x| {
                    let p = tensor_parts(&dims, x);
                    let (a, b) = r.apply_pair(taus[0].apply(p[0]), taus[1].apply(p[1]));
                    tensor_index(&dims, &[a, b])
                })
                .collect();
            r_matrices.push(r);
            table
        }
        3 => {
            // (τ ⊗ τ ⊗ τ) lands in F1 ⊗ F2 ⊗ F0; then 1 ⊗ R, then R ⊗ 1.
            let r20 = compute_r_matrix(&factors[2], &factors[0])?;
            let r10 = compute_r_matrix(&factors[1], &factors[0])?;
            let table = (0..graph.len())
                .map(|x| {
                    let p = tensor_parts(&dims, x);
                    let (y1, y2, y0) = (taus[0].apply(p[0]), taus[1].apply(p[1]), taus[2].apply(p[2]));
                    let (z0, z2) = r20.apply_pair(y2, y0);
                    let (w0, w1) = r10.apply_pair(y1, z0);
                    tensor_index(&dims, &[w0, w1, z2])
                })
                .collect();
            r_matrices.push(r20);
            r_matrices.push(r10);
            table
        }
        _ => return Err(Error::OutOfScope(format!("orbit of size {m}"))),
    };
    Ok(TildeCrystal { case, n, i, s, orbit, factors, graph, omega, taus, r_matrices })
}

/// Checks `ω ∘ e_j = e_{ω(j)} ∘ ω`, bijectivity and `ω^{ord ω} = id`.
pub fn verify_omega_action(t: &TildeCrystal) -> Report {
    let map = IntertwinerMap { table: t.omega.clone(), relabel: t.orbit.omega.perm.clone() };
    let mut rep = verify_intertwiner(&t.graph, &t.graph, &map);
    for s in &mut rep.stages {
        s.name = s.name.replace("intertwiner", "omega");
    }
    let ord = t.orbit.omega.order;
    let bad = (0..t.graph.len()).find(|&b| t.omega_pow(b, ord) != b);
    rep.push(match bad {
        None => Stage::pass("omega:order"),
        Some(b) => Stage::fail("omega:order", format!("ω^{ord} moves {b}")),
    });
    rep
}

/// Re-verifies every `τ_ω` and R-matrix table used in the `ω`-action.
pub fn verify_tilde_intertwiners(t: &TildeCrystal) -> Report {
    let mut rep = Report::new();
    let m = t.factors.len();
    for (k, tau) in t.taus.iter().enumerate() {
        let r = verify_intertwiner(&t.factors[k], &t.factors[(k + 1) % m], tau);
        rep.push(Stage {
            name: format!("tau[{k}]"),
            pass: r.passed(),
            witness: r.first_failure().and_then(|s| s.witness.clone()),
        });
    }
    for (k, r) in t.r_matrices.iter().enumerate() {
        let v = verify_intertwiner(&r.b12, &r.b21, &r.map);
        rep.push(Stage { name: format!("R[{k}]"), pass: v.passed(), witness: v.first_failure().and_then(|s| s.witness.clone()) });
    }
    rep
}

/// Applies an R-matrix to adjacent factors `pos, pos+1` of a triple.
fn apply_at(r: &RMatrix, triple: [usize; 3], pos: usize) -> [usize; 3] {
    let mut out = triple;
    let (a, b) = r.apply_pair(triple[pos], triple[pos + 1]);
    out[pos] = a;
    out[pos + 1] = b;
    out
}

/// Both sides of the Yang–Baxter relation on `B_1 ⊗ B_2 ⊗ B_3`, as maps
/// into `B_3 ⊗ B_2 ⊗ B_1`.
pub fn yang_baxter_sides(b: [&CrystalGraph; 3]) -> Result<(Vec<usize>, Vec<usize>)> {
    let r12 = compute_r_matrix(b[0], b[1])?;
    let r13 = compute_r_matrix(b[0], b[2])?;
    let r23 = compute_r_matrix(b[1], b[2])?;
    let dims = [b[0].len(), b[1].len(), b[2].len()];
    let out_dims = [dims[2], dims[1], dims[0]];
    let total: usize = dims.iter().product();
    let mut left = Vec::with_capacity(total);
    let mut right = Vec::with_capacity(total);
    for x in 0..total {
        let p = tensor_parts(&dims, x);
        let t = [p[0], p[1], p[2]];
        // (R⊗1)(1⊗R)(R⊗1): B1B2B3 → B2B1B3 → B2B3B1 → B3B2B1
        let l = apply_at(&r23, apply_at(&r13, apply_at(&r12, t, 0), 1), 0);
        // (1⊗R)(R⊗1)(1⊗R): B1B2B3 → B1B3B2 → B3B1B2 → B3B2B1
        let r = apply_at(&r12, apply_at(&r13, apply_at(&r23, t, 1), 0), 1);
        left.push(tensor_index(&out_dims, &l));
        right.push(tensor_index(&out_dims, &r));
    }
    Ok((left, right))
}
