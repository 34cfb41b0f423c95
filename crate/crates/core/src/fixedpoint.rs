//! `B̂ = {b ∈ B̃ : ω(b) = b}` with the ω-Kashiwara operators, over the orbit datum.

use std::collections::HashMap;

use crate::cartan::{Lattice, OrbitDatum};
use crate::crystal::{
    is_perfect, is_simple, s_j, tensor2, tensor_index, tensor_parts, verify_crystal_axioms, verify_regularity,
    weyl_action, CrystalGraph, Payload, RegularityMode,
};
use crate::error::{Error, Result};
use crate::intertwiner::{
    build_tilde_crystal, compute_energy, compute_r_matrix, energy_step, verify_intertwiner, IntertwinerMap,
    TildeCrystal,
};
use crate::report::{Report, Stage};

/// Fixed points of an `ω`-action together with their ω-Kashiwara graph.
#[derive(Clone, Debug)]
pub struct FixedPointCrystal {
    pub orbit: OrbitDatum,
    pub parent: CrystalGraph,
    pub parent_omega: Vec<usize>,
    /// Parent id of each hat node, increasing.
    pub nodes: Vec<usize>,
    pub index: HashMap<usize, usize>,
    pub graph: CrystalGraph,
}

/// Applies the operators of `word` left to right on `b`, each `m` times.
fn eval_word(g: &CrystalGraph, word: &[usize], b: usize, up: bool, m: usize) -> Option<usize> {
    let mut x = b;
    for &j in word {
        for _ in 0..m {
            x = if up { g.f(j, x) } else { g.e(j, x) }?;
        }
    }
    Some(x)
}

/// Operator word of `ẽ(m)_p`: `x_j^m x_{ω j}^{2m} x_j^m` if `c_p = 1`,
/// otherwise each orbit factor to the `m`-th power.
pub fn powered_word(orbit: &OrbitDatum, p: usize, m: usize) -> Vec<(usize, usize)> {
    let w = orbit.operator_word(p);
    let mut out: Vec<(usize, usize)> = Vec::new();
    for j in w {
        match out.last_mut() {
            Some((k, c)) if *k == j => *c += m,
            _ => out.push((j, m)),
        }
    }
    out
}

fn eval_powered(g: &CrystalGraph, word: &[(usize, usize)], b: usize, up: bool) -> Option<usize> {
    word.iter().try_fold(b, |x, &(j, m)| if up { g.f_pow(j, x, m) } else { g.e_pow(j, x, m) })
}

impl FixedPointCrystal {
    /// Builds `B̂` from a parent crystal and an `ω`-action on it.
    pub fn build(parent: &CrystalGraph, omega: &[usize], orbit: &OrbitDatum) -> Result<Self> {
        if **parent.datum() != *orbit.datum {
            return Err(Error::DatumMismatch(format!("{} vs {}", parent.datum().name(), orbit.datum.name())));
        }
        let nodes: Vec<usize> = (0..parent.len()).filter(|&b| omega[b] == b).collect();
        let index: HashMap<usize, usize> = nodes.iter().enumerate().map(|(h, &b)| (b, h)).collect();
        let r = orbit.len();
        let mut f = vec![vec![None; nodes.len()]; r];
        let mut e = vec![vec![None; nodes.len()]; r];
        for p in 0..r {
            let word = orbit.operator_word(p);
            for (h, &b) in nodes.iter().enumerate() {
                for (up, table) in [(true, &mut f), (false, &mut e)] {
                    if let Some(y) = eval_word(parent, &word, b, up, 1) {
                        let t = *index.get(&y).ok_or_else(|| {
                            Error::Stability(format!(
                                "{} of label {p} maps fixed node {b} to non-fixed node {y}",
                                if up { "f̃" } else { "ẽ" }
                            ))
                        })?;
                        table[p][h] = Some(t);
                    }
                }
            }
        }
        let wts = nodes.iter().map(|&b| orbit.p_omega_star_inverse(parent.wt(b))).collect::<Result<Vec<_>>>()?;
        let payloads = nodes.iter().map(|&b| Payload::Parent(b as u32)).collect();
        let graph = CrystalGraph::from_tables(orbit.hat.clone(), Lattice::Orbit, wts, payloads, f, e);
        Ok(Self {
            orbit: orbit.clone(),
            parent: parent.clone(),
            parent_omega: omega.to_vec(),
            nodes,
            index,
            graph,
        })
    }

    pub fn from_tilde(t: &TildeCrystal) -> Result<Self> {
        Self::build(&t.graph, &t.omega, &t.orbit)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn hat_epsilon(&self, h: usize, p: usize) -> u32 {
        self.graph.eps(p, h)
    }

    pub fn hat_phi(&self, h: usize, p: usize) -> u32 {
        self.graph.phi(p, h)
    }

    /// `Ŝ_ŵ` applied left to right; `word` lists positions in `Î`.
    pub fn hat_weyl_action(&self, word: &[usize], h: usize) -> Result<usize> {
        weyl_action(&self.graph, word, h)
    }
}

/// `B̂^{i,s}` for an in-scope instance, with its parent.
pub fn build_hat(case: crate::cartan::Case, n: usize, i: usize, s: usize) -> Result<(TildeCrystal, FixedPointCrystal)> {
    let t = build_tilde_crystal(case, n, i, s)?;
    let fp = FixedPointCrystal::from_tilde(&t)?;
    Ok((t, fp))
}

/// Stages: crystal axioms over `Â`, regularity, S1–S3, level, perfectness.
pub fn verify_main_theorem(fp: &FixedPointCrystal, s: i64, mode: RegularityMode) -> Report {
    let g = &fp.graph;
    let mut rep = verify_crystal_axioms(g);
    rep.push(verify_regularity(g, mode));
    rep.extend(is_simple(g));
    rep.extend(is_perfect(g, s));
    rep
}

/// `ε̂_j = ε_{ω^k(j)}` and `φ̂_j = φ_{ω^k(j)}` for every orbit member, and
/// `P_ω*(ε̂(b)) = ε(b)`.
pub fn check_vevp(fp: &FixedPointCrystal) -> Stage {
    for (h, &b) in fp.nodes.iter().enumerate() {
        for p in 0..fp.orbit.len() {
            for k in fp.orbit.orbit_of(p) {
                if fp.graph.eps(p, h) != fp.parent.eps(k, b) || fp.graph.phi(p, h) != fp.parent.phi(k, b) {
                    return Stage::fail("lemma:vevp", format!("node {b}, label {p}, orbit member {k}"));
                }
            }
        }
        if fp.orbit.p_omega_star(&fp.graph.eps_vector(h)) != fp.parent.eps_vector(b) {
            return Stage::fail("lemma:vevp", format!("P_ω*(ε̂) ≠ ε at node {b}"));
        }
    }
    Stage::pass("lemma:vevp")
}

/// `ẽ(m)_j = (ẽ_j)^m` and `f̃(m)_j = (f̃_j)^m` for `m` up to one past the string length.
pub fn check_powers(fp: &FixedPointCrystal) -> Stage {
    for (h, &b) in fp.nodes.iter().enumerate() {
        for p in 0..fp.orbit.len() {
            for up in [false, true] {
                let len = if up { fp.graph.phi(p, h) } else { fp.graph.eps(p, h) } as usize;
                for m in 1..=len + 1 {
                    let direct = eval_powered(&fp.parent, &powered_word(&fp.orbit, p, m), b, up);
                    let iterated = if up { fp.graph.f_pow(p, h, m) } else { fp.graph.e_pow(p, h, m) };
                    if direct != iterated.map(|x| fp.nodes[x]) {
                        return Stage::fail("lemma:powers", format!("node {b}, label {p}, m = {m}"));
                    }
                }
            }
        }
    }
    Stage::pass("lemma:powers")
}

/// `Ŝ_j = S_{w_j}` nodewise, the right side computed on the parent.
pub fn check_hat_weyl(fp: &FixedPointCrystal) -> Stage {
    for (h, &b) in fp.nodes.iter().enumerate() {
        for p in 0..fp.orbit.len() {
            let hat = s_j(&fp.graph, p, h).map(|x| fp.nodes[x]);
            let parent = weyl_action(&fp.parent, &fp.orbit.w_word(p), b);
            if hat != parent {
                return Stage::fail("lemma:weyl", format!("node {b}, label {p}: {hat:?} vs {parent:?}"));
            }
        }
    }
    Stage::pass("lemma:weyl")
}

/// All three lemma checks.
pub fn verify_lemmas(fp: &FixedPointCrystal) -> Report {
    let mut rep = Report::new();
    rep.push(check_vevp(fp));
    rep.push(check_powers(fp));
    rep.push(check_hat_weyl(fp));
    rep
}

/// `Φ: B̂_1 ⊗̂ B̂_2 → (B̃_1 ⊗ B̃_2)^ω`.
#[derive(Clone, Debug)]
pub struct PhiIso {
    pub hat_tensor: CrystalGraph,
    pub fixed: FixedPointCrystal,
    pub map: IntertwinerMap,
}

pub fn phi_tensor_iso(t1: &TildeCrystal, f1: &FixedPointCrystal, t2: &TildeCrystal, f2: &FixedPointCrystal) -> Result<PhiIso> {
    let hat_tensor = tensor2(&f1.graph, &f2.graph)?;
    let parent = tensor2(&t1.graph, &t2.graph)?;
    let dims = [t1.graph.len(), t2.graph.len()];
    let omega: Vec<usize> = (0..parent.len())
        .map(|x| {
            let p = tensor_parts(&dims, x);
            tensor_index(&dims, &[t1.omega[p[0]], t2.omega[p[1]]])
        })
        .collect();
    let fixed = FixedPointCrystal::build(&parent, &omega, &t1.orbit)?;
    if fixed.len() != hat_tensor.len() {
        return Err(Error::Conflict(format!("|B̂1|·|B̂2| = {} but {} fixed points", hat_tensor.len(), fixed.len())));
    }
    let hdims = [f1.len(), f2.len()];
    let table = (0..hat_tensor.len())
        .map(|x| {
            let p = tensor_parts(&hdims, x);
            let b = tensor_index(&dims, &[f1.nodes[p[0]], f2.nodes[p[1]]]);
            fixed.index.get(&b).copied().ok_or_else(|| Error::Conflict(format!("{b} is not fixed")))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = IntertwinerMap { table, relabel: (0..t1.orbit.len()).collect() };
    Ok(PhiIso { hat_tensor, fixed, map })
}

/// Edge-exact check of `Φ` and `ε̂(b1 ⊗̂ b2) = ε̂(Φ(b1 ⊗̂ b2))`.
pub fn verify_phi(phi: &PhiIso) -> Report {
    let mut rep = verify_intertwiner(&phi.hat_tensor, &phi.fixed.graph, &phi.map);
    for s in &mut rep.stages {
        s.name = s.name.replace("intertwiner", "phi");
    }
    let bad = (0..phi.hat_tensor.len()).find(|&x| {
        let y = phi.map.apply(x);
        phi.hat_tensor.eps_vector(x) != phi.fixed.graph.eps_vector(y)
            || phi.hat_tensor.phi_vector(x) != phi.fixed.graph.phi_vector(y)
    });
    rep.push(match bad {
        None => Stage::pass("phi:eps"),
        Some(x) => Stage::fail("phi:eps", format!("node {x}")),
    });
    rep
}

/// `R̂ = Φ_2⁻¹ ∘ R ∘ Φ_1` on `B̂_1 ⊗̂ B̂_2 → B̂_2 ⊗̂ B̂_1`.
pub fn hat_r_matrix(
    t1: &TildeCrystal,
    f1: &FixedPointCrystal,
    t2: &TildeCrystal,
    f2: &FixedPointCrystal,
) -> Result<(PhiIso, PhiIso, IntertwinerMap)> {
    let phi1 = phi_tensor_iso(t1, f1, t2, f2)?;
    let phi2 = phi_tensor_iso(t2, f2, t1, f1)?;
    let r = compute_r_matrix(&t1.graph, &t2.graph)?;
    let inv2 = phi2.map.inverse();
    let table = phi1
        .map
        .table
        .iter()
        .map(|&y| {
            let b = phi1.fixed.nodes[y];
            let rb = r.map.apply(b);
            let k = phi2.fixed.index.get(&rb).copied().ok_or_else(|| Error::Stability(format!("R moves {b} off the fixed set")))?;
            Ok(inv2.apply(k))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = IntertwinerMap { table, relabel: (0..t1.orbit.len()).collect() };
    Ok((phi1, phi2, map))
}

/// `Ĥ = H ∘ Φ` on `B̂ ⊗̂ B̂`.
#[derive(Clone, Debug)]
pub struct HatEnergy {
    pub phi: PhiIso,
    pub values: Vec<i64>,
}

pub fn hat_energy(t: &TildeCrystal, fp: &FixedPointCrystal) -> Result<HatEnergy> {
    let phi = phi_tensor_iso(t, fp, t, fp)?;
    let h = compute_energy(&t.graph)?;
    let values = phi.map.table.iter().map(|&y| h.values[phi.fixed.nodes[y]]).collect();
    Ok(HatEnergy { phi, values })
}

/// The `ê`-relations of `Ĥ` with `0` replaced by the orbit node `0̂`.
pub fn check_hat_energy(fp: &FixedPointCrystal, he: &HatEnergy) -> Stage {
    let g = &he.phi.hat_tensor;
    let dims = [fp.len(), fp.len()];
    for x in 0..g.len() {
        let p = tensor_parts(&dims, x);
        for j in 0..g.labels() {
            if let Some(y) = g.e(j, x) {
                if he.values[y] != he.values[x] + energy_step(&fp.graph, j, p[0], p[1]) {
                    return Stage::fail("hat-energy", format!("ê_{j} at {x}"));
                }
            }
        }
    }
    Stage::pass("hat-energy")
}
