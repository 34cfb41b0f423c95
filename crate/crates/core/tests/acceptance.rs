//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use orbitcrystal::branching::{branch_hat, expected_branching};
use orbitcrystal::cartan::{twisted_reference, twisted_reference_marks, Case};
use orbitcrystal::crystal::{is_perfect, is_simple, verify_crystal_axioms, CrystalGraph, RegularityMode};
use orbitcrystal::fixedpoint::{
    build_hat, check_hat_energy, check_hat_weyl, check_powers, check_vevp, hat_energy, phi_tensor_iso, verify_main_theorem,
    verify_phi,
};
use orbitcrystal::intertwiner::{
    build_tilde_crystal, compute_energy, compute_r_matrix_with, verify_intertwiner, verify_omega_action,
    verify_tilde_intertwiners, yang_baxter_sides, Order,
};
use orbitcrystal::kr::{build_kr, build_kr_type_a, build_kr_type_d_spin, build_kr_type_d_vector};
use orbitcrystal::scope::verification_instances;
use orbitcrystal::{Error, OrbitDatum};

const MODEL_BUDGET: Duration = Duration::from_secs(10);
const THEOREM_BUDGET: Duration = Duration::from_secs(300);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn model_ok(b: &CrystalGraph, s: usize, what: &str) -> Result<(), String> {
    for rep in [verify_crystal_axioms(b), is_simple(b), is_perfect(b, s as i64)] {
        if let Some(f) = rep.first_failure() {
            return Err(format!("{what}: {} [{}]", f.name, f.witness.clone().unwrap_or_default()));
        }
    }
    Ok(())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut count = 0;
    let e = |e: Error| e.to_string();
    for rank in 3..=5 {
        for i in 1..=rank {
            for s in 1..=2 {
                model_ok(&build_kr_type_a(rank, i, s).map_err(e)?, s, &format!("A_{rank}^(1) B^{{{i},{s}}}"))?;
                count += 1;
            }
        }
    }
    for s in 1..=2 {
        model_ok(&build_kr_type_d_vector(4, s).map_err(e)?, s, &format!("D_4^(1) B^{{1,{s}}}"))?;
        count += 1;
    }
    for node in [3, 4] {
        model_ok(&build_kr_type_d_spin(4, node).map_err(e)?, 1, &format!("D_4^(1) B^{{{node},1}}"))?;
        count += 1;
    }
    for i in [2, 3, 4] {
        model_ok(&build_kr(Case::D, 3, i, 1).map_err(e)?, 1, &format!("case (d) B^{{{i},1}}"))?;
        count += 1;
    }
    let t = start.elapsed();
    if t > MODEL_BUDGET {
        return Err(format!("{count} models took {t:.2?} > {MODEL_BUDGET:?}"));
    }
    Ok(format!("{count} models in {t:.2?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let list = verification_instances();
    for x in &list {
        let (_, fp) = build_hat(x.case, x.n, x.i, x.s).map_err(|e| format!("{x}: {e}"))?;
        let rep = verify_main_theorem(&fp, x.s as i64, RegularityMode::RankTwo);
        if let Some(f) = rep.first_failure() {
            return Err(format!("{x}: {} [{}]", f.name, f.witness.clone().unwrap_or_default()));
        }
    }
    let t = start.elapsed();
    if t > THEOREM_BUDGET {
        return Err(format!("{} instances took {t:.2?} > {THEOREM_BUDGET:?}", list.len()));
    }
    Ok(format!("{} instances in {t:.2?}", list.len()))
}

fn criterion_3() -> Check {
    let mut with_formula = 0;
    let mut identity_only = 0;
    for x in verification_instances() {
        let (_, fp) = build_hat(x.case, x.n, x.i, x.s).map_err(|e| format!("{x}: {e}"))?;
        let got = branch_hat(&fp).map_err(|e| format!("{x}: {e}"))?;
        if got.weighted_dim() != fp.len() as u128 {
            return Err(format!("{x}: Σ mult·dim = {} ≠ {}", got.weighted_dim(), fp.len()));
        }
        match expected_branching(x.case, x.n, x.i, x.s) {
            Ok(expect) if expect == got.multiset() => with_formula += 1,
            Ok(expect) => return Err(format!("{x}: got {:?}, expected {:?}", got.multiset(), expect)),
            Err(Error::NoFormula(_)) => identity_only += 1,
            Err(e) => return Err(format!("{x}: {e}")),
        }
    }
    Ok(format!("{with_formula} formula matches, {identity_only} cardinality-only"))
}

fn criterion_4() -> Check {
    let mut n = 0;
    for x in verification_instances() {
        let (_, fp) = build_hat(x.case, x.n, x.i, x.s).map_err(|e| format!("{x}: {e}"))?;
        for st in [check_hat_weyl(&fp), check_vevp(&fp), check_powers(&fp)] {
            if !st.pass {
                return Err(format!("{x}: {} [{}]", st.name, st.witness.unwrap_or_default()));
            }
        }
        n += fp.len();
    }
    Ok(format!("Ŝ = S_w, vevp and powers on {n} fixed nodes"))
}

fn criterion_5() -> Check {
    let mut tables = 0;
    for x in verification_instances() {
        let t = build_tilde_crystal(x.case, x.n, x.i, x.s).map_err(|e| format!("{x}: {e}"))?;
        let mut rep = verify_tilde_intertwiners(&t);
        rep.extend(verify_omega_action(&t));
        if let Some(f) = rep.first_failure() {
            return Err(format!("{x}: {} [{}]", f.name, f.witness.clone().unwrap_or_default()));
        }
        tables += t.taus.len() + t.r_matrices.len();
        // Re-derive each R with the opposite propagation order.
        let m = t.factors.len();
        let pairs: Vec<(usize, usize)> = match m {
            2 => vec![(1, 0)],
            3 => vec![(2, 0), (1, 0)],
            _ => vec![],
        };
        for ((a, b), r) in pairs.into_iter().zip(&t.r_matrices) {
            let dfs = compute_r_matrix_with(&t.factors[a], &t.factors[b], Order::Dfs).map_err(|e| format!("{x}: {e}"))?;
            if dfs.map != r.map {
                return Err(format!("{x}: R tables differ between BFS and DFS"));
            }
            if !verify_intertwiner(&dfs.b12, &dfs.b21, &dfs.map).passed() {
                return Err(format!("{x}: DFS R fails re-verification"));
            }
        }
    }
    let b: Vec<CrystalGraph> =
        [2, 3, 4].iter().map(|&k| build_kr(Case::D, 3, k, 1)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let (l, r) = yang_baxter_sides([&b[0], &b[1], &b[2]]).map_err(|e| e.to_string())?;
    if l != r {
        let k = l.iter().zip(&r).position(|(a, c)| a != c).unwrap_or(0);
        return Err(format!("Yang–Baxter fails at node {k}"));
    }
    for (name, g) in [
        ("A_3^(1)", build_kr_type_a(3, 1, 1).map_err(|e| e.to_string())?),
        ("D_4^(1)", build_kr_type_d_vector(4, 1).map_err(|e| e.to_string())?),
    ] {
        compute_energy(&g).map_err(|e| format!("energy on {name}: {e}"))?;
    }
    Ok(format!("{tables} τ/R tables, Yang–Baxter on {} nodes, energy on A_3^(1) and D_4^(1)", l.len()))
}

fn criterion_6() -> Check {
    let mut out = Vec::new();
    for (case, n) in [(Case::A, 2), (Case::C, 3)] {
        let (t, fp) = build_hat(case, n, 1, 1).map_err(|e| e.to_string())?;
        let phi = phi_tensor_iso(&t, &fp, &t, &fp).map_err(|e| format!("case ({case}): {e}"))?;
        let rep = verify_phi(&phi);
        if let Some(f) = rep.first_failure() {
            return Err(format!("case ({case}): {} [{}]", f.name, f.witness.clone().unwrap_or_default()));
        }
        let he = hat_energy(&t, &fp).map_err(|e| format!("case ({case}): {e}"))?;
        let st = check_hat_energy(&fp, &he);
        if !st.pass {
            return Err(format!("case ({case}): {}", st.witness.unwrap_or_default()));
        }
        out.push(format!("({case}) {} nodes", phi.hat_tensor.len()));
    }
    Ok(out.join(", "))
}

fn criterion_7() -> Check {
    let mut checked = 0;
    for case in Case::ALL {
        let ranks: Vec<usize> = if case == Case::D { vec![3] } else { (case.min_rank()..case.min_rank() + 4).collect() };
        for n in ranks {
            let od = OrbitDatum::for_case(case, n).map_err(|e| e.to_string())?;
            let tag = format!("case ({case}) n = {n}");
            if od.hat.gcm != twisted_reference(case, n) {
                return Err(format!("{tag}: Â differs from {}", od.hat.name()));
            }
            if (od.hat.marks.clone(), od.hat.comarks.clone()) != twisted_reference_marks(case, n) {
                return Err(format!("{tag}: marks differ"));
            }
            let ones: Vec<usize> = (0..od.len()).filter(|&p| od.c_vals[p] == 1).collect();
            let expect_ones = if case == Case::B { vec![n] } else { vec![] };
            if ones != expect_ones {
                return Err(format!("{tag}: c_j = 1 at {ones:?}"));
            }
            for p in 0..od.len() {
                let orb = od.orbit_of(p);
                if od.hat.comarks[p] != orb.len() as i64 * od.datum.comarks[orb[0]] {
                    return Err(format!("{tag}: P_ω(c) ≠ ĉ at {p}"));
                }
                let lhs = od.p_omega_star(&od.hat.classical_alpha(p));
                let mut rhs = vec![0; od.datum.rank()];
                for &k in &orb {
                    for (a, b) in rhs.iter_mut().zip(od.datum.classical_alpha(k)) {
                        *a += 2 * b;
                    }
                }
                if rhs.iter().map(|x| x / od.c_vals[p]).collect::<Vec<_>>() != lhs {
                    return Err(format!("{tag}: P_ω*(α̂_{p}) identity fails"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} orbit data"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("model validity", criterion_1),
        ("main theorem", criterion_2),
        ("branching agreement", criterion_3),
        ("Weyl compatibility", criterion_4),
        ("intertwiner suite", criterion_5),
        ("fixed-point tensor isomorphism", criterion_6),
        ("structural constants", criterion_7),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
