use std::collections::BTreeMap;

use orbitcrystal::cartan::Case;
use orbitcrystal::crystal::{
    dominant_extremal, extremal_elements, highest_weight_decomposition, is_perfect, is_simple,
    level_and_minimal, tensor2, verify_crystal_axioms, verify_regularity, CrystalGraph, RegularityMode,
};
use orbitcrystal::kr::{
    build_kr, build_kr_type_a, build_kr_type_d_adjoint, build_kr_type_d_spin, build_kr_type_d_vector,
    build_type_a_model, classical_op, promotion,
};
use orbitcrystal::lie::weyl_dimension;

fn assert_model(b: &CrystalGraph, s: i64, what: &str) {
    let ax = verify_crystal_axioms(b);
    assert!(ax.passed(), "{what}: {ax}");
    let reg = verify_regularity(b, RegularityMode::Full);
    assert!(reg.pass, "{what}: {reg:?}");
    let simple = is_simple(b);
    assert!(simple.passed(), "{what}: {simple}");
    let perf = is_perfect(b, s);
    assert!(perf.passed(), "{what}: {perf}");
}

/// Number of SSYT of rectangular shape `rows × cols` over `n` letters by the
/// hook-content formula.
fn hook_content(rows: usize, cols: usize, n: usize) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for r in 0..rows {
        for c in 0..cols {
            num *= (n + c - r) as u128;
            den *= ((cols - c) + (rows - r) - 1) as u128;
        }
    }
    num / den
}

#[test]
fn type_a_sizes_match_hook_content() {
    for rank in 3..=5 {
        for i in 1..=rank {
            for s in 1..=2 {
                let b = build_kr_type_a(rank, i, s).unwrap();
                assert_eq!(b.len() as u128, hook_content(i, s, rank + 1), "A_{rank} B^{{{i},{s}}}");
            }
        }
    }
}

#[test]
fn type_a_models_are_perfect() {
    for rank in 3..=5 {
        for i in 1..=rank {
            for s in 1..=2 {
                let b = build_kr_type_a(rank, i, s).unwrap();
                assert_model(&b, s as i64, &format!("A_{rank}^(1) B^{{{i},{s}}}"));
            }
        }
    }
}

#[test]
fn promotion_order_and_shift() {
    for (rank, i, s) in [(3, 2, 2), (4, 2, 1), (4, 3, 2), (5, 3, 1)] {
        let m = build_type_a_model(rank, i, s).unwrap();
        let letters = rank + 1;
        for (b, t) in m.tableaux.iter().enumerate() {
            let mut x = b;
            for _ in 0..letters {
                x = m.promotion[x];
            }
            assert_eq!(x, b, "promotion order");
            for j in 1..rank as u8 {
                let lhs = classical_op(t, j, true).map(|u| promotion(&u, letters as u8));
                let rhs = classical_op(&promotion(t, letters as u8), j + 1, true);
                assert_eq!(lhs, rhs, "pr ∘ f_{j} = f_{} ∘ pr", j + 1);
            }
        }
    }
}

#[test]
fn type_d_models_are_perfect() {
    for s in 1..=2 {
        assert_model(&build_kr_type_d_vector(4, s).unwrap(), s as i64, "D_4 vector");
        assert_model(&build_kr_type_d_vector(5, s).unwrap(), s as i64, "D_5 vector");
        assert_model(&build_kr_type_d_adjoint(4, s).unwrap(), s as i64, "D_4 adjoint");
    }
    for node in [3, 4] {
        assert_model(&build_kr_type_d_spin(4, node).unwrap(), 1, "D_4 spin");
    }
    for node in [4, 5] {
        assert_model(&build_kr_type_d_spin(5, node).unwrap(), 1, "D_5 spin");
    }
}

#[test]
fn case_d_node_crystals() {
    for i in [2, 3, 4] {
        let b = build_kr(Case::D, 3, i, 1).unwrap();
        assert_eq!(b.len(), 8);
        assert_model(&b, 1, "case (d) node");
        let total: Vec<i64> = (0..b.len()).fold(vec![0; 5], |mut acc, x| {
            acc.iter_mut().zip(b.wt(x)).for_each(|(a, w)| *a += w);
            acc
        });
        assert_eq!(total, vec![0; 5]);
    }
    assert_eq!(build_kr(Case::D, 3, 1, 2).unwrap().len(), 329);
}

#[test]
fn vector_classical_decomposition_matches_dimension() {
    // Classically B^{1,s} of D_{n+1}^(1) is the single component B(sϖ_1).
    for (ell, s) in [(4, 1), (4, 2), (4, 3), (5, 2)] {
        let b = build_kr_type_d_vector(ell, s).unwrap();
        let i0: Vec<usize> = (1..=ell).collect();
        let dec = highest_weight_decomposition(&b, &i0).unwrap();
        assert_eq!(dec.components.len(), 1);
        let lam: Vec<i64> = i0.iter().map(|&j| dec.components[0].weight[j]).collect();
        let mut expect = vec![0; ell];
        expect[0] = s as i64;
        assert_eq!(lam, expect);
        let a = b.datum().submatrix(&i0);
        assert_eq!(weyl_dimension(&a, &lam).unwrap(), b.len() as u128);
    }
}

#[test]
fn adjoint_classical_decomposition() {
    for s in 1..=2 {
        let b = build_kr_type_d_adjoint(4, s).unwrap();
        let dec = highest_weight_decomposition(&b, &[1, 2, 3, 4]).unwrap();
        let got: BTreeMap<Vec<i64>, usize> = dec.multiset();
        let expect: BTreeMap<Vec<i64>, usize> = (0..=s as i64).map(|k| (vec![0, k, 0, 0], 1)).collect();
        assert_eq!(got, expect);
    }
}

#[test]
fn a3_single_box_examples() {
    let b = build_kr_type_a(3, 1, 1).unwrap();
    let dec = highest_weight_decomposition(&b, &[1, 2, 3]).unwrap();
    assert_eq!(dec.components.len(), 1);
    assert_eq!(&dec.components[0].weight[1..], &[1, 0, 0]);
    assert_eq!(extremal_elements(&b).unwrap().len(), 4);
    let (lev, min) = level_and_minimal(&b);
    assert_eq!((lev, min.len()), (1, 4));
    assert_eq!(b.wt(dominant_extremal(&b).unwrap()), &[-1, 1, 0, 0]);
    let empty = highest_weight_decomposition(&b, &[]).unwrap();
    assert_eq!(empty.components.len(), 4);
}

#[test]
fn a3_lr_oracle() {
    // ϖ_1 ⊗ ϖ_3 = V(0) ⊕ V(ϖ_1 + ϖ_3) for sl_4.
    let b1 = build_kr_type_a(3, 1, 1).unwrap();
    let b3 = build_kr_type_a(3, 3, 1).unwrap();
    let t = tensor2(&b1, &b3).unwrap();
    let dec = highest_weight_decomposition(&t, &[1, 2, 3]).unwrap();
    let got = dec.multiset();
    let expect: BTreeMap<Vec<i64>, usize> = [(vec![0, 0, 0], 1), (vec![1, 0, 1], 1)].into_iter().collect();
    assert_eq!(got, expect);
}
