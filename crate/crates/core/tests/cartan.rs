use orbitcrystal::cartan::{twisted_reference, twisted_reference_marks, Case};
use orbitcrystal::OrbitDatum;

fn ranks(case: Case) -> Vec<usize> {
    match case {
        Case::D => vec![3],
        _ => (case.min_rank()..=case.min_rank() + 4).collect(),
    }
}

#[test]
fn hat_matrices_are_the_twisted_types() {
    for case in Case::ALL {
        for n in ranks(case) {
            let od = OrbitDatum::for_case(case, n).unwrap();
            assert_eq!(od.hat.gcm, twisted_reference(case, n), "case ({case}) n = {n}");
            let (marks, comarks) = twisted_reference_marks(case, n);
            assert_eq!(od.hat.marks, marks, "case ({case}) n = {n}");
            assert_eq!(od.hat.comarks, comarks, "case ({case}) n = {n}");
        }
    }
}

#[test]
fn hat_type_names() {
    let name = |case, n| OrbitDatum::for_case(case, n).unwrap().hat.name();
    assert_eq!(name(Case::A, 2), "D_3^(2)");
    assert_eq!(name(Case::B, 1), "A_2^(2)");
    assert_eq!(name(Case::B, 3), "A_6^(2)");
    assert_eq!(name(Case::C, 3), "A_5^(2)");
    assert_eq!(name(Case::D, 3), "D_4^(3)");
}

#[test]
fn c_equals_one_only_in_case_b_at_n() {
    for case in Case::ALL {
        for n in ranks(case) {
            let od = OrbitDatum::for_case(case, n).unwrap();
            let ones: Vec<usize> = (0..od.len()).filter(|&p| od.c_vals[p] == 1).collect();
            if case == Case::B {
                assert_eq!(ones, vec![n], "n = {n}");
            } else {
                assert!(ones.is_empty(), "case ({case}) n = {n}");
            }
            assert!(od.c_vals.iter().all(|&c| c == 1 || c == 2));
        }
    }
}

#[test]
fn p_omega_maps_c_to_c_hat() {
    // c = Σ_p a^∨_{j_p} Σ_k h_{ω^k j_p} and P_ω sends (1/N_p) Σ_k h_{ω^k j_p} to ĥ_p.
    for case in Case::ALL {
        for n in ranks(case) {
            let od = OrbitDatum::for_case(case, n).unwrap();
            for p in 0..od.len() {
                let orb = od.orbit_of(p);
                assert!(orb.iter().all(|&k| od.datum.comarks[k] == od.datum.comarks[orb[0]]));
                assert_eq!(od.hat.comarks[p], od.orbit_sizes[p] as i64 * od.datum.comarks[orb[0]]);
            }
        }
    }
}

#[test]
fn p_omega_star_of_simple_roots() {
    for case in Case::ALL {
        for n in ranks(case) {
            let od = OrbitDatum::for_case(case, n).unwrap();
            for p in 0..od.len() {
                let lhs = od.p_omega_star(&od.hat.classical_alpha(p));
                let mut rhs = vec![0; od.datum.rank()];
                for k in od.orbit_of(p) {
                    for (a, b) in rhs.iter_mut().zip(od.datum.classical_alpha(k)) {
                        *a += 2 * b;
                    }
                }
                let rhs: Vec<i64> = rhs.iter().map(|x| x / od.c_vals[p]).collect();
                assert_eq!(lhs, rhs, "case ({case}) n = {n}, ĵ = {p}");
            }
        }
    }
}

#[test]
fn level_is_preserved() {
    for case in Case::ALL {
        for n in ranks(case) {
            let od = OrbitDatum::for_case(case, n).unwrap();
            for p in 0..od.len() {
                let mut w = vec![0; od.len()];
                w[p] = 1;
                assert_eq!(od.hat.level(&w), od.datum.level(&od.p_omega_star(&w)));
                assert_eq!(od.hat.level(&od.hat_fundamental(p)), 0);
                assert_eq!(od.p_omega_star(&od.hat_fundamental(p)), od.tilde_fundamental(p));
            }
        }
    }
}

#[test]
fn omega_preserves_the_matrix() {
    for case in Case::ALL {
        for n in ranks(case) {
            let od = OrbitDatum::for_case(case, n).unwrap();
            assert!(od.omega.check(&od.datum).is_ok());
            assert_eq!(od.omega.perm[0], 0);
            let ord = od.omega.order;
            assert!((0..od.datum.rank()).all(|j| od.omega.power(j, ord) == j));
        }
    }
}

#[test]
fn datum_json_shape() {
    let od = OrbitDatum::for_case(Case::A, 2).unwrap();
    let v = od.to_json(2);
    for key in ["case", "n", "I", "gcm", "marks", "comarks", "omega", "orbit"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for key in ["reps", "N", "c", "gcm_hat"] {
        assert!(v["orbit"].get(key).is_some(), "{key}");
    }
}

#[test]
fn case_e_is_out_of_scope() {
    let err = "e".parse::<Case>().unwrap_err();
    assert_eq!(err.to_string(), "case (e) out of scope");
}
