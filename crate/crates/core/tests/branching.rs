use orbitcrystal::branching::{
    branch_hat, expected_branching, multiplicity_free_gate, weyl_dimension, weyl_dimension_freudenthal,
};
use orbitcrystal::cartan::Case;
use orbitcrystal::crystal::components;
use orbitcrystal::fixedpoint::build_hat;
use orbitcrystal::scope::verification_instances;
use orbitcrystal::{Error, OrbitDatum};

#[test]
fn branching_matches_formulas() {
    for inst in verification_instances() {
        let (t, fp) = build_hat(inst.case, inst.n, inst.i, inst.s).unwrap();
        let got = branch_hat(&fp).unwrap();
        assert_eq!(got.weighted_dim(), fp.len() as u128, "{inst}");
        match expected_branching(inst.case, inst.n, inst.i, inst.s) {
            Ok(expect) => assert_eq!(got.multiset(), expect, "{inst}"),
            Err(Error::NoFormula(_)) => assert_eq!((inst.case, inst.i), (Case::D, 2)),
            Err(e) => panic!("{inst}: {e}"),
        }
        let gate = multiplicity_free_gate(&t, &fp).unwrap();
        if gate.multiplicity_free {
            assert_eq!(gate.fixed_weight_agrees, Some(true), "{inst}");
        }
    }
}

#[test]
fn case_a_gate_is_multiplicity_free() {
    for (n, i, s) in [(2, 1, 1), (2, 2, 2), (3, 2, 1), (3, 1, 2)] {
        let (t, fp) = build_hat(Case::A, n, i, s).unwrap();
        assert!(multiplicity_free_gate(&t, &fp).unwrap().multiplicity_free);
    }
}

#[test]
fn b2_vector_component_has_five_nodes() {
    let (_, fp) = build_hat(Case::A, 2, 1, 1).unwrap();
    let comps = components(&fp.graph, &[1, 2]);
    let sizes: Vec<usize> = comps
        .iter()
        .filter(|c| c.iter().any(|&h| fp.graph.wt(h)[1..] == [1, 0]))
        .map(Vec::len)
        .collect();
    assert_eq!(sizes, vec![5]);
    assert_eq!(weyl_dimension(&fp.orbit, &[1, 0]).unwrap(), 5);
}

#[test]
fn dimensions_two_routes() {
    for case in Case::ALL {
        let od = OrbitDatum::for_case(case, 3).unwrap();
        let r = od.len() - 1;
        assert_eq!(weyl_dimension(&od, &vec![0; r]).unwrap(), 1);
        for a in 0..=2 {
            for b in 0..=1 {
                let mut w = vec![0; r];
                w[0] = a;
                w[r - 1] += b;
                assert_eq!(weyl_dimension(&od, &w).unwrap(), weyl_dimension_freudenthal(&od, &w).unwrap());
            }
        }
    }
    let od = OrbitDatum::for_case(Case::A, 2).unwrap();
    assert!(weyl_dimension(&od, &[-1, 0]).is_err());
}
