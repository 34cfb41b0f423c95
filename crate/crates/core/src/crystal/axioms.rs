use crate::crystal::graph::CrystalGraph;
use crate::report::{Report, Stage};

/// Checks e/f pairing, the weight step along edges and semiregularity.
/// Each stage names a witness `(node, label)` on failure.
pub fn verify_crystal_axioms(b: &CrystalGraph) -> Report {
    let mut rep = Report::new();
    rep.push(Stage::from_result("axiom:pairing", pairing(b)));
    rep.push(Stage::from_result("axiom:weight", weight_step(b)));
    rep.push(Stage::from_result("axiom:semiregular", semiregular(b)));
    rep
}

fn pairing(b: &CrystalGraph) -> Result<(), String> {
    for j in 0..b.labels() {
        for x in 0..b.len() {
            if let Some(y) = b.f(j, x) {
                if b.e(j, y) != Some(x) {
                    return Err(format!("f_{j}({x}) = {y} but e_{j}({y}) = {:?}", b.e(j, y)));
                }
            }
            if let Some(y) = b.e(j, x) {
                if b.f(j, y) != Some(x) {
                    return Err(format!("e_{j}({x}) = {y} but f_{j}({y}) = {:?}", b.f(j, y)));
                }
            }
        }
    }
    Ok(())
}

fn weight_step(b: &CrystalGraph) -> Result<(), String> {
    let d = b.datum();
    for j in 0..b.labels() {
        let alpha = d.classical_alpha(j);
        for x in 0..b.len() {
            if let Some(y) = b.f(j, x) {
                let ok = b.wt(x).iter().zip(b.wt(y)).zip(&alpha).all(|((a, c), al)| a - c == *al);
                if !ok {
                    return Err(format!("wt(f_{j}({x})) ≠ wt({x}) − α_{j}"));
                }
            }
        }
    }
    Ok(())
}

fn semiregular(b: &CrystalGraph) -> Result<(), String> {
    let n = b.len() as u32;
    for j in 0..b.labels() {
        for x in 0..b.len() {
            let (e, p) = (b.eps(j, x), b.phi(j, x));
            if e >= n || p >= n {
                return Err(format!("unbounded {j}-string at {x}"));
            }
            if p as i64 - e as i64 != b.wt(x)[j] {
                return Err(format!("φ_{j}({x}) − ε_{j}({x}) = {} ≠ {}", p as i64 - e as i64, b.wt(x)[j]));
            }
        }
    }
    Ok(())
}
