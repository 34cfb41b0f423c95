use crate::crystal::graph::CrystalGraph;
use crate::error::{Error, Result};

/// `S_j b = f_j^m b` if `m = ⟨h_j, wt b⟩ ≥ 0`, else `e_j^{−m} b`.
pub fn s_j(b: &CrystalGraph, j: usize, x: usize) -> Result<usize> {
    let m = b.wt(x)[j];
    let y = if m >= 0 { b.f_pow(j, x, m as usize) } else { b.e_pow(j, x, (-m) as usize) };
    y.ok_or(Error::FellOff { node: x, label: j })
}

/// Applies `S_{j_1}`, then `S_{j_2}`, … to `x`.
pub fn weyl_action(b: &CrystalGraph, word: &[usize], x: usize) -> Result<usize> {
    word.iter().try_fold(x, |y, &j| s_j(b, j, y))
}

/// Partition into orbits of the group generated by the `S_j`.
pub fn weyl_orbits(b: &CrystalGraph) -> Result<Vec<Vec<usize>>> {
    let n = b.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for j in 0..b.labels() {
                let y = s_j(b, j, x)?;
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    Ok(out)
}

fn orbit_is_extremal(b: &CrystalGraph, orbit: &[usize]) -> bool {
    orbit.iter().all(|&x| (0..b.labels()).all(|j| b.e(j, x).is_none() || b.f(j, x).is_none()))
}

/// Orbits whose every element is killed by `e_j` or `f_j` for each `j`.
pub fn extremal_orbits(b: &CrystalGraph) -> Result<Vec<Vec<usize>>> {
    Ok(weyl_orbits(b)?.into_iter().filter(|o| orbit_is_extremal(b, o)).collect())
}

/// Extremal elements, sorted.
pub fn extremal_elements(b: &CrystalGraph) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = extremal_orbits(b)?.into_iter().flatten().collect();
    out.sort_unstable();
    Ok(out)
}

/// The unique extremal element whose weight is dominant away from node 0.
pub fn dominant_extremal(b: &CrystalGraph) -> Result<usize> {
    let cands: Vec<usize> = extremal_elements(b)?
        .into_iter()
        .filter(|&x| b.wt(x).iter().skip(1).all(|&c| c >= 0))
        .collect();
    match cands.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Model(format!("expected one dominant extremal element, found {}", cands.len()))),
    }
}
