//! Concrete perfect KR crystals `B^{i,s}`.

mod type_a;
mod type_d;

use std::sync::Arc;

pub use type_a::{build_kr_type_a, build_type_a_model, classical_op, promotion, rect_tableaux, Tableau, TypeAModel};
pub use type_d::{
    build_kr_type_d_adjoint, build_kr_type_d_sigma, build_kr_type_d_spin, build_kr_type_d_vector,
    classical_component, word_op,
};

use crate::cartan::{build_affine_datum, Case};
use crate::crystal::CrystalGraph;
use crate::error::{Error, Result};

/// Kac numbering of `D_4^(1)` to the centre-one numbering of case (d).
pub const D4_RELABEL: [usize; 5] = [0, 2, 1, 3, 4];

/// `B^{i,s}` for node `i` of the case datum.
pub fn build_kr(case: Case, n: usize, i: usize, s: usize) -> Result<CrystalGraph> {
    let n = case.normalize_rank(n);
    let datum = build_affine_datum(case, n)?;
    if i == 0 || i >= datum.rank() {
        return Err(Error::OutOfRange { what: "node", index: i });
    }
    let no_model = || Error::OutOfScope(format!("no KR model for node {i}, s = {s} in case ({case})"));
    match case {
        Case::A => build_kr_type_a(2 * n - 1, i, s),
        Case::B => build_kr_type_a(2 * n, i, s),
        Case::C => {
            if i == 1 {
                build_kr_type_d_vector(n + 1, s)
            } else if i >= n && s == 1 {
                build_kr_type_d_spin(n + 1, i)
            } else {
                Err(no_model())
            }
        }
        Case::D => {
            let kac = D4_RELABEL.iter().position(|&x| x == i).unwrap();
            let g = match kac {
                1 => build_kr_type_d_vector(4, s)?,
                2 => build_kr_type_d_adjoint(4, s)?,
                3 | 4 if s == 1 => build_kr_type_d_spin(4, kac)?,
                _ => return Err(no_model()),
            };
            g.relabel(&D4_RELABEL, Arc::new(datum))
        }
    }
}
