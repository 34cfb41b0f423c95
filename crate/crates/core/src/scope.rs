//! Admissible `(case, n, i, s)` inputs for the tilde and hat constructions.

use crate::cartan::Case;
use crate::error::{Error, Result};

/// A single `(case, n, i, s)` instance; `i` indexes `Î_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Instance {
    pub case: Case,
    pub n: usize,
    pub i: usize,
    pub s: usize,
}

impl Instance {
    pub fn new(case: Case, n: usize, i: usize, s: usize) -> Self {
        Self { case, n: case.normalize_rank(n), i, s }
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "case ({}) n={} i={} s={}", self.case, self.n, self.i, self.s)
    }
}

/// Size of `Î_0`.
pub fn hat_rank(case: Case, n: usize) -> usize {
    match case {
        Case::D => 2,
        _ => n,
    }
}

pub fn check_scope(case: Case, n: usize, i: usize, s: usize) -> Result<()> {
    let n = case.normalize_rank(n);
    if n < case.min_rank() {
        return Err(Error::RankTooSmall { case: case.tag(), n, min: case.min_rank() });
    }
    if i == 0 || i > hat_rank(case, n) {
        return Err(Error::OutOfScope(format!("i = {i} is not in Î_0 for case ({case}) n = {n}")));
    }
    if s == 0 {
        return Err(Error::OutOfRange { what: "level", index: s });
    }
    let ok = match case {
        Case::A | Case::B => true,
        Case::C => i == 1 || (i == n && s == 1),
        Case::D => i == 1 || s == 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfScope(format!("(i, s) = ({i}, {s}) out of scope for case ({case})")))
    }
}

/// Instances exercised by the main-theorem verification.
pub fn verification_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for (case, ranks) in [(Case::A, [2, 3]), (Case::B, [1, 2])] {
        for n in ranks {
            for i in 1..=n {
                for s in 1..=2 {
                    out.push(Instance::new(case, n, i, s));
                }
            }
        }
    }
    out.extend([
        Instance::new(Case::C, 3, 1, 1),
        Instance::new(Case::C, 3, 1, 2),
        Instance::new(Case::C, 3, 3, 1),
        Instance::new(Case::D, 3, 1, 1),
        Instance::new(Case::D, 3, 1, 2),
        Instance::new(Case::D, 3, 2, 1),
    ]);
    out
}
