//! Affine Cartan data, diagram automorphisms and orbit Lie algebra data.
//!
//! Convention: `gcm[j][k] = α_k(h_j)`. Weights are integer vectors over the
//! classical fundamental weights `Λ_j`, so pairing with `h_k` is entry `k`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// The four diagram-automorphism families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Case {
    A,
    B,
    C,
    D,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::A, Case::B, Case::C, Case::D];

    pub fn tag(self) -> char {
        match self {
            Case::A => 'a',
            Case::B => 'b',
            Case::C => 'c',
            Case::D => 'd',
        }
    }

    /// Smallest admissible rank parameter.
    pub fn min_rank(self) -> usize {
        match self {
            Case::A => 2,
            Case::B => 1,
            Case::C => 3,
            Case::D => 3,
        }
    }

    /// Case (d) has a single instance; its rank parameter is pinned to 3.
    pub fn normalize_rank(self, n: usize) -> usize {
        if self == Case::D {
            3
        } else {
            n
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Case::A),
            "b" => Ok(Case::B),
            "c" => Ok(Case::C),
            "d" => Ok(Case::D),
            "e" => Err(Error::OutOfScope("case (e) out of scope".into())),
            other => Err(Error::OutOfScope(format!("unknown case '{other}'"))),
        }
    }
}

/// Affine type of a datum. Numbering is fixed per variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AffineType {
    /// `A_ell^(1)`, nodes on a cycle.
    A1 { ell: usize },
    /// `D_ell^(1)`: 0 and 1 on 2, chain up to `ell-2`, which carries `ell-1` and `ell`.
    D1 { ell: usize },
    /// `D_4^(1)` with centre node 1.
    D4Centre,
    /// `D_{n+1}^(2)`.
    D2 { n: usize },
    /// `A_{2n}^(2)`.
    A2Even { n: usize },
    /// `A_{2n-1}^(2)`.
    A2Odd { n: usize },
    /// `D_4^(3)`.
    D43,
}

impl AffineType {
    pub fn name(&self) -> String {
        match *self {
            AffineType::A1 { ell } => format!("A_{ell}^(1)"),
            AffineType::D1 { ell } => format!("D_{ell}^(1)"),
            AffineType::D4Centre => "D_4^(1)".into(),
            AffineType::D2 { n } => format!("D_{}^(2)", n + 1),
            AffineType::A2Even { n } => format!("A_{}^(2)", 2 * n),
            AffineType::A2Odd { n } => format!("A_{}^(2)", 2 * n - 1),
            AffineType::D43 => "D_4^(3)".into(),
        }
    }
}

/// Which lattice a weight lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Lattice {
    Untwisted,
    Orbit,
}

/// Integer vector over `{Λ_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassicalWeight {
    pub coeffs: Vec<i64>,
    pub lattice: Lattice,
}

impl ClassicalWeight {
    pub fn new(coeffs: Vec<i64>, lattice: Lattice) -> Self {
        Self { coeffs, lattice }
    }

    pub fn zero(rank: usize, lattice: Lattice) -> Self {
        Self::new(vec![0; rank], lattice)
    }

    pub fn basis(rank: usize, j: usize, lattice: Lattice) -> Self {
        let mut w = Self::zero(rank, lattice);
        w.coeffs[j] = 1;
        w
    }

    pub fn pair(&self, k: usize) -> i64 {
        self.coeffs[k]
    }

    pub fn level(&self, datum: &AffineCartanDatum) -> i64 {
        datum.level(&self.coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.lattice, other.lattice);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self::new(coeffs, self.lattice)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * k).collect(), self.lattice)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Generalized Cartan matrix of affine type with marks and comarks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineCartanDatum {
    pub kind: AffineType,
    pub gcm: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
}

impl AffineCartanDatum {
    /// Builds a datum from a GCM, computing marks and comarks as the primitive
    /// positive null vectors.
    pub fn from_gcm(kind: AffineType, gcm: Vec<Vec<i64>>) -> Result<Self> {
        let marks = primitive_null_vector(&gcm, false)
            .ok_or_else(|| Error::Model(format!("{} has no positive null vector", kind.name())))?;
        let comarks = primitive_null_vector(&gcm, true)
            .ok_or_else(|| Error::Model(format!("{} has no positive co-null vector", kind.name())))?;
        let d = Self { kind, gcm, marks, comarks };
        d.check()?;
        Ok(d)
    }

    pub fn untwisted_a(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::RankTooSmall { case: 'a', n: ell, min: 2 });
        }
        let r = ell + 1;
        let mut gcm = identity2(r);
        for j in 0..r {
            let k = (j + 1) % r;
            gcm[j][k] = -1;
            gcm[k][j] = -1;
        }
        Self::from_gcm(AffineType::A1 { ell }, gcm)
    }

    pub fn untwisted_d(ell: usize) -> Result<Self> {
        if ell < 4 {
            return Err(Error::RankTooSmall { case: 'c', n: ell.saturating_sub(1), min: 3 });
        }
        let mut edges = vec![(0, 2)];
        for j in 1..ell - 2 {
            edges.push((j, j + 1));
        }
        edges.push((ell - 2, ell - 1));
        edges.push((ell - 2, ell));
        Self::from_gcm(AffineType::D1 { ell }, simply_laced(ell + 1, &edges))
    }

    pub fn d4_centre() -> Result<Self> {
        let edges = [(1, 0), (1, 2), (1, 3), (1, 4)];
        Self::from_gcm(AffineType::D4Centre, simply_laced(5, &edges))
    }

    pub fn rank(&self) -> usize {
        self.gcm.len()
    }

    pub fn index_set(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    pub fn name(&self) -> String {
        self.kind.name()
    }

    pub fn level(&self, coeffs: &[i64]) -> i64 {
        coeffs.iter().zip(&self.comarks).map(|(c, a)| c * a).sum()
    }

    /// `cl(α_j) = Σ_k a[k][j] Λ_k`.
    pub fn classical_alpha(&self, j: usize) -> Vec<i64> {
        (0..self.rank()).map(|k| self.gcm[k][j]).collect()
    }

    /// Checks the GCM, null-root and central-element relations.
    pub fn check(&self) -> Result<()> {
        let r = self.rank();
        let bad = |m: String| Err(Error::Model(format!("{}: {m}", self.name())));
        if self.marks.len() != r || self.comarks.len() != r {
            return bad("marks/comarks length".into());
        }
        for j in 0..r {
            if self.gcm[j].len() != r {
                return bad("matrix not square".into());
            }
            if self.gcm[j][j] != 2 {
                return bad(format!("diagonal entry at {j}"));
            }
            for k in 0..r {
                if j != k && (self.gcm[j][k] > 0 || (self.gcm[j][k] == 0) != (self.gcm[k][j] == 0)) {
                    return bad(format!("off-diagonal entry at ({j}, {k})"));
                }
            }
        }
        if self.marks.iter().chain(&self.comarks).any(|&m| m <= 0) {
            return bad("non-positive mark".into());
        }
        for k in 0..r {
            let delta: i64 = (0..r).map(|j| self.marks[j] * self.gcm[k][j]).sum();
            let central: i64 = (0..r).map(|j| self.comarks[j] * self.gcm[j][k]).sum();
            if delta != 0 {
                return bad(format!("null root fails at {k}"));
            }
            if central != 0 {
                return bad(format!("central element fails at {k}"));
            }
        }
        Ok(())
    }

    /// Cartan submatrix on `j`, in the order given.
    pub fn submatrix(&self, j: &[usize]) -> Vec<Vec<i64>> {
        j.iter().map(|&a| j.iter().map(|&b| self.gcm[a][b]).collect()).collect()
    }

    /// `ϖ_i = Λ_i − a_i^∨ Λ_0`.
    pub fn level_zero_fundamental(&self, i: usize) -> Vec<i64> {
        let mut w = vec![0; self.rank()];
        w[i] += 1;
        w[0] -= self.comarks[i];
        w
    }
}

fn identity2(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|j| (0..r).map(|k| if j == k { 2 } else { 0 }).collect()).collect()
}

fn simply_laced(r: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut gcm = identity2(r);
    for &(a, b) in edges {
        gcm[a][b] = -1;
        gcm[b][a] = -1;
    }
    gcm
}

/// Primitive positive integer vector `x` with `A x = 0` (or `Aᵀ x = 0`).
fn primitive_null_vector(gcm: &[Vec<i64>], transpose: bool) -> Option<Vec<i64>> {
    let r = gcm.len();
    let entry = |i: usize, j: usize| if transpose { gcm[j][i] } else { gcm[i][j] };
    let mut m: Vec<Vec<Ratio<i64>>> =
        (0..r).map(|i| (0..r).map(|j| Ratio::from_integer(entry(i, j))).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r {
        let Some(p) = (row..r).find(|&i| m[i][col] != Ratio::from_integer(0)) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in 0..r {
            m[row][c] *= inv;
        }
        for i in 0..r {
            if i != row && m[i][col] != Ratio::from_integer(0) {
                let f = m[i][col];
                for c in 0..r {
                    let v = m[row][c];
                    m[i][c] -= f * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..r).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let fc = free[0];
    let mut x = vec![Ratio::from_integer(0); r];
    x[fc] = Ratio::from_integer(1);
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = -m[ri][fc];
    }
    let den = x.iter().fold(1i64, |acc, v| acc.lcm(v.denom()));
    let mut out: Vec<i64> = x.iter().map(|v| (v * den).to_integer()).collect();
    let g = out.iter().fold(0i64, |acc, v| acc.gcd(v));
    if g == 0 {
        return None;
    }
    out.iter_mut().for_each(|v| *v /= g);
    if out.iter().all(|&v| v < 0) {
        out.iter_mut().for_each(|v| *v = -*v);
    }
    out.iter().all(|&v| v > 0).then_some(out)
}

/// Affine datum for a case; numbering follows the case figures.
pub fn build_affine_datum(case: Case, n: usize) -> Result<AffineCartanDatum> {
    let n = case.normalize_rank(n);
    if n < case.min_rank() {
        return Err(Error::RankTooSmall { case: case.tag(), n, min: case.min_rank() });
    }
    match case {
        Case::A => AffineCartanDatum::untwisted_a(2 * n - 1),
        Case::B => AffineCartanDatum::untwisted_a(2 * n),
        Case::C => AffineCartanDatum::untwisted_d(n + 1),
        Case::D => AffineCartanDatum::d4_centre(),
    }
}

/// A Dynkin-diagram symmetry fixing node 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
    pub order: usize,
    pub case: Case,
}

impl DiagramAutomorphism {
    pub fn apply(&self, j: usize) -> usize {
        self.perm[j]
    }

    pub fn power(&self, j: usize, k: usize) -> usize {
        (0..k).fold(j, |x, _| self.perm[x])
    }

    pub fn orbit(&self, j: usize) -> Vec<usize> {
        let mut out = vec![j];
        let mut x = self.perm[j];
        while x != j {
            out.push(x);
            x = self.perm[x];
        }
        out
    }

    /// `ω*`: the coefficient of `Λ_{ω(j)}` in the image is the coefficient of `Λ_j`.
    pub fn act_on_weight(&self, w: &[i64]) -> Vec<i64> {
        let mut out = vec![0; w.len()];
        for (j, &c) in w.iter().enumerate() {
            out[self.perm[j]] = c;
        }
        out
    }

    pub fn check(&self, datum: &AffineCartanDatum) -> Result<()> {
        let r = datum.rank();
        let mut seen = vec![false; r];
        if self.perm.len() != r || self.perm[0] != 0 {
            return Err(Error::Model("automorphism must fix node 0".into()));
        }
        for &p in &self.perm {
            if p >= r || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Model("automorphism is not a permutation".into()));
            }
        }
        for j in 0..r {
            for k in 0..r {
                if datum.gcm[self.perm[j]][self.perm[k]] != datum.gcm[j][k] {
                    return Err(Error::NotInvariant(j, k));
                }
            }
            if self.power(j, self.order) != j {
                return Err(Error::Model(format!("ω^{} moves {j}", self.order)));
            }
        }
        Ok(())
    }
}

pub fn build_automorphism(case: Case, n: usize) -> DiagramAutomorphism {
    let n = case.normalize_rank(n);
    let (perm, order) = match case {
        Case::A => {
            let r = 2 * n;
            ((0..r).map(|j| if j == 0 { 0 } else { r - j }).collect(), 2)
        }
        Case::B => {
            let r = 2 * n + 1;
            ((0..r).map(|j| if j == 0 { 0 } else { r - j }).collect(), 2)
        }
        Case::C => {
            let mut p: Vec<usize> = (0..n + 2).collect();
            p.swap(n, n + 1);
            (p, 2)
        }
        Case::D => (vec![0, 1, 3, 4, 2], 3),
    };
    DiagramAutomorphism { perm, order, case }
}

/// Orbit Lie algebra data attached to `(datum, ω)`.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitDatum {
    #[serde(skip)]
    pub datum: Arc<AffineCartanDatum>,
    pub omega: DiagramAutomorphism,
    pub reps: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub c_vals: Vec<i64>,
    pub c_matrix: Vec<Vec<i64>>,
    #[serde(skip)]
    pub hat: Arc<AffineCartanDatum>,
    /// Matrix of `P_ω*`: `embed[k][p]` is the coefficient of `Λ_k` in `P_ω*(Λ̂_p)`.
    pub embed: Vec<Vec<i64>>,
}

pub fn build_orbit_datum(datum: Arc<AffineCartanDatum>, omega: DiagramAutomorphism) -> Result<OrbitDatum> {
    omega.check(&datum)?;
    let r = datum.rank();
    let reps: Vec<usize> = (0..r).filter(|&j| omega.orbit(j).iter().all(|&x| j <= x)).collect();
    let orbits: Vec<Vec<usize>> = reps.iter().map(|&j| omega.orbit(j)).collect();
    let m = reps.len();
    let c_matrix: Vec<Vec<i64>> = reps
        .iter()
        .map(|&i| orbits.iter().map(|orb| orb.iter().map(|&k| datum.gcm[i][k]).sum()).collect())
        .collect();
    let c_vals: Vec<i64> = (0..m).map(|p| c_matrix[p][p]).collect();
    let mut gcm_hat = vec![vec![0; m]; m];
    for p in 0..m {
        for q in 0..m {
            let num = 2 * c_matrix[p][q];
            if num % c_vals[q] != 0 {
                return Err(Error::Model(format!("c_{} does not divide 2c_{{{},{}}}", reps[q], reps[p], reps[q])));
            }
            gcm_hat[p][q] = num / c_vals[q];
        }
    }
    let n = m - 1;
    let kind = match omega.case {
        Case::A => AffineType::D2 { n },
        Case::B => AffineType::A2Even { n },
        Case::C => AffineType::A2Odd { n },
        Case::D => AffineType::D43,
    };
    let hat = AffineCartanDatum::from_gcm(kind, gcm_hat)?;
    let mut embed = vec![vec![0; m]; r];
    for (p, orb) in orbits.iter().enumerate() {
        for &k in orb {
            embed[k][p] = 1;
        }
    }
    Ok(OrbitDatum {
        datum,
        omega,
        orbit_sizes: orbits.iter().map(Vec::len).collect(),
        reps,
        c_vals,
        c_matrix,
        hat: Arc::new(hat),
        embed,
    })
}

impl OrbitDatum {
    pub fn for_case(case: Case, n: usize) -> Result<Self> {
        let datum = Arc::new(build_affine_datum(case, n)?);
        build_orbit_datum(datum, build_automorphism(case, n))
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Position of an index of `I` in `Î`, if it is a representative.
    pub fn position(&self, j: usize) -> Option<usize> {
        self.reps.iter().position(|&r| r == j)
    }

    pub fn orbit_of(&self, p: usize) -> Vec<usize> {
        self.omega.orbit(self.reps[p])
    }

    /// `P_ω*`: `Λ̂_p ↦ Σ_k Λ_{ω^k(p)}`.
    pub fn p_omega_star(&self, hat: &[i64]) -> Vec<i64> {
        self.embed.iter().map(|row| row.iter().zip(hat).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn p_omega_star_weight(&self, hat: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight::new(self.p_omega_star(&hat.coeffs), Lattice::Untwisted)
    }

    /// Inverse of `P_ω*` on the `ω*`-fixed sublattice.
    pub fn p_omega_star_inverse(&self, w: &[i64]) -> Result<Vec<i64>> {
        (0..self.len())
            .map(|p| {
                let orb = self.orbit_of(p);
                let c = w[orb[0]];
                if orb.iter().any(|&k| w[k] != c) {
                    Err(Error::NotFixed(orb))
                } else {
                    Ok(c)
                }
            })
            .collect()
    }

    pub fn p_omega_star_inverse_weight(&self, w: &ClassicalWeight) -> Result<ClassicalWeight> {
        Ok(ClassicalWeight::new(self.p_omega_star_inverse(&w.coeffs)?, Lattice::Orbit))
    }

    /// The word `w_j` in `I` replacing the generator `r̂_j` (`p` is a position in `Î`).
    pub fn w_word(&self, p: usize) -> Vec<usize> {
        let j = self.reps[p];
        if self.c_vals[p] == 1 {
            vec![j, self.omega.apply(j), j]
        } else {
            self.omega.orbit(j)
        }
    }

    /// Operator word of the ω-Kashiwara operator at `p`, applied left to right.
    pub fn operator_word(&self, p: usize) -> Vec<usize> {
        let j = self.reps[p];
        if self.c_vals[p] == 1 {
            let w = self.omega.apply(j);
            vec![j, w, w, j]
        } else {
            self.omega.orbit(j)
        }
    }

    /// `Θ` on words: each `r̂_j` is replaced by `w_j`. Input letters are elements of `Î`.
    pub fn theta_word(&self, word: &[usize]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for &j in word {
            let p = self.position(j).ok_or(Error::OutOfRange { what: "orbit index", index: j })?;
            out.extend(self.w_word(p));
        }
        Ok(out)
    }

    /// `ϖ̂_i = Λ̂_i − â_i^∨ Λ̂_0` with `i` a position in `Î`.
    pub fn hat_fundamental(&self, p: usize) -> Vec<i64> {
        self.hat.level_zero_fundamental(p)
    }

    /// `ϖ̃_i = Σ_k ϖ_{ω^k(i)}`.
    pub fn tilde_fundamental(&self, p: usize) -> Vec<i64> {
        let mut w = vec![0; self.datum.rank()];
        for k in self.orbit_of(p) {
            for (a, b) in w.iter_mut().zip(self.datum.level_zero_fundamental(k)) {
                *a += b;
            }
        }
        w
    }

    /// JSON form `{case, n, I, gcm, marks, comarks, omega, orbit:{reps, N, c, gcm_hat}}`.
    pub fn to_json(&self, n: usize) -> serde_json::Value {
        serde_json::json!({
            "case": self.omega.case.tag().to_string(),
            "n": self.omega.case.normalize_rank(n),
            "type": self.datum.name(),
            "I": self.datum.index_set(),
            "gcm": self.datum.gcm,
            "marks": self.datum.marks,
            "comarks": self.datum.comarks,
            "omega": self.omega.perm,
            "orbit": {
                "type": self.hat.name(),
                "reps": self.reps,
                "N": self.orbit_sizes,
                "c": self.c_vals,
                "gcm_hat": self.hat.gcm,
                "marks_hat": self.hat.marks,
                "comarks_hat": self.hat.comarks,
            }
        })
    }
}

/// Twisted Cartan matrices written out by hand, used to cross-check `Â`.
pub fn twisted_reference(case: Case, n: usize) -> Vec<Vec<i64>> {
    let n = case.normalize_rank(n);
    let r = if case == Case::D { 3 } else { n + 1 };
    let mut a = identity2(r);
    let link = |a: &mut Vec<Vec<i64>>, x: usize, y: usize, xy: i64, yx: i64| {
        a[x][y] = xy;
        a[y][x] = yx;
    };
    match case {
        Case::A => {
            for j in 1..n {
                link(&mut a, j, j + 1, -1, -1);
            }
            link(&mut a, 0, 1, -2, -1);
            a[n - 1][n] = -1;
            a[n][n - 1] = -2;
        }
        Case::B if n == 1 => {
            link(&mut a, 0, 1, -4, -1);
        }
        Case::B => {
            for j in 1..n - 1 {
                link(&mut a, j, j + 1, -1, -1);
            }
            link(&mut a, 0, 1, -2, -1);
            link(&mut a, n - 1, n, -2, -1);
        }
        Case::C => {
            link(&mut a, 0, 2, -1, -1);
            for j in 1..n - 1 {
                link(&mut a, j, j + 1, -1, -1);
            }
            link(&mut a, n - 1, n, -2, -1);
        }
        Case::D => {
            link(&mut a, 0, 1, -1, -1);
            link(&mut a, 1, 2, -3, -1);
        }
    }
    a
}

/// Hand-written marks and comarks of the twisted types.
pub fn twisted_reference_marks(case: Case, n: usize) -> (Vec<i64>, Vec<i64>) {
    let n = case.normalize_rank(n);
    let mut marks = vec![2; n + 1];
    let mut comarks = vec![2; n + 1];
    match case {
        Case::A => {
            marks.iter_mut().for_each(|m| *m = 1);
            comarks[0] = 1;
            comarks[n] = 1;
        }
        Case::B => {
            marks[n] = 1;
            comarks[0] = 1;
        }
        Case::C => {
            marks[0] = 1;
            marks[1] = 1;
            marks[n] = 1;
            comarks[0] = 1;
            comarks[1] = 1;
        }
        Case::D => {
            marks = vec![1, 2, 1];
            comarks = vec![1, 2, 3];
        }
    }
    (marks, comarks)
}
