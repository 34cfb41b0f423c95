use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {n} below admissible minimum {min} for case ({case})")]
    RankTooSmall { case: char, n: usize, min: usize },

    #[error("{0}")]
    OutOfScope(String),

    #[error("{what} {index} out of range")]
    OutOfRange { what: &'static str, index: usize },

    #[error("automorphism does not preserve the Cartan matrix at ({0}, {1})")]
    NotInvariant(usize, usize),

    #[error("not ω*-fixed: coefficients differ on orbit {0:?}")]
    NotFixed(Vec<usize>),

    #[error("datum mismatch: {0}")]
    DatumMismatch(String),

    #[error("operator {label} fell off the graph at node {node}")]
    FellOff { node: usize, label: usize },

    #[error("propagation conflict: {0}")]
    Conflict(String),

    #[error("anchor weight mismatch: {0}")]
    AnchorMismatch(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("fixed-point stability violated: {0}")]
    Stability(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("no closed formula in scope: {0}")]
    NoFormula(String),

    #[error("model construction failed: {0}")]
    Model(String),

    #[error("inconsistent energy at node {0}")]
    Energy(usize),
}
