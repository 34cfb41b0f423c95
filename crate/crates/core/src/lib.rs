//! Perfect Kirillov–Reshetikhin crystals for simply-laced affine types,
//! diagram automorphisms, combinatorial R-matrices and energy functions,
//! and fixed-point crystals for the twisted types.

pub mod branching;
pub mod cartan;
pub mod crystal;
pub mod error;
pub mod export;
pub mod fixedpoint;
pub mod intertwiner;
pub mod kr;
pub mod lie;
pub mod report;
pub mod scope;

pub use cartan::{
    build_affine_datum, build_automorphism, build_orbit_datum, AffineCartanDatum, AffineType, Case,
    ClassicalWeight, DiagramAutomorphism, Lattice, OrbitDatum,
};
pub use crystal::{CrystalGraph, HighestWeightDecomposition, Payload};
pub use error::{Error, Result};
pub use report::{Report, Stage};
