//! Finite crystals as explicit graphs, and the generic machinery on them.

mod axioms;
mod decompose;
mod graph;
mod perfect;
mod tensor;
mod weyl;

pub use axioms::verify_crystal_axioms;
pub use decompose::{
    check_characters, check_regular, components, highest_weight_decomposition, proper_subsets,
    verify_regularity, Component, HighestWeightDecomposition, RegularityMode,
};
pub use graph::{CrystalGraph, Payload};
pub use perfect::{dominant_level_weights, is_perfect, is_simple, level_and_minimal};
pub use tensor::{signature_rule, tensor, tensor2, tensor_index, tensor_parts, Signature};
pub use weyl::{dominant_extremal, extremal_elements, extremal_orbits, s_j, weyl_action, weyl_orbits};
