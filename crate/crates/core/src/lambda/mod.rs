//! Modules over `Λ = kQ[ε]` (differential kQ-modules).

pub mod catalog;
mod diffrep;
mod eta;
mod ghost;
mod homology;
mod perfect;
pub mod sample;

pub use diffrep::{lambda_projective, make_diffrep, suspend, suspend_map, DiffRep, DiffRepMap};
pub use eta::{eta, sgp_witness, Eta, SgpWitness};
pub use ghost::{
    factor_through_ghost_generators, ghost_decompose, ghost_generator_arrow, ghost_generator_vertex, ghost_maps,
    injective_mod_socle, sink_sequence, FactorTerm, Generator, GhostContext, GhostDecomposition, GhostFactorization,
    SinkSequence, VertexGenerators,
};
pub use homology::{homology, homology_map, homology_map_with, is_ghost, Homology};
pub use perfect::{
    ext1_lambda, lambda_cover, lambda_radical_subspaces, map_from_lambda_projective, perfect_normal_form,
    regular_summands, split_projective_part, stable_hom, LambdaCover, NormalForm, ProjectivePart, StableHom,
};
