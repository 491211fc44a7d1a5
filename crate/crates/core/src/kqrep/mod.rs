//! Representations of a quiver over a field (modules over the path algebra).

pub mod cover;
pub mod decompose;
pub mod iso;
pub mod knit;
pub mod module;
pub mod rep;
pub mod tau;

pub use cover::{presentation, projective_cover, Presentation, ProjectiveCover, ProjectiveSum};
pub use decompose::{decompose, is_indecomposable, Certificate, DecompositionReport};
pub use iso::{is_isomorphic, iso_test};
pub use knit::{knit_ar_quiver, standard_name, ArArrow, ArNode, ArQuiver, ArrowKind, NodeClass};
pub(crate) use module::hom;
pub use module::{
    combine, direct_sum, generated_subspaces, hom_space, hstack_maps, quotient, span_coordinates, span_dim, submodule,
    vstack_maps, DirectSum, Module, Morphism,
};
pub use rep::{Rep, RepMap};
pub use tau::{ar_translate, ar_translate_checked, ar_translate_inverse, ar_translate_inverse_checked};
