//! Exact computations with representations of acyclic quivers over a field and over the
//! dual numbers: homology, the η-approximation, ghost maps and Auslander–Reiten quivers.

pub mod artheory;
pub mod error;
pub mod exactlin;
pub mod kqrep;
pub mod lambda;
pub mod quiver;
pub mod suites;
pub mod text;

pub use artheory::{gamma_l, gamma_stable, letter_string, to_dot};
pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, Poly, Scalar, Subspace};
pub use kqrep::{knit_ar_quiver, ArQuiver, ArrowKind, Module, Morphism, NodeClass, Rep, RepMap};
pub use lambda::{eta, homology, DiffRep, DiffRepMap};
pub use quiver::{Quiver, RootType};
pub use suites::{run_suite, Suite, SuiteConfig, SuiteReport};

/// The pseudo-random stream used everywhere randomness is needed; fixed by the seed.
pub type SeededRng = rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    SeededRng::seed_from_u64(seed)
}
