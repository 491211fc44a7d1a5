//! Small Λ-modules whose homology behaves badly outside the perfect modules.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::kqrep::Rep;
use crate::quiver::{catalog, Quiver};

use super::diffrep::{make_diffrep, DiffRep};

/// `A = k[ε]/(ε²)` in the basis (socle, generator).
fn dual_numbers(field: Field, copies: usize) -> Matrix {
    let j = Matrix::from_i64(field, &[&[0, 1], &[0, 0]]);
    Matrix::block_diag(field, &vec![j; copies])
}

/// `k → A ← k` on `1 → 2 ← 3`, both maps onto the socle of `A`.
pub fn socle_glued(field: Field) -> DiffRep {
    let q = Arc::new(catalog::a3_two_sources());
    let col = Matrix::from_i64(field, &[&[1], &[0]]);
    let base = Rep::new(q, field, vec![1, 2, 1], vec![col.clone(), col]).expect("shapes match");
    let eps = vec![Matrix::zeros(field, 1, 1), dual_numbers(field, 1), Matrix::zeros(field, 1, 1)];
    make_diffrep(base, eps).expect("maps land in the socle")
}

/// The Kronecker module `k ⇉ A` with arrows `x ↦ (a, 0)` and `y ↦ (b, 0)`; modules with
/// non-proportional `(a, b)` are non-isomorphic.
pub fn kronecker_member(field: Field, a: i64, b: i64) -> Result<DiffRep> {
    if a == 0 && b == 0 {
        return Err(Error::ZeroVector);
    }
    let q = Arc::new(catalog::kronecker());
    let x = Matrix::from_i64(field, &[&[a], &[0]]);
    let y = Matrix::from_i64(field, &[&[b], &[0]]);
    let base = Rep::new(q, field, vec![2, 1], vec![x, y])?;
    make_diffrep(base, vec![dual_numbers(field, 1), Matrix::zeros(field, 1, 1)])
}

/// Modules on the subspace `D4` with homology `S(1) ⊕ S(2) ⊕ S(3)`: the three sources
/// map into the socle of `A` (`copies = 1`) or onto three lines of the socle of `A²`
/// (`copies = 2`).
pub fn d4_three_simples(field: Field, copies: usize) -> Result<DiffRep> {
    let q: Arc<Quiver> = Arc::new(catalog::d4());
    let cols: Vec<Matrix> = match copies {
        1 => vec![Matrix::from_i64(field, &[&[1], &[0]]); 3],
        2 => {
            [[1, 0], [0, 1], [1, 1]].iter().map(|c| Matrix::from_i64(field, &[&[c[0]], &[0], &[c[1]], &[0]])).collect()
        }
        _ => return Err(Error::DimensionMismatch(format!("expected 1 or 2 copies of A, got {copies}"))),
    };
    let base = Rep::new(q, field, vec![2 * copies, 1, 1, 1], cols)?;
    let z = Matrix::zeros(field, 1, 1);
    make_diffrep(base, vec![dual_numbers(field, copies), z.clone(), z.clone(), z])
}
