//! Subspaces in canonical reduced column echelon form.

use super::field::Field;
use super::matrix::Matrix;

/// A subspace of `k^n`. The basis is in reduced column echelon form, so two
/// subspaces are equal exactly when their basis matrices are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the columns of `m`.
    pub fn from_span(m: &Matrix) -> Subspace {
        let (r, pivots) = m.transpose().rref();
        let rank = pivots.len();
        let idx: Vec<usize> = (0..rank).collect();
        let basis = r.select_rows(&idx).transpose();
        Subspace { basis, pivots }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, ambient, 0), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// `ambient_dim × dim` matrix whose columns form the canonical basis.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Row index of the leading entry of each basis column.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Coordinates of the columns of `v` in the canonical basis, if they lie in the subspace.
    pub fn coordinates(&self, v: &Matrix) -> Option<Matrix> {
        let coords = v.select_rows(&self.pivots);
        (self.basis.mul(&coords) == *v).then_some(coords)
    }

    pub fn contains(&self, v: &Matrix) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.contains(&other.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_span(&self.basis.hstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let stacked = self.basis.hstack(&other.basis.neg());
        let k = stacked.kernel_basis();
        let idx: Vec<usize> = (0..self.dim()).collect();
        Subspace::from_span(&self.basis.mul(&k.select_rows(&idx)))
    }

    /// Image under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        Subspace::from_span(&m.mul(&self.basis))
    }

    /// Projection onto a complement and a section of it; see [`quotient_basis`].
    pub fn quotient_basis(&self) -> (Matrix, Matrix) {
        quotient_basis(self.ambient_dim(), self)
    }

    /// Indices of the standard basis vectors spanning the canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim()).filter(|i| !self.pivots.contains(i)).collect()
    }
}

/// The quotient `k^n / sub` with the canonical complement spanned by the standard
/// vectors at non-pivot rows. Returns `(projection, section)` with
/// `projection · section = id` and `ker projection = sub`.
pub fn quotient_basis(ambient_dim: usize, sub: &Subspace) -> (Matrix, Matrix) {
    assert_eq!(ambient_dim, sub.ambient_dim(), "subspace lives in a different ambient space");
    let f = sub.field();
    let comp = sub.complement_indices();
    let kill = Matrix::identity(f, ambient_dim)
        .sub(&sub.basis.mul(&Matrix::identity(f, ambient_dim).select_rows(&sub.pivots)));
    let projection = kill.select_rows(&comp);
    let section = Matrix::identity(f, ambient_dim).select_cols(&comp);
    (projection, section)
}
