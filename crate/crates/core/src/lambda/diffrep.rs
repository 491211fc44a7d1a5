//! Modules over `kQ[ε]`: representations with a square-zero endomorphism.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::kqrep::{submodule, Module, Morphism, Rep, RepMap};
use crate::quiver::Quiver;

/// A kQ-module together with a kQ-endomorphism `ε` with `ε² = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffRep {
    base: Rep,
    eps: Vec<Matrix>,
}

/// A homomorphism of Λ-modules: commutes with the arrows and with `ε`.
pub type DiffRepMap = Morphism<DiffRep>;

impl Module for DiffRep {
    fn quiver(&self) -> &Arc<Quiver> {
        self.base.quiver()
    }

    fn field(&self) -> Field {
        self.base.field()
    }

    fn dims(&self) -> &[usize] {
        self.base.dims()
    }

    fn n_actions(&self) -> usize {
        self.base.n_actions() + self.eps.len()
    }

    fn action(&self, k: usize) -> (usize, usize, &Matrix) {
        let na = self.base.n_actions();
        if k < na {
            self.base.action(k)
        } else {
            (k - na, k - na, &self.eps[k - na])
        }
    }

    fn action_label(&self, k: usize) -> String {
        let na = self.base.n_actions();
        if k < na {
            self.base.action_label(k)
        } else {
            format!("eps at {}", self.quiver().vertex_name(k - na))
        }
    }

    fn with_actions(&self, dims: Vec<usize>, mut mats: Vec<Matrix>) -> Self {
        let eps = mats.split_off(self.base.n_actions());
        DiffRep { base: self.base.with_actions(dims, mats), eps }
    }
}

/// Validates `ε² = 0` at every vertex and `ε` commuting with every arrow.
pub fn make_diffrep(base: Rep, eps: Vec<Matrix>) -> Result<DiffRep> {
    let q = base.quiver().clone();
    if eps.len() != q.n_vertices() {
        return Err(Error::DimensionMismatch(format!("{} eps matrices for {} vertices", eps.len(), q.n_vertices())));
    }
    for (v, e) in eps.iter().enumerate() {
        let d = base.dims()[v];
        if (e.rows(), e.cols()) != (d, d) || e.field() != base.field() {
            return Err(Error::DimensionMismatch(format!(
                "eps at `{}` must be {d}x{d} over {}",
                q.vertex_name(v),
                base.field()
            )));
        }
        if !e.mul(e).is_zero() {
            return Err(Error::EpsNotSquareZero(q.vertex_name(v).to_string()));
        }
    }
    for (k, a) in q.arrows().iter().enumerate() {
        if base.map(k).mul(&eps[a.source]) != eps[a.target].mul(base.map(k)) {
            return Err(Error::EpsNotCommuting(a.name.clone()));
        }
    }
    Ok(DiffRep { base, eps })
}

impl DiffRep {
    /// A kQ-module viewed as a Λ-module annihilated by `ε`.
    pub fn from_rep(base: &Rep) -> DiffRep {
        let f = base.field();
        let eps = base.dims().iter().map(|&d| Matrix::zeros(f, d, d)).collect();
        DiffRep { base: base.clone(), eps }
    }

    pub fn base(&self) -> &Rep {
        &self.base
    }

    pub fn eps(&self, v: usize) -> &Matrix {
        &self.eps[v]
    }

    pub fn eps_matrices(&self) -> &[Matrix] {
        &self.eps
    }

    pub fn has_zero_eps(&self) -> bool {
        self.eps.iter().all(Matrix::is_zero)
    }

    /// `ε` as a kQ-endomorphism of the underlying module.
    pub fn eps_map(&self) -> RepMap {
        Morphism::assemble(self.base.clone(), self.base.clone(), self.eps.clone())
    }

    /// `Ker ε` as a kQ-submodule.
    pub fn eps_kernel(&self) -> (Rep, RepMap) {
        submodule(&self.base, &self.eps.iter().map(Matrix::kernel).collect::<Vec<_>>())
    }

    /// `Im ε = εM` as a kQ-submodule.
    pub fn eps_image(&self) -> (Rep, RepMap) {
        submodule(&self.base, &self.eps_image_subspaces())
    }

    pub fn eps_image_subspaces(&self) -> Vec<Subspace> {
        self.eps.iter().map(Matrix::image).collect()
    }

    /// Perfect: the underlying kQ-module is projective.
    pub fn is_perfect(&self) -> bool {
        self.base.is_projective()
    }
}

impl Morphism<DiffRep> {
    /// The underlying kQ-homomorphism.
    pub fn base_map(&self) -> RepMap {
        Morphism::assemble(self.source().base().clone(), self.target().base().clone(), self.blocks().to_vec())
    }

    /// Lifts a kQ-map between the underlying modules; fails unless it commutes with `ε`.
    pub fn from_base(source: &DiffRep, target: &DiffRep, g: &RepMap) -> Result<DiffRepMap> {
        Morphism::new(source.clone(), target.clone(), g.blocks().to_vec())
    }
}

/// `N[ε] = (N ⊕ N, [[0, 1], [0, 0]])`; the first summand is `ε N[ε]`.
pub fn suspend(n: &Rep) -> DiffRep {
    let f = n.field();
    let maps = n.maps().iter().map(|m| Matrix::block_diag(f, &[m.clone(), m.clone()])).collect();
    let base = n.with_actions(n.dims().iter().map(|d| 2 * d).collect(), maps);
    let eps = n
        .dims()
        .iter()
        .map(|&d| {
            let mut e = Matrix::zeros(f, 2 * d, 2 * d);
            e.set_block(0, d, &Matrix::identity(f, d));
            e
        })
        .collect();
    DiffRep { base, eps }
}

/// `g[ε]: M[ε] → N[ε]`, acting diagonally.
pub fn suspend_map(g: &RepMap) -> DiffRepMap {
    let f = g.field();
    let blocks = g.blocks().iter().map(|b| Matrix::block_diag(f, &[b.clone(), b.clone()])).collect();
    Morphism::assemble(suspend(g.source()), suspend(g.target()), blocks)
}

/// The indecomposable projective Λ-module `P(y) = P₀(y)[ε]`.
pub fn lambda_projective(quiver: &Arc<Quiver>, field: Field, y: usize) -> DiffRep {
    suspend(&Rep::projective(quiver, field, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::catalog;

    const F: Field = Field::Prime(32003);

    #[test]
    fn validation_errors() {
        let a2 = Arc::new(catalog::a2());
        let s = Rep::simple(&a2, F, 0);
        assert!(make_diffrep(s.clone(), vec![Matrix::zeros(F, 1, 1), Matrix::zeros(F, 0, 0)]).is_ok());
        let two = Rep::new(a2.clone(), F, vec![2, 0], vec![Matrix::zeros(F, 0, 2)]).unwrap();
        assert_eq!(
            make_diffrep(two, vec![Matrix::from_i64(F, &[&[1, 0], &[0, 0]]), Matrix::zeros(F, 0, 0)]),
            Err(Error::EpsNotSquareZero("1".into()))
        );
        let p = Rep::projective(&a2, F, 0);
        let bad = vec![Matrix::zeros(F, 1, 1), Matrix::zeros(F, 1, 1)];
        assert!(make_diffrep(p.clone(), bad).is_ok());
        let m = Rep::new(a2.clone(), F, vec![2, 2], vec![Matrix::identity(F, 2)]).unwrap();
        let eps = vec![Matrix::from_i64(F, &[&[0, 1], &[0, 0]]), Matrix::zeros(F, 2, 2)];
        assert_eq!(make_diffrep(m, eps), Err(Error::EpsNotCommuting("a".into())));
    }

    #[test]
    fn kronecker_family_member_is_valid() {
        let k = Arc::new(catalog::kronecker());
        let maps = vec![Matrix::from_i64(F, &[&[1], &[0]]), Matrix::from_i64(F, &[&[0], &[0]])];
        let base = Rep::new(k.clone(), F, vec![2, 1], maps).unwrap();
        let eps = vec![Matrix::from_i64(F, &[&[0, 1], &[0, 0]]), Matrix::zeros(F, 1, 1)];
        assert!(make_diffrep(base, eps).is_ok());
    }

    #[test]
    fn suspension() {
        let a3 = Arc::new(catalog::a3());
        let s = suspend(&Rep::simple(&a3, F, 1));
        assert_eq!(s.dims(), &[0, 2, 0]);
        assert_eq!(s.eps(1), &Matrix::from_i64(F, &[&[0, 1], &[0, 0]]));
        let p = lambda_projective(&a3, F, 0);
        assert_eq!(p.dims(), &[2, 2, 2]);
        assert!(p.is_perfect());
        assert!(!DiffRep::from_rep(&Rep::simple(&a3, F, 0)).is_perfect());
    }
}
