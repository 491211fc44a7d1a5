//! Representations of a quiver: simples, projectives, injectives, radicals and tops.

use std::sync::Arc;

use super::module::{quotient, submodule, Module, Morphism};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::quiver::{Path, Quiver};

/// A kQ-module: one space per vertex and one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    quiver: Arc<Quiver>,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A homomorphism of kQ-modules.
pub type RepMap = Morphism<Rep>;

impl Module for Rep {
    fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    fn field(&self) -> Field {
        self.field
    }

    fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn n_actions(&self) -> usize {
        self.maps.len()
    }

    fn action(&self, k: usize) -> (usize, usize, &Matrix) {
        let a = self.quiver.arrow(k);
        (a.source, a.target, &self.maps[k])
    }

    fn action_label(&self, k: usize) -> String {
        self.quiver.arrow(k).name.clone()
    }

    fn with_actions(&self, dims: Vec<usize>, mats: Vec<Matrix>) -> Self {
        Rep { quiver: self.quiver.clone(), field: self.field, dims, maps: mats }
    }
}

impl Rep {
    /// Checks that every arrow matrix is `dim target × dim source`.
    pub fn new(quiver: Arc<Quiver>, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep> {
        if dims.len() != quiver.n_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.n_vertices()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if (m.rows(), m.cols()) != (dims[a.target], dims[a.source]) || m.field() != field {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` needs a {}x{} matrix over {field}, got {}x{} over {}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols(),
                    m.field()
                )));
            }
        }
        Ok(Rep { quiver, field, dims, maps })
    }

    /// The zero representation.
    pub fn zero(quiver: &Arc<Quiver>, field: Field) -> Rep {
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Rep { quiver: quiver.clone(), field, dims: vec![0; quiver.n_vertices()], maps }
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Dimension vector as signed integers, for root computations.
    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    /// The linear map along a path starting at `start`.
    pub fn path_action(&self, start: usize, path: &Path) -> Matrix {
        path.iter().fold(Matrix::identity(self.field, self.dims[start]), |acc, &a| self.maps[a].mul(&acc))
    }

    /// The simple module at `y`.
    pub fn simple(quiver: &Arc<Quiver>, field: Field, y: usize) -> Rep {
        let mut dims = vec![0; quiver.n_vertices()];
        dims[y] = 1;
        let maps = quiver.arrows().iter().map(|a| Matrix::zeros(field, dims[a.target], dims[a.source])).collect();
        Rep { quiver: quiver.clone(), field, dims, maps }
    }

    /// The indecomposable projective at `y`: basis at `j` the paths `y ⇝ j`, arrows act by appending.
    pub fn projective(quiver: &Arc<Quiver>, field: Field, y: usize) -> Rep {
        let paths = quiver.paths_from(y);
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
                for (c, p) in paths[a.source].iter().enumerate() {
                    let mut q = p.clone();
                    q.push(ai);
                    let r = paths[a.target].iter().position(|x| *x == q).expect("extended path is listed");
                    m.set(r, c, field.one());
                }
                m
            })
            .collect();
        Rep { quiver: quiver.clone(), field, dims, maps }
    }

    /// The indecomposable injective at `y`: basis at `j` dual to the paths `j ⇝ y`.
    pub fn injective(quiver: &Arc<Quiver>, field: Field, y: usize) -> Rep {
        let paths = quiver.paths_to(y);
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                // dual of the map paths(target ⇝ y) → paths(source ⇝ y), r ↦ a·r
                let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
                for (r, p) in paths[a.target].iter().enumerate() {
                    let mut q = vec![ai];
                    q.extend(p);
                    let c = paths[a.source].iter().position(|x| *x == q).expect("extended path is listed");
                    m.set(r, c, field.one());
                }
                m
            })
            .collect();
        Rep { quiver: quiver.clone(), field, dims, maps }
    }

    /// The dual representation over the opposite quiver.
    pub fn dual(&self) -> Rep {
        Rep {
            quiver: Arc::new(self.quiver.opposite()),
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Per-vertex radical: the sum of the images of the arrows ending there.
    pub fn radical_subspaces(&self) -> Vec<Subspace> {
        let mut subs: Vec<Subspace> = self.dims.iter().map(|&d| Subspace::zero(self.field, d)).collect();
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            subs[a.target] = subs[a.target].sum(&m.image());
        }
        subs
    }

    pub fn radical(&self) -> (Rep, RepMap) {
        submodule(self, &self.radical_subspaces())
    }

    pub fn top(&self) -> (Rep, RepMap) {
        quotient(self, &self.radical_subspaces())
    }

    /// Dimension vector of the top.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_subspaces().iter().zip(&self.dims).map(|(s, d)| d - s.dim()).collect()
    }

    /// Whether the module is projective: its top generates a projective of the same dimension.
    pub fn is_projective(&self) -> bool {
        let top = self.top_dims();
        let cover_dim: usize = (0..top.len())
            .filter(|&y| top[y] > 0)
            .map(|y| top[y] * self.quiver.paths_from(y).iter().map(Vec::len).sum::<usize>())
            .sum();
        cover_dim == self.total_dim()
    }

    /// Whether the module is injective (its dual is projective).
    pub fn is_injective(&self) -> bool {
        self.dual().is_projective()
    }
}

impl Morphism<Rep> {
    /// The dual map `D(target) → D(source)` over the opposite quiver.
    pub fn dual(&self) -> RepMap {
        Morphism::assemble(
            self.target().dual(),
            self.source().dual(),
            self.blocks().iter().map(Matrix::transpose).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::super::module::hom_space;
    use super::*;
    use crate::quiver::catalog;

    const F: Field = Field::Prime(32003);

    #[test]
    fn simples_and_projectives() {
        let a2 = Arc::new(catalog::a2());
        let a3 = Arc::new(catalog::a3());
        assert_eq!(Rep::simple(&a2, F, 0).dims(), &[1, 0]);
        assert_eq!(Rep::simple(&a2, F, 1).dims(), &[0, 1]);
        assert_eq!(Rep::simple(&a3, F, 1).dims(), &[0, 1, 0]);
        assert_eq!(Rep::projective(&a3, F, 0).dims(), &[1, 1, 1]);
        assert_eq!(Rep::projective(&a3, F, 2), Rep::simple(&a3, F, 2));
        assert_eq!(Rep::injective(&a3, F, 0), Rep::simple(&a3, F, 0));
        assert_eq!(Rep::injective(&a3, F, 2).dims(), &[1, 1, 1]);
    }

    #[test]
    fn injective_is_dual_of_opposite_projective() {
        let d4 = Arc::new(catalog::d4());
        for y in 0..4 {
            let op = Arc::new(d4.opposite());
            assert_eq!(Rep::projective(&op, F, y).dual(), Rep::injective(&d4, F, y));
        }
        let k = Arc::new(catalog::kronecker());
        assert_eq!(Rep::injective(&k, F, 0).dims(), &[1, 2]);
    }

    #[test]
    fn hom_examples() {
        let a2 = Arc::new(catalog::a2());
        let a3 = Arc::new(catalog::a3());
        assert_eq!(hom_space(&Rep::simple(&a2, F, 0), &Rep::simple(&a2, F, 1)).unwrap().len(), 0);
        let p1 = Rep::projective(&a3, F, 0);
        assert_eq!(hom_space(&p1, &p1).unwrap().len(), 1);
        assert_eq!(hom_space(&Rep::projective(&a2, F, 1), &Rep::projective(&a2, F, 0)).unwrap().len(), 1);
        let other = Rep::simple(&a2, Field::Rationals, 0);
        assert_eq!(hom_space(&Rep::simple(&a2, F, 0), &other), Err(Error::FieldMismatch));
        assert_eq!(hom_space(&Rep::simple(&a2, F, 0), &Rep::simple(&a3, F, 0)), Err(Error::QuiverMismatch));
    }

    #[test]
    fn radical_and_top() {
        let a2 = Arc::new(catalog::a2());
        let a3 = Arc::new(catalog::a3());
        assert!(Rep::simple(&a2, F, 0).radical().0.is_zero());
        let (rad, incl) = Rep::projective(&a2, F, 0).radical();
        assert_eq!(rad.dims(), &[0, 1]);
        assert!(incl.is_injective());
        assert_eq!(rad, Rep::projective(&a2, F, 1));
        let (top, proj) = Rep::projective(&a3, F, 0).top();
        assert_eq!(top, Rep::simple(&a3, F, 0));
        assert!(proj.is_surjective());
    }

    #[test]
    fn projectivity() {
        let a3 = Arc::new(catalog::a3());
        assert!(Rep::projective(&a3, F, 0).is_projective());
        assert!(!Rep::simple(&a3, F, 0).is_projective());
        assert!(Rep::simple(&a3, F, 0).is_injective());
        assert!(Rep::zero(&a3, F).is_projective());
    }

    #[test]
    fn morphism_validation() {
        let a2 = Arc::new(catalog::a2());
        let p1 = Rep::projective(&a2, F, 0);
        let s1 = Rep::simple(&a2, F, 0);
        // the projection P(1) → S(1) commutes, the inclusion S(2) → ... check a bad one
        assert!(Morphism::new(p1.clone(), s1.clone(), vec![Matrix::identity(F, 1), Matrix::zeros(F, 0, 1)]).is_ok());
        assert_eq!(
            Morphism::new(s1.clone(), p1.clone(), vec![Matrix::identity(F, 1), Matrix::zeros(F, 1, 0)]),
            Err(Error::NotAMorphism("a".into()))
        );
    }
}
