//! Homology `H(M) = Ker ε / Im ε` and its functoriality.

use crate::exactlin::{quotient_basis, Matrix, Subspace};
use crate::kqrep::{Module, Morphism, Rep, RepMap};

use super::diffrep::{DiffRep, DiffRepMap};

/// `H(M)` with the data to move between `Ker ε ⊆ M` and `H(M)`.
#[derive(Clone, Debug)]
pub struct Homology {
    pub module: Rep,
    kernel: Vec<Subspace>,
    /// `Ker ε` coordinates → homology coordinates.
    project: Vec<Matrix>,
    /// Homology coordinates → `Ker ε` coordinates; a section of `project`.
    section: Vec<Matrix>,
}

impl Homology {
    /// Class of the cycles in the columns of `x` (vectors of `M` at `v`); panics on non-cycles.
    pub fn project(&self, v: usize, x: &Matrix) -> Matrix {
        let c = self.kernel[v].coordinates(x).expect("vector is not a cycle");
        self.project[v].mul(&c)
    }

    /// A cycle representing each class in the columns of `h`.
    pub fn lift(&self, v: usize, h: &Matrix) -> Matrix {
        self.kernel[v].basis().mul(&self.section[v]).mul(h)
    }

    pub fn cycles(&self, v: usize) -> &Subspace {
        &self.kernel[v]
    }
}

pub fn homology(m: &DiffRep) -> Homology {
    let q = m.quiver().clone();
    let f = m.field();
    let kernel: Vec<Subspace> = m.eps_matrices().iter().map(Matrix::kernel).collect();
    let (project, section): (Vec<Matrix>, Vec<Matrix>) = kernel
        .iter()
        .zip(m.eps_matrices())
        .map(|(k, e)| {
            let boundaries = k.coordinates(&e.image().basis().clone()).expect("ε² = 0");
            quotient_basis(k.dim(), &Subspace::from_span(&boundaries))
        })
        .unzip();
    let dims: Vec<usize> = project.iter().map(Matrix::rows).collect();
    let maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let lifted = kernel[a.source].basis().mul(&section[a.source]);
            let image = m.base().map(k).mul(&lifted);
            project[a.target].mul(&kernel[a.target].coordinates(&image).expect("arrows preserve cycles"))
        })
        .collect();
    let module = Rep::new(q, f, dims, maps).expect("homology is a representation");
    Homology { module, kernel, project, section }
}

/// `H(g)` for a Λ-homomorphism `g`.
pub fn homology_map(g: &DiffRepMap) -> RepMap {
    let hs = homology(g.source());
    let ht = homology(g.target());
    homology_map_with(g, &hs, &ht)
}

/// `H(g)` using precomputed homology data of source and target.
pub fn homology_map_with(g: &DiffRepMap, hs: &Homology, ht: &Homology) -> RepMap {
    let blocks = (0..g.source().dims().len())
        .map(|v| {
            let cycles = hs.lift(v, &Matrix::identity(g.field(), hs.module.dims()[v]));
            ht.project(v, &g.block(v).mul(&cycles))
        })
        .collect();
    Morphism::new(hs.module.clone(), ht.module.clone(), blocks).expect("homology is functorial")
}

/// A ghost map: one inducing zero on homology.
pub fn is_ghost(g: &DiffRepMap) -> bool {
    homology_map(g).is_zero()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::diffrep::{lambda_projective, make_diffrep, suspend};
    use super::*;
    use crate::exactlin::Field;
    use crate::kqrep::hom_space;
    use crate::quiver::catalog;

    const F: Field = Field::Prime(32003);

    #[test]
    fn homology_of_basic_modules() {
        let a3 = Arc::new(catalog::a3());
        let s = Rep::simple(&a3, F, 1);
        assert_eq!(homology(&DiffRep::from_rep(&s)).module, s);
        assert!(homology(&suspend(&s)).module.is_zero());
        assert!(homology(&lambda_projective(&a3, F, 0)).module.is_zero());
    }

    #[test]
    fn socle_example_on_two_sources() {
        // k → A ← k with both maps into the socle of A = k[ε]/(ε²)
        let q = Arc::new(catalog::a3_two_sources());
        let col = Matrix::from_i64(F, &[&[1], &[0]]);
        let base = Rep::new(q.clone(), F, vec![1, 2, 1], vec![col.clone(), col]).unwrap();
        let eps = vec![Matrix::zeros(F, 1, 1), Matrix::from_i64(F, &[&[0, 1], &[0, 0]]), Matrix::zeros(F, 1, 1)];
        let m = make_diffrep(base, eps).unwrap();
        let h = homology(&m).module;
        assert_eq!(h.dims(), &[1, 0, 1]);
        assert!(!m.is_perfect());
    }

    #[test]
    fn functoriality_and_ghosts() {
        let a2 = Arc::new(catalog::a2());
        let p = lambda_projective(&a2, F, 0);
        let s = DiffRep::from_rep(&Rep::simple(&a2, F, 0));
        for g in hom_space(&p, &s).unwrap() {
            assert!(is_ghost(&g));
        }
        let id = Morphism::identity(&s);
        assert!(homology_map(&id).is_iso());
        assert!(!is_ghost(&id));
        let two = Morphism::identity(&s).add(&id);
        assert_eq!(homology_map(&two), homology_map(&id).add(&homology_map(&id)));
    }
}
