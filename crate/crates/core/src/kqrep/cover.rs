//! Direct sums of indecomposable projectives, minimal projective covers and syzygies.

use std::sync::Arc;

use super::module::{direct_sum, Module, Morphism};
use super::rep::{Rep, RepMap};
use crate::exactlin::{Field, Matrix};
use crate::quiver::{Path, Quiver};

/// `⊕_k P₀(y_k)` together with the path bases of its summands.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    pub module: Rep,
    /// The vertex `y_k` of each summand.
    pub tops: Vec<usize>,
    /// `offsets[k][j]`: first coordinate of summand `k` at vertex `j`.
    pub offsets: Vec<Vec<usize>>,
    /// `paths[k][j]`: the basis paths `y_k ⇝ j` of summand `k`.
    pub paths: Vec<Vec<Vec<Path>>>,
}

impl ProjectiveSum {
    pub fn new(quiver: &Arc<Quiver>, field: Field, tops: Vec<usize>) -> ProjectiveSum {
        let n = quiver.n_vertices();
        let module = if tops.is_empty() {
            Rep::zero(quiver, field)
        } else {
            direct_sum(&tops.iter().map(|&y| Rep::projective(quiver, field, y)).collect::<Vec<_>>()).module
        };
        let paths: Vec<Vec<Vec<Path>>> = tops.iter().map(|&y| quiver.paths_from(y)).collect();
        let mut running = vec![0; n];
        let offsets = paths
            .iter()
            .map(|ps| {
                let here = running.clone();
                for j in 0..n {
                    running[j] += ps[j].len();
                }
                here
            })
            .collect();
        ProjectiveSum { module, tops, offsets, paths }
    }

    /// The coordinate of the generator (trivial path) of summand `k` at its top vertex.
    pub fn generator_index(&self, k: usize) -> usize {
        self.offsets[k][self.tops[k]]
    }

    /// The homomorphism to `target` sending the generator of summand `k` to `images[k]`
    /// (a column vector at vertex `tops[k]`).
    pub fn map_to(&self, target: &Rep, images: &[Matrix]) -> RepMap {
        let f = target.field();
        let n = target.dims().len();
        let mut blocks: Vec<Matrix> =
            (0..n).map(|j| Matrix::zeros(f, target.dims()[j], self.module.dims()[j])).collect();
        for (k, img) in images.iter().enumerate() {
            let y = self.tops[k];
            for j in 0..n {
                for (i, p) in self.paths[k][j].iter().enumerate() {
                    blocks[j].set_block(0, self.offsets[k][j] + i, &target.path_action(y, p).mul(img));
                }
            }
        }
        Morphism::assemble(self.module.clone(), target.clone(), blocks)
    }

    /// Splits a vector at vertex `j` into per-summand coefficients over the path bases.
    pub fn components(&self, j: usize, v: &Matrix) -> Vec<Matrix> {
        (0..self.tops.len())
            .map(|k| {
                let idx: Vec<usize> = (0..self.paths[k][j].len()).map(|i| self.offsets[k][j] + i).collect();
                v.select_rows(&idx)
            })
            .collect()
    }
}

/// A minimal projective cover `0 → Ω → P → M → 0`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub cover: ProjectiveSum,
    pub map: RepMap,
    pub syzygy: Rep,
    pub inclusion: RepMap,
}

/// Builds the cover from the top of `m`, so it is minimal by construction; the syzygy
/// is asserted to be projective.
pub fn projective_cover(m: &Rep) -> ProjectiveCover {
    let rad = m.radical_subspaces();
    let mut tops = Vec::new();
    let mut images = Vec::new();
    for (y, r) in rad.iter().enumerate() {
        let (_, section) = r.quotient_basis();
        for c in 0..section.cols() {
            tops.push(y);
            images.push(section.col(c));
        }
    }
    let cover = ProjectiveSum::new(m.quiver(), m.field(), tops);
    let map = cover.map_to(m, &images);
    debug_assert!(map.is_surjective());
    let (syzygy, inclusion) = map.kernel();
    assert!(syzygy.is_projective(), "syzygy over a path algebra must be projective");
    ProjectiveCover { cover, map, syzygy, inclusion }
}

/// A minimal projective presentation `P₁ → P₀ → M → 0` with `P₁ → Ω` an isomorphism.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: ProjectiveCover,
    pub p1: ProjectiveSum,
    /// `P₁ → P₀`.
    pub map: RepMap,
    /// `P₁ → Ω`, an isomorphism.
    pub onto_syzygy: RepMap,
}

pub fn presentation(m: &Rep) -> Presentation {
    let p0 = projective_cover(m);
    let inner = projective_cover(&p0.syzygy);
    debug_assert!(inner.map.is_iso());
    let map = p0.inclusion.compose(&inner.map);
    Presentation { p1: inner.cover, map, onto_syzygy: inner.map, p0 }
}

#[cfg(test)]
mod tests {
    use super::super::iso::iso_test;
    use super::*;
    use crate::quiver::catalog;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const F: Field = Field::Prime(32003);

    #[test]
    fn cover_examples() {
        let a2 = Arc::new(catalog::a2());
        let a3 = Arc::new(catalog::a3());
        let p = Rep::projective(&a3, F, 1);
        let c = projective_cover(&p);
        assert_eq!(c.cover.module, p);
        assert!(c.syzygy.is_zero());

        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = projective_cover(&Rep::simple(&a2, F, 0));
        assert_eq!(c.cover.module, Rep::projective(&a2, F, 0));
        assert!(iso_test(&c.syzygy, &Rep::projective(&a2, F, 1), &mut rng, 8).is_some());

        let i3 = Rep::injective(&a3, F, 2);
        let c = projective_cover(&i3);
        assert_eq!(c.cover.module.total_dim(), i3.total_dim() + c.syzygy.total_dim());
        assert_eq!(c.cover.tops, vec![0]);
    }

    /// Random representations of the D4 quiver, given by random arrow matrices.
    pub(crate) fn random_rep(q: &Arc<Quiver>, dims: &[usize], seed: u64) -> Rep {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let maps = q.arrows().iter().map(|a| Matrix::random(F, dims[a.target], dims[a.source], &mut rng)).collect();
        Rep::new(q.clone(), F, dims.to_vec(), maps).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn cover_exactness(dims in prop::collection::vec(0usize..3, 4), seed in 0u64..10_000) {
            let q = Arc::new(catalog::d4());
            let m = random_rep(&q, &dims, seed);
            let c = projective_cover(&m);
            prop_assert!(c.map.is_surjective());
            prop_assert!(c.syzygy.is_projective());
            prop_assert_eq!(c.cover.module.total_dim(), m.total_dim() + c.syzygy.total_dim());
            prop_assert!(c.map.compose(&c.inclusion).is_zero());
        }

        #[test]
        fn yoneda_dimension(dims in prop::collection::vec(0usize..3, 4), seed in 0u64..10_000, y in 0usize..4) {
            let q = Arc::new(catalog::d4());
            let m = random_rep(&q, &dims, seed);
            let h = super::super::module::hom_space(&Rep::projective(&q, F, y), &m).unwrap();
            prop_assert_eq!(h.len(), m.dims()[y]);
        }
    }
}
