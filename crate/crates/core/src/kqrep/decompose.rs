//! Krull–Schmidt decomposition by randomized Fitting splitting.

use std::fmt;

use rand::Rng;

use super::iso::iso_test;
use super::module::{combine, direct_sum, hom, hstack_maps, submodule, Module, Morphism};
use crate::exactlin::{Matrix, Poly};

/// How firmly the summands are known to be indecomposable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every summand has a local endomorphism ring, proved by linear algebra.
    Certified,
    /// Some summand was only found unsplittable after this many random attempts.
    Probabilistic { trials: usize },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Certified => f.write_str("certified"),
            Certificate::Probabilistic { trials } => write!(f, "probabilistic({trials})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport<M: Module> {
    /// Pairwise non-isomorphic summands with multiplicities.
    pub summands: Vec<(M, usize)>,
    pub certificate: Certificate,
    /// The summands in the order they were split off, with repetition.
    pub pieces: Vec<M>,
    /// Inclusion of each piece into the input.
    pub inclusions: Vec<Morphism<M>>,
    /// The isomorphism `⊕ pieces → input`.
    pub iso: Morphism<M>,
}

impl<M: Module> DecompositionReport<M> {
    pub fn is_indecomposable(&self) -> bool {
        self.pieces.len() == 1
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }
}

/// Whether the endomorphism ring is provably local: either it is one-dimensional, or
/// (when the characteristic does not divide the dimension) the trace-zero
/// endomorphisms form a nilpotent complement of the scalars.
pub fn local_certificate<M: Module>(m: &M, end: &[Morphism<M>]) -> bool {
    if end.len() <= 1 {
        return true;
    }
    let field = m.field();
    let p = field.characteristic();
    if p != 0 && (m.total_dim() as u64).is_multiple_of(p) {
        return false;
    }
    let traces = Matrix::from_rows(field, vec![end.iter().map(|f| total_trace(f)).collect()], end.len());
    let kb = traces.kernel_basis();
    let nil: Vec<Morphism<M>> = (0..kb.cols())
        .map(|j| {
            let c: Vec<_> = (0..kb.rows()).map(|i| kb.get(i, j).clone()).collect();
            combine(m, m, end, &c)
        })
        .collect();
    let mut power = nil.clone();
    for _ in 0..=end.len() {
        let products: Vec<Morphism<M>> = power.iter().flat_map(|a| nil.iter().map(move |b| a.compose(b))).collect();
        power = span_basis(&products);
        if power.is_empty() {
            return true;
        }
    }
    false
}

fn total_trace<M: Module>(f: &Morphism<M>) -> crate::exactlin::Scalar {
    let field = f.field();
    f.blocks().iter().fold(field.zero(), |acc, b| field.add(&acc, &b.trace()))
}

/// A linearly independent subfamily spanning the same space.
fn span_basis<M: Module>(maps: &[Morphism<M>]) -> Vec<Morphism<M>> {
    let Some(first) = maps.first() else { return Vec::new() };
    let cols: Vec<Matrix> = maps.iter().map(Morphism::to_vector).collect();
    let (_, pivots) = Matrix::hcat(first.field(), first.to_vector().rows(), &cols).rref();
    pivots.into_iter().map(|i| maps[i].clone()).collect()
}

fn char_poly<M: Module>(theta: &Morphism<M>) -> Poly {
    theta.blocks().iter().fold(Poly::one(theta.field()), |acc, b| acc.mul(&b.char_poly()))
}

/// Tries to split `m` along a Fitting decomposition of some endomorphism.
fn try_split<M: Module, R: Rng + ?Sized>(
    m: &M,
    end: &[Morphism<M>],
    rng: &mut R,
    trials: usize,
) -> Option<[(M, Morphism<M>); 2]> {
    let field = m.field();
    let random = (0..trials).map(|_| {
        let c: Vec<_> = end.iter().map(|_| field.random(&mut *rng)).collect();
        c
    });
    let random: Vec<Vec<_>> = random.collect();
    let candidates = end.iter().cloned().chain(random.iter().map(|c| combine(m, m, end, c)));
    for theta in candidates {
        let Some(f) = char_poly(&theta).splitting_factor(rng) else { continue };
        let phi: Vec<Matrix> =
            theta.blocks().iter().zip(m.dims()).map(|(b, &d)| b.eval_poly(&f).pow(d as u64)).collect();
        let kers: Vec<_> = phi.iter().map(Matrix::kernel).collect();
        let ims: Vec<_> = phi.iter().map(Matrix::image).collect();
        if kers.iter().all(|s| s.is_zero()) || ims.iter().all(|s| s.is_zero()) {
            continue;
        }
        return Some([submodule(m, &kers), submodule(m, &ims)]);
    }
    None
}

fn split_recursive<M: Module, R: Rng + ?Sized>(
    m: &M,
    rng: &mut R,
    trials: usize,
    out: &mut Vec<(M, Morphism<M>, bool)>,
) {
    let end = hom(m, m);
    if local_certificate(m, &end) {
        out.push((m.clone(), Morphism::identity(m), true));
        return;
    }
    match try_split(m, &end, rng, trials) {
        None => out.push((m.clone(), Morphism::identity(m), false)),
        Some(parts) => {
            for (sub, incl) in parts {
                let mut inner = Vec::new();
                split_recursive(&sub, rng, trials, &mut inner);
                out.extend(inner.into_iter().map(|(p, i, c)| (p, incl.compose(&i), c)));
            }
        }
    }
}

/// Decomposes `m` into indecomposables with an explicit isomorphism from their sum.
pub fn decompose<M: Module, R: Rng + ?Sized>(m: &M, rng: &mut R, trials: usize) -> DecompositionReport<M> {
    if m.is_zero() {
        return DecompositionReport {
            summands: Vec::new(),
            certificate: Certificate::Certified,
            pieces: Vec::new(),
            inclusions: Vec::new(),
            iso: Morphism::identity(m),
        };
    }
    let mut found = Vec::new();
    split_recursive(m, rng, trials, &mut found);
    let certified = found.iter().all(|(_, _, c)| *c);
    let pieces: Vec<M> = found.iter().map(|(p, _, _)| p.clone()).collect();
    let inclusions: Vec<Morphism<M>> = found.into_iter().map(|(_, i, _)| i).collect();
    let sum = direct_sum(&pieces);
    let iso = hstack_maps(&sum, m, &inclusions);
    debug_assert!(iso.is_iso());
    let mut summands: Vec<(M, usize)> = Vec::new();
    for p in &pieces {
        match summands.iter_mut().find(|(s, _)| iso_test(s, p, rng, trials).is_some()) {
            Some((_, k)) => *k += 1,
            None => summands.push((p.clone(), 1)),
        }
    }
    DecompositionReport {
        summands,
        certificate: if certified { Certificate::Certified } else { Certificate::Probabilistic { trials } },
        pieces,
        inclusions,
        iso,
    }
}

pub fn is_indecomposable<M: Module, R: Rng + ?Sized>(m: &M, rng: &mut R, trials: usize) -> bool {
    !m.is_zero() && decompose(m, rng, trials).is_indecomposable()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::module::direct_sum;
    use super::super::rep::Rep;
    use super::*;
    use crate::exactlin::Field;
    use crate::quiver::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const F: Field = Field::Prime(32003);

    #[test]
    fn decomposition_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a2 = Arc::new(catalog::a2());
        let a3 = Arc::new(catalog::a3());
        let s1 = Rep::simple(&a2, F, 0);
        let r = decompose(&direct_sum(&[s1.clone(), s1.clone()]).module, &mut rng, 16);
        assert_eq!(r.summands.len(), 1);
        assert_eq!(r.summands[0].1, 2);
        assert_eq!(r.summands[0].0, s1);
        assert_eq!(r.certificate, Certificate::Certified);
        assert!(r.iso.is_iso());

        let p = Rep::projective(&a3, F, 0);
        let r = decompose(&p, &mut rng, 16);
        assert!(r.is_indecomposable());
        assert_eq!(r.certificate, Certificate::Certified);

        // a nonsplit extension of S(1) by S(2) on A2, written in a scrambled basis
        let m = Rep::new(a2.clone(), F, vec![1, 1], vec![Matrix::from_i64(F, &[&[5]])]).unwrap();
        let r = decompose(&m, &mut rng, 16);
        assert!(r.is_indecomposable());
        assert!(iso_test(&m, &Rep::projective(&a2, F, 0), &mut rng, 16).is_some());
    }

    #[test]
    fn mixed_sum_splits() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let d4 = Arc::new(catalog::d4());
        let parts: Vec<Rep> = vec![
            Rep::injective(&d4, F, 0),
            Rep::simple(&d4, F, 1),
            Rep::injective(&d4, F, 0),
            Rep::projective(&d4, F, 2),
        ];
        let r = decompose(&direct_sum(&parts).module, &mut rng, 32);
        assert_eq!(r.pieces.len(), 4);
        assert_eq!(r.summands.len(), 3);
        assert_eq!(r.certificate, Certificate::Certified);
        assert!(r.iso.is_iso());
    }

    #[test]
    fn field_characteristic_dividing_dimension() {
        // over F_2 the trace test cannot be used for a 2-dimensional module, so the
        // split must come from the Fitting step
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f2 = Field::Prime(2);
        let a2 = Arc::new(catalog::a2());
        let s = Rep::simple(&a2, f2, 1);
        let r = decompose(&direct_sum(&[s.clone(), s]).module, &mut rng, 32);
        assert_eq!(r.pieces.len(), 2);
    }
}
