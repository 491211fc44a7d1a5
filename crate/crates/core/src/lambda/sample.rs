//! Random modules for property checks and the randomized verification suites.

use std::sync::Arc;

use rand::Rng;

use crate::exactlin::{Field, Matrix};
use crate::kqrep::{combine, direct_sum, hom, Module, Morphism, Rep};
use crate::quiver::Quiver;

use super::diffrep::{lambda_projective, make_diffrep, DiffRep};

/// A representation with dimensions in `0..=max_dim` and uniformly random arrow matrices.
pub fn random_rep<R: Rng + ?Sized>(q: &Arc<Quiver>, field: Field, rng: &mut R, max_dim: usize) -> Rep {
    let dims: Vec<usize> = (0..q.n_vertices()).map(|_| rng.gen_range(0..=max_dim)).collect();
    let maps = q.arrows().iter().map(|a| Matrix::random(field, dims[a.target], dims[a.source], rng)).collect();
    Rep::new(q.clone(), field, dims, maps).expect("random matrices have the right shapes")
}

/// A random sum of one or two indecomposable projective kQ-modules (possibly zero).
fn random_projective<R: Rng + ?Sized>(q: &Arc<Quiver>, field: Field, rng: &mut R, max_summands: usize) -> Rep {
    let k = rng.gen_range(0..=max_summands);
    if k == 0 {
        return Rep::zero(q, field);
    }
    let parts: Vec<Rep> = (0..k).map(|_| Rep::projective(q, field, rng.gen_range(0..q.n_vertices()))).collect();
    direct_sum(&parts).module
}

fn random_hom<M: Module, R: Rng + ?Sized>(a: &M, b: &M, rng: &mut R) -> Morphism<M> {
    let basis = hom(a, b);
    let coeffs: Vec<_> = basis.iter().map(|_| a.field().random(rng)).collect();
    combine(a, b, &basis, &coeffs)
}

fn random_lambda_projective<R: Rng + ?Sized>(q: &Arc<Quiver>, field: Field, rng: &mut R, k: usize) -> DiffRep {
    let parts: Vec<DiffRep> = (0..k).map(|_| lambda_projective(q, field, rng.gen_range(0..q.n_vertices()))).collect();
    direct_sum(&parts).module
}

/// `(A ⊕ B, [[0, u], [0, 0]])` for a random kQ-map `u: B → A`.
fn eps_extension<R: Rng + ?Sized>(a: &Rep, b: &Rep, rng: &mut R) -> DiffRep {
    let f = a.field();
    let u = random_hom(b, a, rng);
    let base = direct_sum(&[a.clone(), b.clone()]).module;
    let eps = (0..a.dims().len())
        .map(|v| {
            let (da, db) = (a.dims()[v], b.dims()[v]);
            let mut e = Matrix::zeros(f, da + db, da + db);
            e.set_block(0, da, u.block(v));
            e
        })
        .collect();
    make_diffrep(base, eps).expect("u is kQ-linear")
}

/// Rewrites a module in a random basis at every vertex.
pub fn scramble<R: Rng + ?Sized>(m: &DiffRep, rng: &mut R) -> DiffRep {
    let f = m.field();
    let g: Vec<Matrix> = m
        .dims()
        .iter()
        .map(|&d| loop {
            let g = Matrix::random(f, d, d, rng);
            if g.is_invertible() {
                break g;
            }
        })
        .collect();
    let mats = (0..m.n_actions())
        .map(|k| {
            let (s, t, a) = m.action(k);
            g[t].mul(a).mul(&g[s].inverse().expect("invertible"))
        })
        .collect();
    m.with_actions(m.dims().to_vec(), mats)
}

/// A random perfect module: an ε-extension of projective kQ-modules in a random basis.
pub fn random_perfect<R: Rng + ?Sized>(q: &Arc<Quiver>, field: Field, rng: &mut R, max_summands: usize) -> DiffRep {
    let a = random_projective(q, field, rng, max_summands);
    let b = random_projective(q, field, rng, max_summands);
    let m = eps_extension(&a, &b, rng);
    scramble(&m, rng)
}

/// A random Λ-module drawn from three families: ε-extensions of arbitrary
/// representations, cokernels of random maps between projective Λ-modules, and
/// random perfect modules.
pub fn random_diffrep<R: Rng + ?Sized>(q: &Arc<Quiver>, field: Field, rng: &mut R, max_dim: usize) -> DiffRep {
    let m = match rng.gen_range(0..3) {
        0 => {
            let a = random_rep(q, field, rng, max_dim);
            let b = random_rep(q, field, rng, max_dim);
            eps_extension(&a, &b, rng)
        }
        1 => {
            let k = rng.gen_range(1..=2);
            let src = random_lambda_projective(q, field, rng, 1);
            let tgt = random_lambda_projective(q, field, rng, k);
            random_hom(&src, &tgt, rng).cokernel().0
        }
        _ => random_perfect(q, field, rng, 2),
    };
    scramble(&m, rng)
}
