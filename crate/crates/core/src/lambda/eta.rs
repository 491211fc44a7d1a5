//! The minimal right approximation `ηN → N` by a perfect module, and strongly
//! Gorenstein-projective witnesses.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::kqrep::{decompose, direct_sum, iso_test, projective_cover, Module, Morphism, ProjectiveCover, Rep};

use super::diffrep::{suspend, DiffRep, DiffRepMap};
use super::homology::homology;

/// `ηN` with its approximation map and the data of the pushout it comes from.
#[derive(Clone, Debug)]
pub struct Eta {
    pub module: DiffRep,
    /// The approximation `ηN → N` (with `N` viewed as a Λ-module with `ε = 0`).
    pub approx: DiffRepMap,
    /// The projective cover `0 → Ω₀N → P₀N → N → 0` used in the construction.
    pub cover: ProjectiveCover,
    /// The canonical map `ηN → Ω₀N` (with `ε = 0` on the target).
    pub to_syzygy: DiffRepMap,
}

/// The pushout of `P₀N ← Ω₀N → (Ω₀N)[ε]`, written in the coordinates `P₀N ⊕ Ω₀N`
/// obtained by using the relation to eliminate the socle copy of `Ω₀N`; there
/// `ε(p, b) = (u b, 0)` and the approximation is `(p, b) ↦ π p`.
pub(crate) fn pushout_model(n: &Rep) -> Eta {
    let cover = projective_cover(n);
    let f = n.field();
    let p0 = cover.cover.module.clone();
    let omega = cover.syzygy.clone();
    let base = direct_sum(&[p0.clone(), omega.clone()]).module;
    let eps: Vec<Matrix> = (0..n.dims().len())
        .map(|v| {
            let (dp, dw) = (p0.dims()[v], omega.dims()[v]);
            let mut e = Matrix::zeros(f, dp + dw, dp + dw);
            e.set_block(0, dp, cover.inclusion.block(v));
            e
        })
        .collect();
    let module = super::diffrep::make_diffrep(base, eps).expect("the pushout is a Λ-module");
    let target = DiffRep::from_rep(n);
    let approx = (0..n.dims().len())
        .map(|v| cover.map.block(v).hstack(&Matrix::zeros(f, n.dims()[v], omega.dims()[v])))
        .collect();
    let approx = Morphism::new(module.clone(), target, approx).expect("approximation is Λ-linear");
    let to_syzygy = (0..n.dims().len())
        .map(|v| Matrix::zeros(f, omega.dims()[v], p0.dims()[v]).hstack(&Matrix::identity(f, omega.dims()[v])))
        .collect();
    let to_syzygy = Morphism::new(module.clone(), DiffRep::from_rep(&omega), to_syzygy).expect("Λ-linear");
    Eta { module, approx, cover, to_syzygy }
}

/// `ηN`; for projective `N` this is `N` itself with `ε = 0`.
pub fn eta(n: &Rep) -> Eta {
    if n.is_projective() {
        let cover = projective_cover(n);
        let module = DiffRep::from_rep(n);
        let to_syzygy = Morphism::zero(&module, &DiffRep::from_rep(&cover.syzygy));
        return Eta { approx: Morphism::identity(&module), module, cover, to_syzygy };
    }
    pushout_model(n)
}

/// A projective Λ-module `P` with a square-zero endomorphism whose kernel equals its image,
/// and an embedding of the witnessed module onto that kernel.
#[derive(Clone, Debug)]
pub struct SgpWitness {
    pub p_module: DiffRep,
    pub f: DiffRepMap,
    /// Injective map from the witnessed module onto `Ker f`.
    pub kernel_iso: DiffRepMap,
}

impl SgpWitness {
    /// `f² = 0`, `Im f = Ker f`, and `kernel_iso` is injective onto `Ker f`.
    pub fn verify(&self) -> bool {
        let total = self.p_module.total_dim();
        let r = self.f.rank();
        self.f.compose(&self.f).is_zero()
            && 2 * r == total
            && self.kernel_iso.is_injective()
            && self.f.compose(&self.kernel_iso).is_zero()
            && self.kernel_iso.rank() == total - r
    }
}

/// The witness for `ηN`: `P = (Ω₀N)[ε] ⊕ (P₀N)[ε]`, `f = [[−ε, 0], [u[ε], ε]]`, and
/// `ηN ≅ Ker f` via `(p, b) ↦ ((b, 0), (−p, −u b))`.
fn eta_witness(eta: &Eta) -> SgpWitness {
    let fld = eta.module.field();
    let omega = &eta.cover.syzygy;
    let p0 = &eta.cover.cover.module;
    let sum = direct_sum(&[suspend(omega), suspend(p0)]);
    let n = omega.dims().len();
    let mut f_blocks = Vec::with_capacity(n);
    let mut k_blocks = Vec::with_capacity(n);
    for v in 0..n {
        let (w, p) = (omega.dims()[v], p0.dims()[v]);
        let u = eta.cover.inclusion.block(v);
        let id_w = Matrix::identity(fld, w);
        let id_p = Matrix::identity(fld, p);
        // coordinates (ω₁, ω₂, p₁, p₂) ↦ (−ω₂, 0, u ω₁ + p₂, u ω₂)
        let mut f = Matrix::zeros(fld, 2 * (w + p), 2 * (w + p));
        f.set_block(0, w, &id_w.neg());
        f.set_block(2 * w, 0, u);
        f.set_block(2 * w, 2 * w + p, &id_p);
        f.set_block(2 * w + p, w, u);
        f_blocks.push(f);
        // (p, b) ↦ (b, 0, −p, −u b)
        let mut k = Matrix::zeros(fld, 2 * (w + p), p + w);
        k.set_block(0, p, &id_w);
        k.set_block(2 * w, 0, &id_p.neg());
        k.set_block(2 * w + p, p, &u.neg());
        k_blocks.push(k);
    }
    let f = Morphism::new(sum.module.clone(), sum.module.clone(), f_blocks).expect("f is Λ-linear");
    let kernel_iso = Morphism::new(eta.module.clone(), sum.module.clone(), k_blocks).expect("Λ-linear");
    SgpWitness { p_module: sum.module, f, kernel_iso }
}

/// The witness `P = M ⊕ M`, `f(a, b) = (0, a)` for a projective Λ-module `M`.
fn projective_witness(m: &DiffRep) -> SgpWitness {
    let sum = direct_sum(&[m.clone(), m.clone()]);
    let f = sum.inclusions[1].compose(&sum.projections[0]);
    SgpWitness { kernel_iso: sum.inclusions[1].clone(), f, p_module: sum.module }
}

/// Realizes a perfect module as the kernel (equal to the image) of a square-zero
/// endomorphism of a projective Λ-module. Summands are handled separately: projective
/// ones directly, the others through `ηH(M) ≅ M`.
pub fn sgp_witness<R: Rng + ?Sized>(m: &DiffRep, rng: &mut R, trials: usize) -> Result<SgpWitness> {
    if !m.is_perfect() {
        return Err(Error::NotPerfect);
    }
    if m.is_zero() || homology(m).module.is_zero() {
        return Ok(projective_witness(m));
    }
    let report = decompose(m, rng, trials);
    let mut parts = Vec::with_capacity(report.pieces.len());
    for piece in &report.pieces {
        let h = homology(piece).module;
        if h.is_zero() {
            parts.push(projective_witness(piece));
            continue;
        }
        let model = pushout_model(&h);
        let iso = iso_test(piece, &model.module, rng, trials).ok_or(Error::NotIsomorphic)?;
        let w = eta_witness(&model);
        parts.push(SgpWitness { kernel_iso: w.kernel_iso.compose(&iso), ..w });
    }
    if parts.len() == 1 {
        let w = parts.pop().expect("one part");
        let back = report.iso.inverse().expect("decomposition iso");
        return Ok(SgpWitness { kernel_iso: w.kernel_iso.compose(&back), ..w });
    }
    let p_sum = direct_sum(&parts.iter().map(|w| w.p_module.clone()).collect::<Vec<_>>());
    let pieces_sum = direct_sum(&report.pieces);
    let mut f = Morphism::zero(&p_sum.module, &p_sum.module);
    let mut k = Morphism::zero(&pieces_sum.module, &p_sum.module);
    for (i, w) in parts.iter().enumerate() {
        f = f.add(&p_sum.inclusions[i].compose(&w.f).compose(&p_sum.projections[i]));
        k = k.add(&p_sum.inclusions[i].compose(&w.kernel_iso).compose(&pieces_sum.projections[i]));
    }
    let pieces_to_m = report.iso.inverse().expect("decomposition iso");
    Ok(SgpWitness { p_module: p_sum.module, f, kernel_iso: k.compose(&pieces_to_m) })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::diffrep::lambda_projective;
    use super::super::homology::homology_map;
    use super::*;
    use crate::exactlin::Field;
    use crate::kqrep::{knit_ar_quiver, Rep};
    use crate::quiver::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const F: Field = Field::Prime(32003);

    #[test]
    fn eta_of_simple_on_a3() {
        let a3 = Arc::new(catalog::a3());
        let e = eta(&Rep::simple(&a3, F, 0));
        assert_eq!(e.module.dims(), &[1, 2, 2]);
        assert!(e.module.is_perfect());
        assert!(e.approx.is_surjective());
        assert!(homology_map(&e.approx).is_iso());
        let (ker, _) = e.approx.kernel();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(iso_test(&ker, &suspend(&e.cover.syzygy), &mut rng, 8).is_some());
    }

    #[test]
    fn eta_of_projective_is_itself() {
        let a3 = Arc::new(catalog::a3());
        let p = Rep::projective(&a3, F, 1);
        let e = eta(&p);
        assert_eq!(e.module, DiffRep::from_rep(&p));
        assert!(e.approx.is_iso());
    }

    #[test]
    fn witnesses_on_dynkin_suite() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for q in [catalog::a2(), catalog::a3(), catalog::a3_two_sources(), catalog::d4()] {
            let q = Arc::new(q);
            for node in knit_ar_quiver(&q, F).unwrap().nodes {
                let e = eta(&node.module);
                assert_eq!(
                    e.module.total_dim(),
                    e.cover.cover.module.total_dim() + e.cover.syzygy.total_dim(),
                    "length of ηN"
                );
                let w = sgp_witness(&e.module, &mut rng, 16).unwrap();
                assert!(w.verify());
                assert_eq!(w.p_module.total_dim(), 2 * e.module.total_dim());
                assert!(w.p_module.is_perfect() && homology(&w.p_module).module.is_zero());
            }
            let p = lambda_projective(&q, F, 0);
            assert!(sgp_witness(&p, &mut rng, 16).unwrap().verify());
        }
    }

    #[test]
    fn witness_of_sum_and_of_non_perfect() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a2 = Arc::new(catalog::a2());
        let e = eta(&Rep::simple(&a2, F, 0)).module;
        assert_eq!(e.total_dim(), 3);
        let m = direct_sum(&[e.clone(), lambda_projective(&a2, F, 1), e]).module;
        let w = sgp_witness(&m, &mut rng, 16).unwrap();
        assert!(w.verify());
        assert_eq!(w.p_module.total_dim(), 2 * m.total_dim());
        let s = DiffRep::from_rep(&Rep::simple(&a2, F, 0));
        assert_eq!(sgp_witness(&s, &mut rng, 16).unwrap_err(), Error::NotPerfect);
    }
}
