//! Perfect Λ-modules: normal form, projective part, `Ext¹(−, Λ)` and stable Hom.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::kqrep::{
    direct_sum, hom, quotient, span_coordinates, span_dim, submodule, DirectSum, Module, Morphism, Rep, RepMap,
};
use crate::quiver::Quiver;

use super::diffrep::{lambda_projective, make_diffrep, DiffRep, DiffRepMap};
use super::homology::homology;

/// The decomposition `M ≅ (N′ ⊕ N″, [[0, u′], [0, 0]])` of a perfect module with
/// `N′ = Ker ε`, `N″ = εM`.
#[derive(Clone, Debug)]
pub struct NormalForm {
    /// `N′ = Ker ε` with its inclusion `u` into `M`.
    pub kernel: Rep,
    pub kernel_incl: RepMap,
    /// `N″ = εM` with its inclusion into `M`.
    pub image: Rep,
    pub image_incl: RepMap,
    /// `ε` corestricted to `f′: M → N″`.
    pub corestriction: RepMap,
    /// A kQ-section `s: N″ → M` of `f′`.
    pub section: RepMap,
    /// `(N′ ⊕ N″, [[0, u′], [0, 0]])`.
    pub model: DiffRep,
    /// The isomorphism `[u s]: model → M`.
    pub iso: DiffRepMap,
}

/// `ε` viewed as a map onto its image, with that image as a kQ-module.
pub(crate) fn eps_corestriction(m: &DiffRep) -> (Rep, RepMap, RepMap) {
    let (image, image_incl) = m.eps_image();
    let subs = m.eps_image_subspaces();
    let blocks = (0..m.dims().len()).map(|v| subs[v].coordinates(m.eps(v)).expect("ε lands in its image")).collect();
    let core = Morphism::new(m.base().clone(), image.clone(), blocks).expect("ε is kQ-linear");
    (image, image_incl, core)
}

/// A kQ-linear right inverse of a split epimorphism, solved for in the hom space.
pub(crate) fn split_epi_section(g: &RepMap) -> Option<RepMap> {
    let basis = hom(g.target(), g.source());
    let composites: Vec<RepMap> = basis.iter().map(|h| g.compose(h)).collect();
    let id = Morphism::identity(g.target());
    if basis.is_empty() {
        return id.is_zero().then(|| Morphism::zero(g.target(), g.source()));
    }
    let c = span_coordinates(&composites, &id)?;
    Some(crate::kqrep::combine(g.target(), g.source(), &basis, &c))
}

pub fn perfect_normal_form(m: &DiffRep) -> Result<NormalForm> {
    if !m.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let f = m.field();
    let (kernel, kernel_incl) = m.eps_kernel();
    let (image, image_incl, corestriction) = eps_corestriction(m);
    let section = split_epi_section(&corestriction).expect("εM is projective, so f′ splits");
    let n = m.dims().len();
    let base = direct_sum(&[kernel.clone(), image.clone()]).module;
    let mut eps = Vec::with_capacity(n);
    let mut iso = Vec::with_capacity(n);
    for v in 0..n {
        let (dk, di) = (kernel.dims()[v], image.dims()[v]);
        // u′ = coordinates of εM inside Ker ε
        let u_prime = m.eps(v).kernel().coordinates(image_incl.block(v)).expect("εM ⊆ Ker ε");
        let mut e = Matrix::zeros(f, dk + di, dk + di);
        e.set_block(0, dk, &u_prime);
        eps.push(e);
        iso.push(kernel_incl.block(v).hstack(section.block(v)));
    }
    let model = make_diffrep(base, eps).expect("normal form is a Λ-module");
    let iso = Morphism::new(model.clone(), m.clone(), iso).expect("[u s] is Λ-linear");
    debug_assert!(iso.is_iso());
    Ok(NormalForm { kernel, kernel_incl, image, image_incl, corestriction, section, model, iso })
}

/// `0 → U → M → H(M) → 0` with `U` projective and `εM ⊆ U`.
#[derive(Clone, Debug)]
pub struct ProjectivePart {
    pub u: DiffRep,
    pub inclusion: DiffRepMap,
    /// `M/U`, a kQ-module with `ε = 0`.
    pub quotient: DiffRep,
    pub projection: DiffRepMap,
    /// The isomorphism `H(M) → M/U` induced by `Ker ε ⊆ M`.
    pub from_homology: RepMap,
}

/// Takes `U = εM + s(εM)` for the section `s` of the normal form, so `U ≅ (εM)[ε]`.
pub fn split_projective_part(m: &DiffRep) -> Result<ProjectivePart> {
    let nf = perfect_normal_form(m)?;
    let subs: Vec<Subspace> =
        (0..m.dims().len()).map(|v| Subspace::from_span(&nf.image_incl.block(v).hstack(nf.section.block(v)))).collect();
    let (u, inclusion) = submodule(m, &subs);
    let (quot, projection) = quotient(m, &subs);
    debug_assert!(quot.has_zero_eps());
    let h = homology(m);
    let blocks = (0..m.dims().len())
        .map(|v| projection.block(v).mul(&h.lift(v, &Matrix::identity(m.field(), h.module.dims()[v]))))
        .collect();
    let from_homology = Morphism::new(h.module.clone(), quot.base().clone(), blocks).expect("induced map");
    debug_assert!(from_homology.is_iso());
    Ok(ProjectivePart { u, inclusion, quotient: quot, projection, from_homology })
}

/// The Λ-homomorphism `P(y) → M` sending the top generator of `P(y)` to `g ∈ M_y`.
pub fn map_from_lambda_projective(m: &DiffRep, y: usize, g: &Matrix) -> DiffRepMap {
    let q = m.quiver().clone();
    let p = lambda_projective(&q, m.field(), y);
    let blocks = q
        .paths_from(y)
        .iter()
        .enumerate()
        .map(|(j, paths)| {
            let cols: Vec<Matrix> = paths.iter().map(|path| m.base().path_action(y, path).mul(g)).collect();
            let top = Matrix::hcat(m.field(), m.dims()[j], &cols);
            m.eps(j).mul(&top).hstack(&top)
        })
        .collect();
    Morphism::new(p, m.clone(), blocks).expect("maps out of P(y) are determined by the generator")
}

/// A projective cover `P → M` over Λ with kernel `K`.
#[derive(Clone, Debug)]
pub struct LambdaCover {
    pub tops: Vec<usize>,
    pub cover: DiffRep,
    pub map: DiffRepMap,
    pub kernel: DiffRep,
    pub kernel_incl: DiffRepMap,
}

/// The Λ-radical of `M` at every vertex: arrow images plus `εM`.
pub fn lambda_radical_subspaces(m: &DiffRep) -> Vec<Subspace> {
    let mut subs: Vec<Subspace> = m.eps_image_subspaces();
    for (k, a) in m.quiver().arrows().iter().enumerate() {
        subs[a.target] = subs[a.target].sum(&m.base().map(k).image());
    }
    subs
}

pub fn lambda_cover(m: &DiffRep) -> LambdaCover {
    let mut tops = Vec::new();
    let mut maps = Vec::new();
    for (y, r) in lambda_radical_subspaces(m).iter().enumerate() {
        let (_, section) = r.quotient_basis();
        for c in 0..section.cols() {
            tops.push(y);
            maps.push(map_from_lambda_projective(m, y, &section.col(c)));
        }
    }
    if tops.is_empty() {
        let z = m.zero_like();
        return LambdaCover {
            tops,
            cover: z.clone(),
            map: Morphism::zero(&z, m),
            kernel: z.clone(),
            kernel_incl: Morphism::identity(&z),
        };
    }
    let sum: DirectSum<DiffRep> = direct_sum(&maps.iter().map(|g| g.source().clone()).collect::<Vec<_>>());
    let map = crate::kqrep::hstack_maps(&sum, m, &maps);
    debug_assert!(map.is_surjective());
    let (kernel, kernel_incl) = map.kernel();
    LambdaCover { tops, cover: sum.module, map, kernel, kernel_incl }
}

/// The regular module `Λ = ⊕_y P(y)`, one summand per vertex.
pub fn regular_summands(q: &Arc<Quiver>, field: Field) -> Vec<DiffRep> {
    (0..q.n_vertices()).map(|y| lambda_projective(q, field, y)).collect()
}

/// `dim Ext¹_Λ(M, Λ)` as the cokernel of restriction `Hom(P, Λ) → Hom(K, Λ)` along a
/// projective cover `0 → K → P → M → 0`.
pub fn ext1_lambda(m: &DiffRep) -> usize {
    let c = lambda_cover(m);
    if c.kernel.is_zero() {
        return 0;
    }
    regular_summands(m.quiver(), m.field())
        .iter()
        .map(|py| {
            let from_k = hom(&c.kernel, py).len();
            let restricted: Vec<DiffRepMap> = hom(&c.cover, py).iter().map(|h| h.compose(&c.kernel_incl)).collect();
            from_k - span_dim(&restricted)
        })
        .sum()
}

/// `Hom_Λ(M₁, M₂)` modulo maps factoring through projectives.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub hom_dim: usize,
    pub dim: usize,
    /// Maps whose classes form a basis of the stable Hom space.
    pub basis: Vec<DiffRepMap>,
    /// Dimension of the space of maps factoring through a projective.
    pub projective_dim: usize,
}

/// Computes the maps factoring through the projective cover of `m2` and the null-homotopic
/// maps `hε + εh` (`h` kQ-linear) and asserts that both subspaces agree.
pub fn stable_hom(m1: &DiffRep, m2: &DiffRep) -> Result<StableHom> {
    crate::kqrep::hom_space(m1, m2)?;
    if !m1.is_perfect() || !m2.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let homs = hom(m1, m2);
    let cover = lambda_cover(m2);
    let through: Vec<DiffRepMap> = hom(m1, &cover.cover).iter().map(|h| cover.map.compose(h)).collect();
    let homotopic: Vec<DiffRepMap> = hom(m1.base(), m2.base())
        .iter()
        .map(|h| {
            let blocks =
                (0..m1.dims().len()).map(|v| h.block(v).mul(m1.eps(v)).add(&m2.eps(v).mul(h.block(v)))).collect();
            Morphism::new(m1.clone(), m2.clone(), blocks).expect("hε + εh is Λ-linear")
        })
        .collect();
    let projective_dim = span_dim(&through);
    let both: Vec<DiffRepMap> = through.iter().chain(&homotopic).cloned().collect();
    assert!(
        span_dim(&homotopic) == projective_dim && span_dim(&both) == projective_dim,
        "null-homotopic maps must be exactly the maps factoring through projectives"
    );
    let mut basis = Vec::new();
    let mut running = through.clone();
    let mut rank = projective_dim;
    for g in homs.iter() {
        running.push(g.clone());
        let r = span_dim(&running);
        if r > rank {
            rank = r;
            basis.push(g.clone());
        } else {
            running.pop();
        }
    }
    Ok(StableHom { hom_dim: homs.len(), dim: basis.len(), basis, projective_dim })
}
