//! Shared machinery for modules given by a vector space per vertex and a family of
//! structure maps: morphisms, hom spaces, submodules, quotients and direct sums.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::quiver::Quiver;

/// A finite-dimensional module presented by per-vertex spaces and structure maps.
///
/// Structure map `k` goes from vertex `action(k).0` to vertex `action(k).1`; a
/// morphism must commute with every structure map.
pub trait Module: Clone + fmt::Debug + PartialEq + Eq {
    fn quiver(&self) -> &Arc<Quiver>;
    fn field(&self) -> Field;
    fn dims(&self) -> &[usize];
    fn n_actions(&self) -> usize;
    fn action(&self, k: usize) -> (usize, usize, &Matrix);
    /// Human-readable name of structure map `k`, used in error messages.
    fn action_label(&self, k: usize) -> String;
    /// A module of the same kind with new dimensions and structure maps, listed in action order.
    fn with_actions(&self, dims: Vec<usize>, mats: Vec<Matrix>) -> Self;

    fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The zero module of the same kind.
    fn zero_like(&self) -> Self {
        let n = self.dims().len();
        let mats = (0..self.n_actions()).map(|_| Matrix::zeros(self.field(), 0, 0)).collect();
        self.with_actions(vec![0; n], mats)
    }
}

fn same_quiver(a: &Arc<Quiver>, b: &Arc<Quiver>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_compatible<M: Module>(a: &M, b: &M) -> Result<()> {
    if !same_quiver(a.quiver(), b.quiver()) {
        return Err(Error::QuiverMismatch);
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// A homomorphism given by one block per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<M: Module> {
    source: M,
    target: M,
    blocks: Vec<Matrix>,
}

impl<M: Module> Morphism<M> {
    /// Validates block sizes and every commuting square.
    pub fn new(source: M, target: M, blocks: Vec<Matrix>) -> Result<Morphism<M>> {
        check_compatible(&source, &target)?;
        let n = source.dims().len();
        if blocks.len() != n {
            return Err(Error::DimensionMismatch(format!("{} blocks for {} vertices", blocks.len(), n)));
        }
        for (v, b) in blocks.iter().enumerate() {
            if (b.rows(), b.cols()) != (target.dims()[v], source.dims()[v]) {
                return Err(Error::DimensionMismatch(format!(
                    "block at vertex `{}` is {}x{}, expected {}x{}",
                    source.quiver().vertex_name(v),
                    b.rows(),
                    b.cols(),
                    target.dims()[v],
                    source.dims()[v]
                )));
            }
        }
        let f = Morphism { source, target, blocks };
        if let Some(k) = f.failing_square() {
            return Err(Error::NotAMorphism(f.source.action_label(k)));
        }
        Ok(f)
    }

    /// Internal constructor for blocks that commute by construction.
    pub(crate) fn assemble(source: M, target: M, blocks: Vec<Matrix>) -> Morphism<M> {
        let f = Morphism { source, target, blocks };
        debug_assert!(f.failing_square().is_none(), "constructed blocks do not commute");
        f
    }

    fn failing_square(&self) -> Option<usize> {
        (0..self.source.n_actions()).find(|&k| {
            let (s, t, a) = self.source.action(k);
            let (_, _, b) = self.target.action(k);
            b.mul(&self.blocks[s]) != self.blocks[t].mul(a)
        })
    }

    pub fn identity(m: &M) -> Morphism<M> {
        let blocks = m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        Morphism { source: m.clone(), target: m.clone(), blocks }
    }

    pub fn zero(source: &M, target: &M) -> Morphism<M> {
        let blocks =
            source.dims().iter().zip(target.dims()).map(|(&s, &t)| Matrix::zeros(source.field(), t, s)).collect();
        Morphism { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn source(&self) -> &M {
        &self.source
    }

    pub fn target(&self) -> &M {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism<M>) -> Morphism<M> {
        assert_eq!(other.target.dims(), self.source.dims(), "composition through mismatched modules");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        Morphism { source: other.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn add(&self, other: &Morphism<M>) -> Morphism<M> {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn sub(&self, other: &Morphism<M>) -> Morphism<M> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Morphism<M> {
        self.map_blocks(|b| b.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Morphism<M> {
        self.map_blocks(|b| b.scale(s))
    }

    fn map_blocks(&self, op: impl Fn(&Matrix) -> Matrix) -> Morphism<M> {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(op).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn inverse(&self) -> Option<Morphism<M>> {
        let blocks = self.blocks.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism::assemble(self.target.clone(), self.source.clone(), blocks))
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    /// All entries, block by block, as a single column.
    pub fn to_vector(&self) -> Matrix {
        let entries = self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect();
        Matrix::column(self.field(), entries)
    }

    /// Inverse of [`Morphism::to_vector`].
    fn from_vector(source: &M, target: &M, v: &Matrix) -> Morphism<M> {
        let mut k = 0;
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| {
                let rows = (0..t).map(|r| (0..s).map(|c| v.get(k + r * s + c, 0).clone()).collect()).collect();
                k += s * t;
                Matrix::from_rows(source.field(), rows, s)
            })
            .collect();
        Morphism::assemble(source.clone(), target.clone(), blocks)
    }

    /// The kernel as a submodule of the source.
    pub fn kernel(&self) -> (M, Morphism<M>) {
        submodule(&self.source, &self.blocks.iter().map(Matrix::kernel).collect::<Vec<_>>())
    }

    /// The image as a submodule of the target.
    pub fn image(&self) -> (M, Morphism<M>) {
        submodule(&self.target, &self.blocks.iter().map(Matrix::image).collect::<Vec<_>>())
    }

    /// The cokernel with the projection from the target.
    pub fn cokernel(&self) -> (M, Morphism<M>) {
        quotient(&self.target, &self.blocks.iter().map(Matrix::image).collect::<Vec<_>>())
    }

    pub fn image_subspaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(Matrix::image).collect()
    }

    pub fn kernel_subspaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(Matrix::kernel).collect()
    }
}

/// Linear combination `Σ c_i f_i` of morphisms between the same modules.
pub fn combine<M: Module>(source: &M, target: &M, maps: &[Morphism<M>], coeffs: &[Scalar]) -> Morphism<M> {
    maps.iter().zip(coeffs).fold(Morphism::zero(source, target), |acc, (f, c)| acc.add(&f.scale(c)))
}

/// A basis of `Hom(m1, m2)`, the solution space of the commuting-square system.
pub fn hom_space<M: Module>(m1: &M, m2: &M) -> Result<Vec<Morphism<M>>> {
    check_compatible(m1, m2)?;
    Ok(hom(m1, m2))
}

pub(crate) fn hom<M: Module>(m1: &M, m2: &M) -> Vec<Morphism<M>> {
    let f = m1.field();
    let (d1, d2) = (m1.dims(), m2.dims());
    let mut offset = vec![0; d1.len()];
    let mut unknowns = 0;
    for v in 0..d1.len() {
        offset[v] = unknowns;
        unknowns += d1[v] * d2[v];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * d1[v] + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for k in 0..m1.n_actions() {
        let (s, t, a1) = m1.action(k);
        let (_, _, a2) = m2.action(k);
        // (a2 · B_s − B_t · a1)[r][c] = 0
        for r in 0..d2[t] {
            for c in 0..d1[s] {
                let mut row = vec![f.zero(); unknowns];
                for q in 0..d2[s] {
                    let x = a2.get(r, q);
                    if !f.is_zero(x) {
                        let i = var(s, q, c);
                        row[i] = f.add(&row[i], x);
                    }
                }
                for q in 0..d1[t] {
                    let x = a1.get(q, c);
                    if !f.is_zero(x) {
                        let i = var(t, r, q);
                        row[i] = f.sub(&row[i], x);
                    }
                }
                if row.iter().any(|x| !f.is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(f, rows, unknowns);
    let basis = system.kernel_basis();
    (0..basis.cols()).map(|j| Morphism::from_vector(m1, m2, &basis.col(j))).collect()
}

/// Coordinates of `g` in the span of `maps`, if it lies there.
pub fn span_coordinates<M: Module>(maps: &[Morphism<M>], g: &Morphism<M>) -> Option<Vec<Scalar>> {
    let f = g.field();
    let n = g.to_vector().rows();
    let cols: Vec<Matrix> = maps.iter().map(Morphism::to_vector).collect();
    let a = Matrix::hcat(f, n, &cols);
    let x = a.solve(&g.to_vector()).ok()?;
    Some((0..x.rows()).map(|i| x.get(i, 0).clone()).collect())
}

/// Dimension of the span of a family of morphisms.
pub fn span_dim<M: Module>(maps: &[Morphism<M>]) -> usize {
    match maps.first() {
        None => 0,
        Some(g) => {
            let cols: Vec<Matrix> = maps.iter().map(Morphism::to_vector).collect();
            Matrix::hcat(g.field(), g.to_vector().rows(), &cols).rank()
        }
    }
}

/// The submodule carried by invariant subspaces, with its inclusion.
pub fn submodule<M: Module>(m: &M, subs: &[Subspace]) -> (M, Morphism<M>) {
    let mats = (0..m.n_actions())
        .map(|k| {
            let (s, t, a) = m.action(k);
            subs[t].coordinates(&a.mul(subs[s].basis())).expect("subspaces are invariant")
        })
        .collect();
    let sub = m.with_actions(subs.iter().map(Subspace::dim).collect(), mats);
    let incl = Morphism::assemble(sub.clone(), m.clone(), subs.iter().map(|s| s.basis().clone()).collect());
    (sub, incl)
}

/// The quotient by invariant subspaces, with its projection.
pub fn quotient<M: Module>(m: &M, subs: &[Subspace]) -> (M, Morphism<M>) {
    let qb: Vec<(Matrix, Matrix)> = subs.iter().map(Subspace::quotient_basis).collect();
    let mats = (0..m.n_actions())
        .map(|k| {
            let (s, t, a) = m.action(k);
            qb[t].0.mul(a).mul(&qb[s].1)
        })
        .collect();
    let q = m.with_actions(qb.iter().map(|(p, _)| p.rows()).collect(), mats);
    let proj = Morphism::assemble(m.clone(), q.clone(), qb.into_iter().map(|(p, _)| p).collect());
    (q, proj)
}

/// The smallest invariant subspaces containing the given vectors (columns, per vertex).
pub fn generated_subspaces<M: Module>(m: &M, gens: &[Matrix]) -> Vec<Subspace> {
    let mut subs: Vec<Subspace> = gens.iter().map(Subspace::from_span).collect();
    loop {
        let mut changed = false;
        for k in 0..m.n_actions() {
            let (s, t, a) = m.action(k);
            let img = subs[s].map(a);
            if !subs[t].contains_subspace(&img) {
                subs[t] = subs[t].sum(&img);
                changed = true;
            }
        }
        if !changed {
            return subs;
        }
    }
}

/// A direct sum with its canonical inclusions and projections.
#[derive(Clone, Debug)]
pub struct DirectSum<M: Module> {
    pub module: M,
    pub inclusions: Vec<Morphism<M>>,
    pub projections: Vec<Morphism<M>>,
}

/// Direct sum of a nonempty list of modules.
pub fn direct_sum<M: Module>(parts: &[M]) -> DirectSum<M> {
    let first = parts.first().expect("direct sum of at least one module");
    let f = first.field();
    let n = first.dims().len();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
    let mats = (0..first.n_actions())
        .map(|k| Matrix::block_diag(f, &parts.iter().map(|p| p.action(k).2.clone()).collect::<Vec<_>>()))
        .collect();
    let module = first.with_actions(dims.clone(), mats);
    let mut offsets = vec![0usize; n];
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    for p in parts {
        let mut inc = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let d = p.dims()[v];
            let mut i = Matrix::zeros(f, dims[v], d);
            i.set_block(offsets[v], 0, &Matrix::identity(f, d));
            proj.push(i.transpose());
            inc.push(i);
            offsets[v] += d;
        }
        inclusions.push(Morphism::assemble(p.clone(), module.clone(), inc));
        projections.push(Morphism::assemble(module.clone(), p.clone(), proj));
    }
    DirectSum { module, inclusions, projections }
}

/// The map `⊕ sources → target` given by its components.
pub fn hstack_maps<M: Module>(sum: &DirectSum<M>, target: &M, maps: &[Morphism<M>]) -> Morphism<M> {
    maps.iter().zip(&sum.projections).fold(Morphism::zero(&sum.module, target), |acc, (g, p)| acc.add(&g.compose(p)))
}

/// The map `source → ⊕ targets` given by its components.
pub fn vstack_maps<M: Module>(source: &M, sum: &DirectSum<M>, maps: &[Morphism<M>]) -> Morphism<M> {
    maps.iter().zip(&sum.inclusions).fold(Morphism::zero(source, &sum.module), |acc, (g, i)| acc.add(&i.compose(g)))
}
