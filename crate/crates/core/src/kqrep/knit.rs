//! Auslander–Reiten quivers: the shared graph type and the knitting of `Γ(mod kQ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::module::Module;
use super::rep::Rep;
use super::tau::ar_translate_inverse;
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeClass {
    /// An indecomposable kQ-module in `Γ(mod kQ)`.
    KqIndecomposable,
    /// `ηN` for a non-projective indecomposable `N`.
    EtaImage,
    /// An indecomposable projective Λ-module `P(y)`.
    LambdaProjective,
    /// An indecomposable projective kQ-module viewed as a Λ-module with `ε = 0`.
    KqProjectiveInL,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    /// An irreducible map of `mod kQ`.
    Irreducible,
    /// The image of an irreducible map of `mod kQ` under the embedding into `Γ(L)`.
    IotaImage,
    /// An irreducible map killed by homology.
    Ghost,
    /// An arrow into or out of a projective Λ-module.
    ProjectiveMesh,
}

impl fmt::Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArrowKind::Irreducible => "irreducible",
            ArrowKind::IotaImage => "iota_image",
            ArrowKind::Ghost => "ghost",
            ArrowKind::ProjectiveMesh => "projective_mesh",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ArNode<M: Module> {
    pub label: String,
    pub module: M,
    pub class: NodeClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArArrow {
    pub source: usize,
    pub target: usize,
    pub multiplicity: usize,
    pub kind: ArrowKind,
}

/// A translation quiver: nodes, arrows with multiplicities and the partial translation.
#[derive(Clone, Debug)]
pub struct ArQuiver<M: Module> {
    pub quiver: Arc<Quiver>,
    pub nodes: Vec<ArNode<M>>,
    pub arrows: Vec<ArArrow>,
    /// `translation[i] = Some(j)` when `τ(node i) = node j`.
    pub translation: Vec<Option<usize>>,
}

impl<M: Module> ArQuiver<M> {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().map(|a| a.multiplicity).sum()
    }

    pub fn count_kind(&self, kind: ArrowKind) -> usize {
        self.arrows.iter().filter(|a| a.kind == kind).map(|a| a.multiplicity).sum()
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = &ArArrow> {
        self.arrows.iter().filter(move |a| a.source == i)
    }

    pub fn predecessors(&self, i: usize) -> impl Iterator<Item = &ArArrow> {
        self.arrows.iter().filter(move |a| a.target == i)
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }
}

/// Name of a Dynkin-type indecomposable from its dimension vector: `S(y)`, then
/// `P0(y)`, then `I0(y)`, else `M(d1,...,dn)`.
pub fn standard_name(q: &Quiver, dims: &[usize]) -> String {
    let n = q.n_vertices();
    for y in 0..n {
        if dims.iter().enumerate().all(|(j, &d)| d == usize::from(j == y)) {
            return format!("S({})", q.vertex_name(y));
        }
    }
    for y in 0..n {
        if q.paths_from(y).iter().map(Vec::len).eq(dims.iter().copied()) {
            return format!("P0({})", q.vertex_name(y));
        }
    }
    for y in 0..n {
        if q.paths_to(y).iter().map(Vec::len).eq(dims.iter().copied()) {
            return format!("I0({})", q.vertex_name(y));
        }
    }
    let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
    format!("M({})", parts.join(","))
}

/// Vertices ordered so that every vertex comes after all targets of its arrows.
pub fn sinks_first(q: &Quiver) -> Vec<usize> {
    let n = q.n_vertices();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .find(|&v| !placed[v] && q.arrows().iter().all(|a| a.source != v || placed[a.target]))
            .expect("acyclic quiver");
        placed[v] = true;
        order.push(v);
    }
    order
}

/// Knits `Γ(mod kQ)` for a Dynkin quiver: the projectives (sinks first), then their
/// successive inverse translates computed explicitly; arrows start from the radical
/// inclusions between projectives and are propagated along meshes, whose dimension
/// additivity is checked.
pub fn knit_ar_quiver(q: &Arc<Quiver>, field: Field) -> Result<ArQuiver<Rep>> {
    if !q.is_dynkin() {
        return Err(Error::NotRepresentationFinite(q.name().to_string()));
    }
    let mut modules: Vec<Rep> = Vec::new();
    let mut proj_node = vec![0; q.n_vertices()];
    let mut current = Vec::new();
    for y in sinks_first(q) {
        proj_node[y] = modules.len();
        current.push(modules.len());
        modules.push(Rep::projective(q, field, y));
    }
    let mut inv: Vec<Option<usize>> = vec![None; modules.len()];
    while !current.is_empty() {
        let mut next = Vec::new();
        for x in current {
            match ar_translate_inverse(&modules[x]) {
                Ok(t) => {
                    assert!(!modules.iter().any(|m| m.dims() == t.dims()), "inverse translate repeats a node");
                    inv[x] = Some(modules.len());
                    next.push(modules.len());
                    modules.push(t);
                    inv.push(None);
                }
                Err(Error::IsInjective) => {}
                Err(e) => return Err(e),
            }
        }
        current = next;
    }
    let roots = q.positive_roots()?;
    assert_eq!(modules.len(), roots.len(), "knitting must reach every positive root");

    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut work: Vec<(usize, usize)> = q.arrows().iter().map(|a| (proj_node[a.target], proj_node[a.source])).collect();
    while let Some((w, x)) = work.pop() {
        *mult.entry((w, x)).or_default() += 1;
        if let Some(tw) = inv[w] {
            work.push((x, tw));
        }
    }
    for (x, t) in inv.iter().enumerate() {
        if let Some(t) = *t {
            let lhs: Vec<usize> = (0..q.n_vertices()).map(|v| modules[x].dims()[v] + modules[t].dims()[v]).collect();
            let mid = |pick: &dyn Fn(usize, usize) -> Option<usize>| -> Vec<usize> {
                let mut d = vec![0; q.n_vertices()];
                for (&(a, b), &m) in &mult {
                    if let Some(e) = pick(a, b) {
                        for (dv, ev) in d.iter_mut().zip(modules[e].dims()) {
                            *dv += m * ev;
                        }
                    }
                }
                d
            };
            assert_eq!(mid(&|a, b| (a == x).then_some(b)), lhs, "mesh starting at node {x} is not additive");
            assert_eq!(mid(&|a, b| (b == t).then_some(a)), lhs, "mesh ending at node {t} is not additive");
        }
    }
    let mut translation = vec![None; modules.len()];
    for (x, t) in inv.iter().enumerate() {
        if let Some(t) = *t {
            translation[t] = Some(x);
        }
    }
    let nodes = modules
        .into_iter()
        .map(|m| ArNode { label: standard_name(q, m.dims()), module: m, class: NodeClass::KqIndecomposable })
        .collect();
    let arrows = mult
        .into_iter()
        .map(|((source, target), multiplicity)| ArArrow { source, target, multiplicity, kind: ArrowKind::Irreducible })
        .collect();
    Ok(ArQuiver { quiver: q.clone(), nodes, arrows, translation })
}
