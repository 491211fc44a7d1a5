//! Inputs shared by the benchmarks.

use std::sync::Arc;

use dualrep::quiver::catalog;
use dualrep::{eta, knit_ar_quiver, DiffRep, Field, Quiver};

pub const FIELD: Field = Field::Prime(32003);

pub fn dynkin_suite() -> Vec<Arc<Quiver>> {
    [catalog::a3(), catalog::a3_two_sources(), catalog::d4()].into_iter().map(Arc::new).collect()
}

/// `ηN` for every indecomposable kQ-module `N`.
pub fn eta_nodes(q: &Arc<Quiver>) -> Vec<DiffRep> {
    knit_ar_quiver(q, FIELD).expect("Dynkin").nodes.iter().map(|n| eta(&n.module).module).collect()
}
