use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use dualrep::lambda::{ext1_lambda, ghost_maps, sample, GhostContext};
use dualrep::{gamma_l, homology, knit_ar_quiver, seeded_rng, Module};
use dualrep_bench::{dynkin_suite, eta_nodes, FIELD};

fn ar_quivers(c: &mut Criterion) {
    for q in dynkin_suite() {
        c.bench_function(&format!("knit {}", q.name()), |b| b.iter(|| knit_ar_quiver(black_box(&q), FIELD).unwrap()));
        c.bench_function(&format!("gamma_l {}", q.name()), |b| b.iter(|| gamma_l(black_box(&q), FIELD).unwrap()));
    }
}

fn eta_and_homology(c: &mut Criterion) {
    for q in dynkin_suite() {
        let nodes = knit_ar_quiver(&q, FIELD).unwrap().nodes;
        c.bench_function(&format!("eta all {}", q.name()), |b| {
            b.iter(|| nodes.iter().map(|n| dualrep::eta(black_box(&n.module)).module.total_dim()).sum::<usize>())
        });
        let etas = eta_nodes(&q);
        c.bench_function(&format!("homology all {}", q.name()), |b| {
            b.iter(|| etas.iter().map(|m| homology(black_box(m)).module.total_dim()).sum::<usize>())
        });
    }
}

fn ext1(c: &mut Criterion) {
    let q = std::sync::Arc::new(dualrep::quiver::catalog::kronecker());
    let mut rng = seeded_rng(1);
    let corpus: Vec<_> = (0..50).map(|_| sample::random_diffrep(&q, FIELD, &mut rng, 2)).collect();
    c.bench_function("ext1 Kronecker x50", |b| b.iter(|| corpus.iter().map(ext1_lambda).sum::<usize>()));
}

fn ghost_factorization(c: &mut Criterion) {
    let q = dynkin_suite().pop().unwrap();
    let nodes: Vec<_> = gamma_l(&q, FIELD).unwrap().nodes.into_iter().map(|n| n.module).collect();
    let ghosts: Vec<_> = nodes.iter().flat_map(|a| nodes.iter().flat_map(move |b| ghost_maps(a, b))).collect();
    let ctx = GhostContext::new(&q, FIELD);
    c.bench_function("factor ghosts D4", |b| {
        b.iter(|| {
            let mut rng = seeded_rng(1);
            ghosts.iter().map(|g| ctx.factor(g, &mut rng, 16).unwrap().terms.len()).sum::<usize>()
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = ar_quivers, eta_and_homology, ext1, ghost_factorization
}
criterion_main!(benches);
