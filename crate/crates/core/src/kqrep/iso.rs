//! Isomorphism search between modules.

use rand::Rng;

use super::module::{combine, hom, Module, Morphism};

/// Cap on the deterministic small-coefficient enumeration.
const ENUMERATION_CAP: usize = 2048;

/// An explicit isomorphism `m1 → m2`, or `None`.
///
/// Modules are filtered by dimension vector and by comparing `dim Hom(m1, m2)` with
/// both endomorphism dimensions; then hom-space basis elements, `trials` random
/// combinations and a bounded enumeration of small combinations are tried. A `None`
/// after the filters pass is a probabilistic verdict.
pub fn iso_test<M: Module, R: Rng + ?Sized>(m1: &M, m2: &M, rng: &mut R, trials: usize) -> Option<Morphism<M>> {
    if super::module::check_compatible(m1, m2).is_err() || m1.dims() != m2.dims() {
        return None;
    }
    if m1 == m2 {
        return Some(Morphism::identity(m1));
    }
    let h = hom(m1, m2);
    if h.len() != hom(m1, m1).len() || h.len() != hom(m2, m2).len() {
        return None;
    }
    if m1.is_zero() {
        return Some(Morphism::zero(m1, m2));
    }
    if let Some(f) = h.iter().find(|f| f.is_iso()) {
        return Some(f.clone());
    }
    let field = m1.field();
    for _ in 0..trials {
        let coeffs: Vec<_> = h.iter().map(|_| field.random(rng)).collect();
        let f = combine(m1, m2, &h, &coeffs);
        if f.is_iso() {
            return Some(f);
        }
    }
    let n = h.len();
    let mut digits = vec![0i64; n];
    for _ in 0..ENUMERATION_CAP {
        let mut i = 0;
        while i < n && digits[i] == 2 {
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        digits[i] += 1;
        let coeffs: Vec<_> = digits.iter().map(|&d| field.from_i64(d)).collect();
        let f = combine(m1, m2, &h, &coeffs);
        if f.is_iso() {
            return Some(f);
        }
    }
    None
}

pub fn is_isomorphic<M: Module, R: Rng + ?Sized>(m1: &M, m2: &M, rng: &mut R, trials: usize) -> bool {
    iso_test(m1, m2, rng, trials).is_some()
}
