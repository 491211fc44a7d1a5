//! Univariate polynomials and the factor search used by module decomposition.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::field::{Field, Scalar};

/// A polynomial with coefficients listed from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Poly {
        Poly { field, coeffs: vec![field.one()] }
    }

    pub fn x(field: Field) -> Poly {
        Poly { field, coeffs: vec![field.zero(), field.one()] }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Poly {
        match self.field.inv(&self.leading()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|c| f.mul(c, s)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        Poly::new(
            f,
            (0..n).map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z))).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let f = self.field;
        assert!(!d.is_zero(), "polynomial division by zero");
        let inv = f.inv(&d.leading()).expect("nonzero leading coefficient");
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = f.sub(&r[k + i], &f.mul(&c, dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Poly) -> Poly {
        let mut acc = Poly::one(self.field).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// True when some power of `self` is divisible by `m`, i.e. every irreducible factor of `m` divides `self`.
    fn absorbs(&self, m: &Poly) -> bool {
        let n = BigUint::from(m.deg().max(1));
        self.powmod(&n, m).is_zero()
    }

    /// A monic nonconstant divisor `f` of `self` such that `self` has an irreducible
    /// factor coprime to `f`. `None` when no such split was found: over `F_p` this
    /// means `self` is a power of a single irreducible; over the rationals only
    /// squarefree parts and rational roots are tried.
    pub fn splitting_factor<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Poly> {
        if self.deg() < 2 {
            return None;
        }
        let chi = self.monic();
        let candidate = match self.field {
            Field::Prime(p) => chi.prime_factor(p, rng),
            Field::Rationals => chi.rational_factor(),
        }?;
        (!candidate.absorbs(&chi)).then_some(candidate)
    }

    /// Some irreducible factor over `F_p` (distinct-degree then equal-degree splitting).
    fn prime_factor<R: Rng + ?Sized>(&self, p: u64, rng: &mut R) -> Option<Poly> {
        let f = self.field;
        let pb = BigUint::from(p);
        let x = Poly::x(f);
        let mut h = x.clone();
        for d in 1..=self.deg() {
            h = h.powmod(&pb, self);
            let g = self.gcd(&h.sub(&x));
            if g.is_constant() {
                continue;
            }
            return Some(g.equal_degree_factor(p, d, rng));
        }
        None
    }

    /// Splits a squarefree product of degree-`d` irreducibles down to one factor.
    fn equal_degree_factor<R: Rng + ?Sized>(&self, p: u64, d: usize, rng: &mut R) -> Poly {
        let f = self.field;
        let mut g = self.clone();
        while g.deg() > d {
            let a = Poly::new(f, (0..g.deg()).map(|_| f.random(rng)).collect());
            let b = if p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = a.rem(&g);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(&g);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
                a.powmod(&e, &g).sub(&Poly::one(f))
            };
            let h = g.gcd(&b);
            if !h.is_constant() && h.deg() < g.deg() {
                g = if h.deg() <= g.deg() / 2 { h } else { g.divrem(&h).0.monic() };
            }
        }
        g
    }

    /// A factor over the rationals: a squarefree-decomposition piece, else `x - r` for a rational root.
    fn rational_factor(&self) -> Option<Poly> {
        let d = self.derivative();
        let g = self.gcd(&d);
        if !g.is_constant() {
            // self / gcd(self, self') is the radical; if g is not absorbed by it the
            // multiplicities differ and g's radical-coprime part splits
            let rad = self.divrem(&g).0.monic();
            let shared = rad.gcd(&g);
            let rest = rad.divrem(&shared).0;
            if !rest.is_constant() {
                return Some(rest.monic());
            }
            return g.rational_factor().or_else(|| rad.rational_root_factor());
        }
        self.rational_root_factor()
    }

    fn rational_root_factor(&self) -> Option<Poly> {
        let f = self.field;
        let ints = self.integer_coeffs()?;
        if ints[0].is_zero() {
            return Some(Poly::x(f));
        }
        let lead = ints.last()?.abs();
        let konst = ints[0].abs();
        let nums = small_divisors(&konst)?;
        let dens = small_divisors(&lead)?;
        for n in &nums {
            for dd in &dens {
                for sign in [1i64, -1] {
                    let r = BigRational::new(BigInt::from(*n) * sign, BigInt::from(*dd));
                    let rs = f.from_rational(&r)?;
                    if f.is_zero(&self.eval(&rs)) {
                        return Some(Poly::new(f, vec![f.neg(&rs), f.one()]));
                    }
                }
            }
        }
        None
    }

    fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        let qs: Vec<&BigRational> = self.coeffs.iter().map(Field::as_rational).collect::<Option<_>>()?;
        let l = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        Some(qs.iter().map(|q| (q.numer() * &l) / q.denom()).collect())
    }
}

/// Positive divisors, or `None` when the number is too large to trial-divide.
fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}
