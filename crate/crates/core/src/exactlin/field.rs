//! Base fields: a prime field `F_p` or the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// The default characteristic used throughout the crate.
pub const DEFAULT_PRIME: u64 = 32003;

/// A base field. All arithmetic is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rationals,
}

/// An element of a [`Field`]. Which variant is valid is determined by the field
/// the scalar is used with; mixing variants is a programming error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(Box<BigRational>),
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Field {
    /// A prime field, checking primality.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// The characteristic (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Prime(p) => p,
            Field::Rationals => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(0),
            Field::Rationals => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(1),
            Field::Rationals => Scalar::Rat(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(v.rem_euclid(p as i64) as u64),
            Field::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// Image of a rational number; fails in characteristic `p` when `p` divides the denominator.
    pub fn from_rational(self, q: &BigRational) -> Option<Scalar> {
        match self {
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pm) + &pm) % &pm;
                    u64::try_from(r).unwrap_or(0)
                };
                let den = reduce(q.denom());
                if den == 0 {
                    return None;
                }
                let num = reduce(q.numer());
                Some(Scalar::Mod(mul_mod(num, pow_mod(den, p - 2, p), p)))
            }
            Field::Rationals => Some(Scalar::Rat(Box::new(q.clone()))),
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let s = x + y;
                Scalar::Mod(if s >= p { s - p } else { s })
            }
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(Box::new(&**x + &**y)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(if x >= y { x - y } else { x + p - y }),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(Box::new(&**x - &**y)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(mul_mod(*x, *y, p)),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(Box::new(&**x * &**y)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(Box::new(-&**x)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Some(Scalar::Mod(pow_mod(*x, p - 2, p))),
            (Field::Rationals, Scalar::Rat(x)) => Some(Scalar::Rat(Box::new(x.recip()))),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(self, a: &Scalar, mut exp: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// A uniformly random element of `F_p`, or a small random rational integer in `[-9, 9]`.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(rng.gen_range(0..p)),
            Field::Rationals => self.from_i64(rng.gen_range(-9..=9)),
        }
    }

    /// A random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    /// Parses `3`, `-2` or (rationals only) `5/7`.
    pub fn parse_scalar(self, text: &str) -> Option<Scalar> {
        let text = text.trim();
        match self {
            Field::Prime(p) => {
                if let Some((n, d)) = text.split_once('/') {
                    let n: i64 = n.trim().parse().ok()?;
                    let d: i64 = d.trim().parse().ok()?;
                    self.div(&self.from_i64(n), &self.from_i64(d))
                } else {
                    let v = BigInt::from_str(text).ok()?;
                    let pm = BigInt::from(p);
                    let r = ((v % &pm) + &pm) % &pm;
                    Some(Scalar::Mod(u64::try_from(r).ok()?))
                }
            }
            Field::Rationals => {
                let q = if let Some((n, d)) = text.split_once('/') {
                    let n = BigInt::from_str(n.trim()).ok()?;
                    let d = BigInt::from_str(d.trim()).ok()?;
                    if d.is_zero() {
                        return None;
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(BigInt::from_str(text).ok()?)
                };
                Some(Scalar::Rat(Box::new(q)))
            }
        }
    }

    /// Canonical text form: residues in `0..p`, rationals in lowest terms.
    pub fn format_scalar(self, a: &Scalar) -> String {
        match a {
            Scalar::Mod(v) => v.to_string(),
            Scalar::Rat(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
        }
    }

    /// The rational value of a scalar of the rationals.
    pub fn as_rational(a: &Scalar) -> Option<&BigRational> {
        match a {
            Scalar::Rat(q) => Some(q),
            Scalar::Mod(_) => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F{p}"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `F<p>` or `Q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        match s.strip_prefix('F').and_then(|p| p.parse::<u64>().ok()) {
            Some(p) => Field::prime(p),
            None => Err(Error::BadField(s.to_string())),
        }
    }
}
