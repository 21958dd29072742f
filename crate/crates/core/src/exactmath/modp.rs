//! Word-sized prime fields: helpers for modular algorithms and the [`Fp`]
//! scalar type.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::rational::Rational;
use super::scalar::{Scalar, ScalarRing};
use crate::error::{Error, Result};

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for q in SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes strictly below `start`, in decreasing order.
pub fn primes_below(start: u64) -> impl Iterator<Item = u64> {
    (2..start).rev().filter(|&n| is_prime(n))
}

/// Primes at or above `start`, in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}

/// Largest primes used by the modular gcd; products of two residues fit in u128.
pub const LARGE_PRIME_START: u64 = 1 << 62;

pub fn reduce(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Image of a rational number, or `None` when `p` divides the denominator.
pub fn rational_mod(r: &Rational, p: u64) -> Option<u64> {
    let den = reduce(r.denom(), p);
    inv_mod(den, p).map(|inv| mul_mod(reduce(r.numer(), p), inv, p))
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of ascending dense polynomials over 𝔽_p; `b` must be nonzero.
pub fn dense_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    trim(&mut a);
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p).expect("nonzero leading coefficient");
    while a.len() > db {
        let top = a.len() - 1;
        let q = mul_mod(a[top], inv, p);
        if q != 0 {
            let shift = top - db;
            for (j, &c) in b.iter().enumerate() {
                a[shift + j] = sub_mod(a[shift + j], mul_mod(q, c, p), p);
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Monic gcd of ascending dense polynomials over 𝔽_p. Empty means zero.
pub fn dense_gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = dense_rem(a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p).unwrap();
        for c in &mut a {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

pub fn dense_eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// The prime field 𝔽_p as a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> Fp {
        Fp { v: v % self.p, p: self.p }
    }

    /// Image of a rational; fails when `p` divides the denominator.
    pub fn try_from_rational(&self, r: &Rational) -> Result<Fp> {
        rational_mod(r, self.p)
            .map(|v| self.elem(v))
            .ok_or_else(|| Error::InvalidArgument(format!("{r} has no image mod {}", self.p)))
    }
}

impl ScalarRing for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        self.elem(0)
    }

    fn one(&self) -> Fp {
        self.elem(1)
    }

    /// Panics if `p` divides the denominator; see [`PrimeField::try_from_rational`].
    fn from_rational(&self, r: &Rational) -> Fp {
        self.try_from_rational(r).expect("denominator invertible mod p")
    }

    fn is_field(&self) -> bool {
        true
    }
}

/// An element of 𝔽_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.v
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.v, self.p)
    }
}

impl Scalar for Fp {
    type Ring = PrimeField;

    fn ring(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }

    fn plus(&self, rhs: &Self) -> Self {
        Fp { v: add_mod(self.v, rhs.v, self.p), p: self.p }
    }

    fn minus(&self, rhs: &Self) -> Self {
        Fp { v: sub_mod(self.v, rhs.v, self.p), p: self.p }
    }

    fn times(&self, rhs: &Self) -> Self {
        Fp { v: mul_mod(self.v, rhs.v, self.p), p: self.p }
    }

    fn negate(&self) -> Self {
        Fp { v: sub_mod(0, self.v, self.p), p: self.p }
    }

    fn inverse(&self) -> Result<Self> {
        inv_mod(self.v, self.p).map(|v| Fp { v, p: self.p }).ok_or(Error::ZeroOperand)
    }

    fn as_rational(&self) -> Option<Rational> {
        None
    }

    fn mul_terms(a: &[(u64, Self)], b: &[(u64, Self)]) -> Vec<(u64, Self)> {
        let p = a[0].1.p;
        let n = (a[0].0 + b[0].0) as usize + 1;
        let mut acc = vec![0u128; n];
        // Accumulate in u128 and reduce only when close to overflow.
        let limit = u128::MAX - (p as u128 - 1) * (p as u128 - 1);
        for (ea, ca) in a {
            for (eb, cb) in b {
                let k = (ea + eb) as usize;
                let mut s = acc[k] + ca.v as u128 * cb.v as u128;
                if s > limit {
                    s %= p as u128;
                }
                acc[k] = s;
            }
        }
        acc.into_iter()
            .enumerate()
            .rev()
            .map(|(e, s)| (e as u64, (s % p as u128) as u64))
            .filter(|(_, v)| *v != 0)
            .map(|(e, v)| (e, Fp { v, p }))
            .collect()
    }
}
