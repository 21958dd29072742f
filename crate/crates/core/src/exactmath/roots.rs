//! Rational roots of rational polynomials.
//!
//! Small inputs use rational-root-theorem candidates. Inputs whose leading or
//! constant coefficient is too large to factor use p-adic lifting instead:
//! simple roots modulo a small prime are lifted by Newton iteration past the
//! size bound implied by the rational root theorem, then recovered by
//! rational reconstruction and checked exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gcd::{mod_inverse, primitive_integer, rational_reconstruct, squarefree_part};
use super::modp::{dense_eval, primes_from, reduce};
use super::rational::{Rational, Rationals};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Coefficients at or below this size are factored for candidate testing.
const CANDIDATE_LIMIT: u64 = 1_000_000_000_000;

/// All rational roots, repeated by multiplicity, in ascending order.
pub fn rational_roots(p: &UniPoly<Rational>) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let distinct = distinct_rational_roots(p)?;
    let mut out = Vec::new();
    for r in distinct {
        let lin = UniPoly::new(Rationals, p.var(), vec![(1, Rational::one()), (0, -&r)]);
        let mut q = p.clone();
        while let Ok(next) = q.exact_div(&lin) {
            out.push(r.clone());
            q = next;
        }
    }
    out.sort();
    Ok(out)
}

/// Distinct rational roots, ascending.
pub fn distinct_rational_roots(p: &UniPoly<Rational>) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let sf = squarefree_part(p)?;
    let mut f = primitive_integer(&sf);
    let mut roots = Vec::new();
    if f.first().is_some_and(|c| c.is_zero()) {
        roots.push(Rational::zero());
        f.remove(0);
    }
    if f.len() > 1 {
        let small = |c: &BigInt| c.abs().to_u64().is_some_and(|v| v <= CANDIDATE_LIMIT);
        let found = if small(&f[0]) && small(f.last().unwrap()) {
            candidate_roots(&f)
        } else {
            padic_roots(&f)
        };
        roots.extend(found);
    }
    roots.sort();
    Ok(roots)
}

/// Tests `f(a/b) = 0` exactly for integer `f` (ascending).
fn is_root(f: &[BigInt], r: &Rational) -> bool {
    let (a, b) = (r.numer(), r.denom());
    // Σ f_i a^i b^(n-i), evaluated by Horner in homogeneous form.
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for c in f.iter().rev() {
        acc = acc * a + c * &bpow;
        bpow *= b;
    }
    acc.is_zero()
}

fn positive_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational root theorem: roots `a/b` with `a | f_0`, `b | f_n`.
/// Requires `f_0 ≠ 0` and both ends of `f` to fit the candidate limit.
pub(crate) fn candidate_roots(f: &[BigInt]) -> Vec<Rational> {
    let c0 = f[0].abs().to_u64().expect("small constant term");
    let cn = f.last().unwrap().abs().to_u64().expect("small leading term");
    let mut out = Vec::new();
    for a in positive_divisors(c0) {
        for b in positive_divisors(cn) {
            if a.gcd(&b) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let r = Rational::new(BigInt::from(a) * sign, BigInt::from(b)).unwrap();
                if is_root(f, &r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Roots of squarefree primitive `f` with `f_0 ≠ 0` by p-adic lifting.
pub(crate) fn padic_roots(f: &[BigInt]) -> Vec<Rational> {
    let lc = f.last().unwrap().abs();
    let num_bound = f[0].abs();
    let target: BigInt = &num_bound * &lc * 2u32;
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    let deg = f.len() - 1;

    // Small primes keep the brute-force root search cheap; the degree sets a
    // floor so the prime is not swamped by spurious roots.
    for p in primes_from((4 * deg as u64).max(101)) {
        if reduce(&lc, p) == 0 {
            continue;
        }
        let fp: Vec<u64> = f.iter().map(|c| reduce(c, p)).collect();
        let dfp: Vec<u64> = df.iter().map(|c| reduce(c, p)).collect();
        let residues: Vec<u64> = (0..p).filter(|&x| dense_eval(&fp, x, p) == 0).collect();
        if residues.iter().any(|&x| dense_eval(&dfp, x, p) == 0) {
            continue; // a multiple root mod p cannot be lifted uniquely
        }
        let mut out = Vec::new();
        for r0 in residues {
            let (r, m) = hensel_lift(f, &df, BigInt::from(r0), p, &target);
            if let Some(q) = rational_reconstruct(&r, &m, &num_bound, &lc) {
                if is_root(f, &q) {
                    out.push(q);
                }
            }
        }
        return out;
    }
    unreachable!("prime supply exhausted")
}

fn eval_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

/// Newton lifting of a simple root modulo `p` until the modulus exceeds `target`.
fn hensel_lift(f: &[BigInt], df: &[BigInt], mut r: BigInt, p: u64, target: &BigInt) -> (BigInt, BigInt) {
    let mut m = BigInt::from(p);
    while &m <= target {
        m = &m * &m;
        let fv = eval_mod(f, &r, &m);
        let dv = eval_mod(df, &r, &m);
        let inv = mod_inverse(&dv, &m);
        r = (&r - fv * inv).mod_floor(&m);
    }
    (r, m)
}
