//! Dense integer polynomial kernels backing rational polynomial arithmetic.
//!
//! Rational polynomials are multiplied and divided by clearing denominators
//! and working over ℤ, which avoids a gcd per coefficient operation. Large
//! products use Kronecker substitution: both operands are packed into single
//! big integers with fixed-width signed slots, multiplied once, and unpacked.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

/// Below this many nonzero terms in the smaller operand, schoolbook wins.
const KRONECKER_THRESHOLD: usize = 16;

pub(crate) fn max_bits(a: &[BigInt]) -> u64 {
    a.iter().map(|c| c.bits()).max().unwrap_or(0)
}

/// Nonnegative gcd of all entries.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Product of ascending dense integer coefficient vectors.
pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let nza = a.iter().filter(|c| !c.is_zero()).count();
    let nzb = b.iter().filter(|c| !c.is_zero()).count();
    if nza.min(nzb) < KRONECKER_THRESHOLD {
        schoolbook(a, b)
    } else {
        kronecker(a, b)
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    let bnz: Vec<(usize, &BigInt)> = b.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for &(j, y) in &bnz {
            out[i + j] += x * y;
        }
    }
    out
}

fn kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let square = std::ptr::eq(a, b);
    let shortest = a.len().min(b.len()) as u64;
    let width = max_bits(a) + max_bits(b) + (64 - shortest.leading_zeros() as u64) + 2;
    let pa = pack(a, width);
    let prod = if square { &pa * &pa } else { &pa * &pack(b, width) };
    unpack(&prod, width, a.len() + b.len() - 1)
}

fn or_shifted(dst: &mut [u32], src: &[u32], bit_off: u64) {
    let w = (bit_off / 32) as usize;
    let s = (bit_off % 32) as u32;
    for (j, &x) in src.iter().enumerate() {
        dst[w + j] |= x << s;
        if s != 0 {
            dst[w + j + 1] |= x >> (32 - s);
        }
    }
}

/// `Σ a_i 2^(i·width)`; requires every `|a_i| < 2^(width-1)`.
pub(crate) fn pack(a: &[BigInt], width: u64) -> BigInt {
    let words = (a.len() as u64 * width / 32 + 2) as usize;
    let mut pos = vec![0u32; words];
    let mut neg = vec![0u32; words];
    let mut has_neg = false;
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (sign, mag) = c.to_u32_digits();
        if sign == Sign::Minus {
            has_neg = true;
            or_shifted(&mut neg, &mag, i as u64 * width);
        } else {
            or_shifted(&mut pos, &mag, i as u64 * width);
        }
    }
    let p = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    if has_neg {
        p - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
    } else {
        p
    }
}

fn extract(src: &[u32], off: u64, width: u64) -> BigUint {
    let w0 = (off / 32) as usize;
    let s = (off % 32) as u32;
    let nw = width.div_ceil(32) as usize;
    let mut out = vec![0u32; nw];
    for (j, slot) in out.iter_mut().enumerate() {
        let lo = src.get(w0 + j).copied().unwrap_or(0);
        let hi = src.get(w0 + j + 1).copied().unwrap_or(0);
        *slot = if s == 0 { lo } else { (lo >> s) | (hi << (32 - s)) };
    }
    let top = (width % 32) as u32;
    if top != 0 {
        out[nw - 1] &= (1u32 << top) - 1;
    }
    BigUint::new(out)
}

/// Inverse of [`pack`] using balanced digits in `(-2^(width-1), 2^(width-1)]`.
pub(crate) fn unpack(v: &BigInt, width: u64, n: usize) -> Vec<BigInt> {
    let (sign, mag) = v.to_u32_digits();
    let full = BigInt::one() << width;
    let mut out = Vec::with_capacity(n);
    let mut carry = false;
    for i in 0..n {
        let mut d = extract(&mag, i as u64 * width, width);
        if carry {
            d += 1u32;
        }
        if d.bits() >= width {
            out.push(BigInt::from(d) - &full);
            carry = true;
        } else {
            out.push(BigInt::from(d));
            carry = false;
        }
    }
    debug_assert!(!carry, "kronecker slot overflow");
    if sign == Sign::Minus {
        for c in &mut out {
            *c = -std::mem::take(c);
        }
    }
    out
}

/// Exact quotient in ℤ[x]. Returns `None` if some step needs a non-integral
/// coefficient or a remainder survives; for primitive `b` either case means
/// `b` does not divide `a` over ℚ.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.iter().rposition(|c| !c.is_zero())?;
    let da = match a.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return Some(Vec::new()),
    };
    if db > da {
        return None;
    }
    let lc = &b[db];
    let lower: Vec<(usize, &BigInt)> = b[..db].iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let mut rem: Vec<BigInt> = a[..=da].to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let r = std::mem::take(&mut rem[i + db]);
        if r.is_zero() {
            continue;
        }
        let qc = if lc.is_one() {
            r
        } else {
            let (qq, rr) = r.div_rem(lc);
            if !rr.is_zero() {
                return None;
            }
            qq
        };
        for &(j, c) in &lower {
            rem[i + j] -= &qc * c;
        }
        q[i] = qc;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

/// Clears denominators: returns ascending integer coefficients and the
/// common denominator.
pub(crate) fn to_integer_dense(terms: &[(u64, Rational)]) -> (Vec<BigInt>, BigInt) {
    let den = common_denominator(terms.iter().map(|(_, c)| c));
    let n = terms.first().map_or(0, |(e, _)| *e as usize + 1);
    let mut v = vec![BigInt::zero(); n];
    for (e, c) in terms {
        v[*e as usize] = if den.is_one() { c.numer().clone() } else { c.numer() * (&den / c.denom()) };
    }
    (v, den)
}

pub(crate) fn from_integer_dense(v: Vec<BigInt>, den: &BigInt) -> Vec<(u64, Rational)> {
    v.into_iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| {
            let r = if den.is_one() {
                Rational::from_integer(c)
            } else {
                Rational::new(c, den.clone()).expect("nonzero denominator")
            };
            (e as u64, r)
        })
        .collect()
}

pub(crate) fn rational_mul_terms(a: &[(u64, Rational)], b: &[(u64, Rational)]) -> Vec<(u64, Rational)> {
    let (ai, da) = to_integer_dense(a);
    if std::ptr::eq(a, b) {
        let prod = mul(&ai, &ai);
        return from_integer_dense(prod, &(&da * &da));
    }
    let (bi, db) = to_integer_dense(b);
    from_integer_dense(mul(&ai, &bi), &(da * db))
}

pub(crate) fn rational_div_terms(a: &[(u64, Rational)], b: &[(u64, Rational)]) -> Result<Vec<(u64, Rational)>> {
    let (ai, da) = to_integer_dense(a);
    let (mut bi, db) = to_integer_dense(b);
    let cb = content(&bi);
    if !cb.is_one() {
        for c in &mut bi {
            *c = &*c / &cb;
        }
    }
    let q = div_exact(&ai, &bi).ok_or(Error::NotDivisible)?;
    // a/b = (A/Bp) * db / (da * cb)
    let num_scale = db;
    let den = da * cb;
    let g = num_scale.gcd(&den);
    let (num_scale, den) = (&num_scale / &g, &den / &g);
    let q: Vec<BigInt> = if num_scale.is_one() { q } else { q.into_iter().map(|c| c * &num_scale).collect() };
    let den = if den.is_negative() { -den } else { den };
    Ok(from_integer_dense(q, &den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pack_unpack_signed() {
        let a = ints(&[-5, 0, 7, -1, 1 << 20]);
        let p = pack(&a, 24);
        assert_eq!(unpack(&p, 24, a.len()), a);
        let neg: Vec<BigInt> = a.iter().map(|c| -c).collect();
        assert_eq!(unpack(&pack(&neg, 24), 24, a.len()), neg);
    }

    #[test]
    fn exact_division_detects_remainder() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(div_exact(&ints(&[-1, 0, 1]), &ints(&[-1, 1])), Some(ints(&[1, 1])));
        assert_eq!(div_exact(&ints(&[1, 0, 1]), &ints(&[-1, 1])), None);
        // 2x + 2 over primitive 2x + 1 is not integral
        assert_eq!(div_exact(&ints(&[2, 2]), &ints(&[1, 2])), None);
    }

    proptest! {
        #[test]
        fn kronecker_matches_schoolbook(
            a in prop::collection::vec(-1_000_000_000_000i64..1_000_000_000_000, 1..60),
            b in prop::collection::vec(-1000i64..1000, 1..60),
        ) {
            let (a, b) = (ints(&a), ints(&b));
            prop_assert_eq!(kronecker(&a, &b), schoolbook(&a, &b));
            prop_assert_eq!(kronecker(&a, &a), schoolbook(&a, &a));
        }
    }
}
