//! Greatest common divisors and squarefree parts.
//!
//! Over ℚ the gcd is computed by the modular method: images modulo large
//! word-sized primes, Chinese remaindering, rational reconstruction, and a
//! final exact trial division that makes the answer unconditional. Over
//! other fields the plain Euclidean algorithm is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{dense_gcd, primes_below, reduce, LARGE_PRIME_START};
use super::rational::{Rational, Rationals};
use super::scalar::{Scalar, ScalarRing};
use super::unipoly::UniPoly;
use super::zpoly;
use crate::error::{Error, Result};

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd_uni<S: Scalar>(a: &UniPoly<S>, b: &UniPoly<S>) -> Result<UniPoly<S>> {
    if a.ring() != b.ring() || a.var() != b.var() {
        return Err(Error::IncompatibleRings);
    }
    if !a.ring().is_field() {
        return Err(Error::InvalidArgument("gcd needs coefficients in a field".into()));
    }
    S::poly_gcd(a, b)
}

/// Euclidean algorithm with monic normalisation at each step.
pub fn euclid_gcd<S: Scalar>(a: &UniPoly<S>, b: &UniPoly<S>) -> Result<UniPoly<S>> {
    let (mut r0, mut r1) = (a.monic()?, b.monic()?);
    while !r1.is_zero() {
        let r = r0.rem(&r1)?;
        r0 = std::mem::replace(&mut r1, r.monic()?);
    }
    Ok(r0)
}

/// Primitive integer form of a nonzero rational polynomial (ascending).
pub(crate) fn primitive_integer(p: &UniPoly<Rational>) -> Vec<BigInt> {
    let (mut v, _) = zpoly::to_integer_dense(p.terms());
    let c = zpoly::content(&v);
    if !c.is_one() {
        for x in &mut v {
            *x = &*x / &c;
        }
    }
    if v.last().is_some_and(|x| x.is_negative()) {
        for x in &mut v {
            *x = -std::mem::take(x);
        }
    }
    v
}

/// Rational `r/s ≡ u (mod m)` with `|r| ≤ num_bound`, `0 < s ≤ den_bound`.
pub(crate) fn rational_reconstruct(u: &BigInt, m: &BigInt, num_bound: &BigInt, den_bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *den_bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Rational::new(r1, t1).ok()
}

fn crt_bounds(m: &BigInt) -> BigInt {
    (m / 2u32).sqrt()
}

/// Modular gcd over ℚ, see the module docs.
pub fn modular_gcd(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> Result<UniPoly<Rational>> {
    let var = a.var();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Ok(UniPoly::one(Rationals, var));
    }
    let ai = primitive_integer(a);
    let bi = primitive_integer(b);
    let (lca, lcb) = (ai.last().unwrap().clone(), bi.last().unwrap().clone());

    let mut best_deg = usize::MAX;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last_candidate: Option<Vec<Rational>> = None;

    for (tried, p) in primes_below(LARGE_PRIME_START).enumerate() {
        if tried > 100_000 {
            return Err(Error::InvalidArgument("modular gcd did not stabilise".into()));
        }
        if reduce(&lca, p) == 0 || reduce(&lcb, p) == 0 {
            continue;
        }
        let ap: Vec<u64> = ai.iter().map(|c| reduce(c, p)).collect();
        let bp: Vec<u64> = bi.iter().map(|c| reduce(c, p)).collect();
        let g = dense_gcd(ap, bp, p);
        let dg = g.len() - 1;
        if dg == 0 {
            return Ok(UniPoly::one(Rationals, var));
        }
        if dg > best_deg {
            continue; // unlucky prime
        }
        let pb = BigInt::from(p);
        if dg < best_deg {
            best_deg = dg;
            residues = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb;
            last_candidate = None;
        } else {
            // CRT: x ≡ r (mod m), x ≡ g (mod p)
            let minv = mod_inverse(&modulus.mod_floor(&pb), &pb);
            for (r, &gc) in residues.iter_mut().zip(&g) {
                let diff = (BigInt::from(gc) - &*r).mod_floor(&pb);
                let k = (diff * &minv).mod_floor(&pb);
                *r += &modulus * k;
            }
            modulus *= pb;
        }
        let bound = crt_bounds(&modulus);
        let cand: Option<Vec<Rational>> = residues
            .iter()
            .map(|r| rational_reconstruct(r, &modulus, &bound, &bound))
            .collect();
        let Some(cand) = cand else { continue };
        // Only attempt the trial division once the reconstruction repeats.
        if last_candidate.as_ref() != Some(&cand) {
            last_candidate = Some(cand);
            continue;
        }
        let g = UniPoly::from_coeffs(Rationals, var, cand);
        let gi = primitive_integer(&g);
        if zpoly::div_exact(&ai, &gi).is_some() && zpoly::div_exact(&bi, &gi).is_some() {
            return Ok(g);
        }
    }
    unreachable!("prime supply exhausted")
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part<S: Scalar>(p: &UniPoly<S>) -> Result<UniPoly<S>> {
    if p.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let g = gcd_uni(p, &p.derivative())?;
    p.exact_div(&g)?.monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::format::parse_unipoly;
    use crate::exactmath::unipoly::Var;
    use proptest::prelude::*;

    fn c(s: &str) -> UniPoly<Rational> {
        parse_unipoly(s, Var::C).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(gcd_uni(&c("C + 3/4"), &c("C^2 + 1/2*C - 3/16")).unwrap(), c("C + 3/4"));
        assert_eq!(gcd_uni(&c("2*C^2 - 4"), &c("0")).unwrap(), c("C^2 - 2"));
        assert_eq!(gcd_uni(&c("(C+1)^2"), &c("C + 1")).unwrap(), c("C + 1"));
        assert!(gcd_uni(&c("0"), &c("0")).unwrap().is_zero());
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&c("(C+1)^2")).unwrap(), c("C + 1"));
        assert_eq!(squarefree_part(&c("C + 3/4")).unwrap(), c("C + 3/4"));
        assert_eq!(
            squarefree_part(&c("(C+3/4)^2*(C-1/4)")).unwrap(),
            c("(C+3/4)*(C-1/4)")
        );
        assert_eq!(squarefree_part(&c("0")), Err(Error::ZeroOperand));
    }

    #[test]
    fn modular_agrees_with_euclid_on_large_coefficients() {
        let f = c("(123456789012345678901/7*C^3 - 5*C + 1)*(C^2 - 99999999999999999999/13)");
        let g = c("(123456789012345678901/7*C^3 - 5*C + 1)*(17*C + 3)^2");
        let m = modular_gcd(&f, &g).unwrap();
        assert_eq!(m, euclid_gcd(&f, &g).unwrap());
        assert_eq!(m.degree(), 3);
    }

    #[test]
    fn zero_divisor_in_quotient_gcd() {
        use crate::exactmath::quotient::QuotientRing;
        let ring = QuotientRing::new(parse_unipoly("t^2 - 1", Var::T).unwrap(), true).unwrap();
        let t = ring.generator();
        let one = ring.one();
        // (C + t - 1) has a leading coefficient fine, but reducing by
        // (t - 1)*C + 1 requires inverting t - 1.
        let a = UniPoly::new(ring.clone(), Var::C, vec![(2, one.clone())]);
        let b = UniPoly::new(ring.clone(), Var::C, vec![(1, t.minus(&one)), (0, one)]);
        match gcd_uni(&a, &b) {
            Err(Error::ZeroDivisor(f)) => assert_eq!(f, "t - 1"),
            other => panic!("expected zero divisor, got {other:?}"),
        }
    }

    fn small_poly() -> impl Strategy<Value = UniPoly<Rational>> {
        prop::collection::vec((-6i64..6, 1i64..4), 1..4).prop_map(|cs| {
            let coeffs = cs.into_iter().map(|(n, d)| Rational::frac(n, d)).collect();
            UniPoly::from_coeffs(Rationals, Var::C, coeffs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn gcd_divides_and_is_greatest(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
            let a = &f * &h;
            let b = &g * &h;
            let d = gcd_uni(&a, &b).unwrap();
            prop_assert!(a.exact_div(&d).is_ok());
            prop_assert!(b.exact_div(&d).is_ok());
            // any common divisor (h here) divides the gcd
            prop_assert!(d.exact_div(&h).is_ok());
            prop_assert_eq!(&d, &euclid_gcd(&a, &b).unwrap());
        }
    }
}
