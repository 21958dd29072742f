use std::fmt;
use std::sync::Arc;

use super::rational::{Rational, Rationals};
use super::scalar::{Scalar, ScalarRing};
use super::unipoly::{UniPoly, Var};
use crate::error::{Error, Result};

struct Inner {
    modulus: UniPoly<Rational>,
    irreducible: bool,
}

/// `ℚ[t]/(m(t))` for a monic modulus of degree at least one.
///
/// Irreducibility of `m` is never tested. The caller asserts it; an inversion
/// that runs into a zero divisor reports the factor of `m` it found.
#[derive(Clone)]
pub struct QuotientRing(Arc<Inner>);

impl QuotientRing {
    /// The modulus is rescaled to be monic and relabelled in `t`.
    pub fn new(modulus: UniPoly<Rational>, irreducible: bool) -> Result<Self> {
        if modulus.degree() < 1 {
            return Err(Error::InvalidArgument("quotient modulus must have degree >= 1".into()));
        }
        let modulus = modulus.monic()?.with_var(Var::T);
        Ok(QuotientRing(Arc::new(Inner { modulus, irreducible })))
    }

    pub fn modulus(&self) -> &UniPoly<Rational> {
        &self.0.modulus
    }

    pub fn degree(&self) -> u64 {
        self.0.modulus.deg().unwrap()
    }

    pub fn is_irreducible_asserted(&self) -> bool {
        self.0.irreducible
    }

    /// Reduces `rep` modulo the modulus.
    pub fn element(&self, rep: UniPoly<Rational>) -> QuotientElement {
        let rep = rep.with_var(Var::T);
        let rep = if rep.degree() >= self.degree() as i64 {
            rep.rem(&self.0.modulus).expect("modulus is nonzero")
        } else {
            rep
        };
        QuotientElement { ring: self.clone(), rep }
    }

    /// The class of `t`.
    pub fn generator(&self) -> QuotientElement {
        self.element(UniPoly::variable(Rationals, Var::T))
    }
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.irreducible == other.0.irreducible && self.0.modulus == other.0.modulus)
    }
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({})", self.0.modulus)
    }
}

impl ScalarRing for QuotientRing {
    type Elem = QuotientElement;

    fn zero(&self) -> QuotientElement {
        QuotientElement { ring: self.clone(), rep: UniPoly::zero(Rationals, Var::T) }
    }

    fn one(&self) -> QuotientElement {
        self.from_rational(&Rational::one())
    }

    fn from_rational(&self, r: &Rational) -> QuotientElement {
        QuotientElement { ring: self.clone(), rep: UniPoly::constant(Rationals, Var::T, r.clone()) }
    }

    fn is_field(&self) -> bool {
        self.0.irreducible
    }
}

/// Residue class in a [`QuotientRing`], kept reduced.
#[derive(Clone)]
pub struct QuotientElement {
    ring: QuotientRing,
    rep: UniPoly<Rational>,
}

impl QuotientElement {
    pub fn representative(&self) -> &UniPoly<Rational> {
        &self.rep
    }

    pub fn parent(&self) -> &QuotientRing {
        &self.ring
    }
}

impl PartialEq for QuotientElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.rep == other.rep
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {:?}", self.rep, self.ring)
    }
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)` and `g = gcd(a, m)` monic.
fn half_ext_gcd(a: &UniPoly<Rational>, m: &UniPoly<Rational>) -> Result<(UniPoly<Rational>, UniPoly<Rational>)> {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut s0, mut s1) = (UniPoly::zero(Rationals, Var::T), UniPoly::one(Rationals, Var::T));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let lc = r0.leading_coeff().cloned().ok_or(Error::ZeroOperand)?;
    let inv = lc.recip()?;
    Ok((r0.scale(&inv), s0.scale(&inv)))
}

impl Scalar for QuotientElement {
    type Ring = QuotientRing;

    fn ring(&self) -> QuotientRing {
        self.ring.clone()
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    fn plus(&self, rhs: &Self) -> Self {
        QuotientElement { ring: self.ring.clone(), rep: &self.rep + &rhs.rep }
    }

    fn minus(&self, rhs: &Self) -> Self {
        QuotientElement { ring: self.ring.clone(), rep: &self.rep - &rhs.rep }
    }

    fn times(&self, rhs: &Self) -> Self {
        self.ring.element(&self.rep * &rhs.rep)
    }

    fn negate(&self) -> Self {
        QuotientElement { ring: self.ring.clone(), rep: -&self.rep }
    }

    /// Fails with `ZeroDivisor(g)` when `g = gcd(rep, m)` is a proper factor.
    fn inverse(&self) -> Result<Self> {
        if self.rep.is_zero() {
            return Err(Error::ZeroOperand);
        }
        let (g, s) = half_ext_gcd(&self.rep, self.ring.modulus())?;
        if !g.is_one() {
            return Err(Error::ZeroDivisor(g.to_string()));
        }
        Ok(self.ring.element(s))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.rep.is_constant() {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }
}
