use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::format::parse_quotient_element;
use crate::exactmath::gcd::gcd_uni;
use crate::exactmath::roots::distinct_rational_roots;
use crate::exactmath::{QuotientElement, QuotientRing, Rational, Rationals, Scalar, ScalarRing, UniPoly, Var};

/// Total coefficient size, in bits, past which an algebraic orbit is abandoned.
const ALGEBRAIC_SIZE_BUDGET: u64 = 1 << 16;

/// Fields in which points and parameters may live.
pub trait FieldPoint: Scalar {
    /// `true` when iterating `z ↦ z^d + c` from `z` can no longer be
    /// usefully continued. For rationals this is a proof that the orbit is
    /// infinite; for algebraic values it is a size budget.
    fn orbit_stops(z: &Self, c: &Self, d: u32) -> bool;

    /// Distinct rational roots of a polynomial in `C` over this field.
    fn rational_roots_of(p: &UniPoly<Self>) -> Result<Vec<Rational>>;
}

impl FieldPoint for Rational {
    /// Two escape tests, each forcing an infinite orbit:
    ///
    /// * `|z| > max(|c|, 2)` gives `|f(z)| ≥ |z|^2 - |c| > |z|(|z| - 1) > |z|`,
    ///   so absolute values increase strictly from then on.
    /// * If `den(z)^d` does not divide `den(c)`, some prime `p` has
    ///   `v_p(z) < min(0, v_p(c)/d)`; then `v_p(f(z)) = d·v_p(z) < v_p(z)` and
    ///   the same holds for `f(z)`, so valuations decrease strictly.
    fn orbit_stops(z: &Self, c: &Self, d: u32) -> bool {
        let radius = std::cmp::max(c.abs(), Rational::from_i64(2));
        if z.abs() > radius {
            return true;
        }
        let dz = z.denom();
        if !dz.is_one() {
            let needed: BigInt = num_traits::pow(dz.clone(), d as usize);
            if !c.denom().is_multiple_of(&needed) {
                return true;
            }
        }
        false
    }

    fn rational_roots_of(p: &UniPoly<Self>) -> Result<Vec<Rational>> {
        distinct_rational_roots(p)
    }
}

impl FieldPoint for QuotientElement {
    fn orbit_stops(z: &Self, _c: &Self, _d: u32) -> bool {
        let bits: u64 = z.representative().terms().iter().map(|(_, c)| c.bits()).sum();
        bits > ALGEBRAIC_SIZE_BUDGET
    }

    /// A rational `c` is a root exactly when it is a common root of the
    /// coordinate polynomials `P_i(C)` in `P = Σ t^i P_i(C)`.
    fn rational_roots_of(p: &UniPoly<Self>) -> Result<Vec<Rational>> {
        let Some(lead) = p.leading_coeff() else { return Err(Error::ZeroOperand) };
        let width = lead.parent().degree();
        let mut g = UniPoly::zero(Rationals, Var::C);
        for i in 0..width {
            let coord = UniPoly::new(
                Rationals,
                Var::C,
                p.terms().iter().map(|(e, c)| (*e, c.representative().coeff(i))).collect(),
            );
            g = gcd_uni(&g, &coord)?;
        }
        if g.is_constant() {
            return Ok(Vec::new());
        }
        distinct_rational_roots(&g)
    }
}

/// A point or parameter value: rational, or in a number field `ℚ[t]/(m)`.
#[derive(Clone, Debug, PartialEq)]
pub enum PointValue {
    Rational(Rational),
    Algebraic(QuotientElement),
}

impl PointValue {
    /// Parses `p/q` or an integer, or a polynomial in `t` when a field is given.
    pub fn parse(s: &str, field: Option<&QuotientRing>) -> Result<Self> {
        match field {
            None => Ok(PointValue::Rational(s.parse()?)),
            Some(ring) => Ok(PointValue::Algebraic(parse_quotient_element(s, ring)?)),
        }
    }

    /// Brings two values into a common field.
    pub fn common_field(a: &PointValue, b: &PointValue) -> Result<(PointValue, PointValue)> {
        use PointValue::*;
        match (a, b) {
            (Algebraic(x), Rational(r)) => Ok((a.clone(), Algebraic(x.parent().from_rational(r)))),
            (Rational(r), Algebraic(y)) => Ok((Algebraic(y.parent().from_rational(r)), b.clone())),
            (Algebraic(x), Algebraic(y)) if x.parent() != y.parent() => Err(Error::IncompatibleRings),
            _ => Ok((a.clone(), b.clone())),
        }
    }
}

impl fmt::Display for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointValue::Rational(r) => write!(f, "{r}"),
            PointValue::Algebraic(q) => write!(f, "{q}"),
        }
    }
}
