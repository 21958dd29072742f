//! Coefficient abstraction shared by every polynomial type.

use std::fmt::{Debug, Display};

use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::Result;

/// A ring of scalars, carried by polynomials so that constants can be built
/// even when a polynomial has no terms.
pub trait ScalarRing: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Scalar<Ring = Self>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, r: &Rational) -> Self::Elem;
    /// Whether the ring is (asserted to be) a field.
    fn is_field(&self) -> bool;
}

/// An exact scalar. Binary operations assume both operands belong to the
/// same ring; polynomial code checks ring compatibility before calling them.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync {
    type Ring: ScalarRing<Elem = Self>;

    fn ring(&self) -> Self::Ring;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Result<Self>;

    /// The value as a rational number, when it is one.
    fn as_rational(&self) -> Option<Rational>;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Product of two nonempty term lists (descending exponents, no zeros).
    fn mul_terms(a: &[(u64, Self)], b: &[(u64, Self)]) -> Vec<(u64, Self)> {
        super::unipoly::schoolbook_mul(a, b)
    }

    /// Exact quotient of two nonempty term lists.
    fn div_terms(a: &[(u64, Self)], b: &[(u64, Self)]) -> Result<Vec<(u64, Self)>> {
        super::unipoly::long_div_exact(a, b)
    }

    /// Monic gcd over a field.
    fn poly_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> Result<UniPoly<Self>> {
        super::gcd::euclid_gcd(a, b)
    }
}
