use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Scalar, ScalarRing};
use super::unipoly::{UniPoly, Var, NEG_INFINITY};
use crate::error::{Error, Result};

/// Polynomial in `X` and `C`. Terms are `(x_exp, c_exp, coeff)`, sorted
/// lexicographically descending with the `X` exponent major, with no zero
/// coefficients, so structural and mathematical equality coincide.
#[derive(Clone)]
pub struct BiPoly<S: Scalar> {
    ring: S::Ring,
    terms: Vec<(u64, u64, S)>,
}

impl<S: Scalar> PartialEq for BiPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<S: Scalar> Eq for BiPoly<S> {}

impl<S: Scalar> fmt::Debug for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self)
    }
}

impl<S: Scalar> BiPoly<S> {
    pub fn new(ring: S::Ring, mut terms: Vec<(u64, u64, S)>) -> Self {
        terms.sort_by(|a, b| (b.0, b.1).cmp(&(a.0, a.1)));
        let mut out: Vec<(u64, u64, S)> = Vec::with_capacity(terms.len());
        for (i, j, c) in terms {
            match out.last_mut() {
                Some((li, lj, lc)) if *li == i && *lj == j => *lc = lc.plus(&c),
                _ => out.push((i, j, c)),
            }
        }
        out.retain(|t| !t.2.is_zero());
        BiPoly { ring, terms: out }
    }

    pub fn zero(ring: S::Ring) -> Self {
        BiPoly { ring, terms: Vec::new() }
    }

    pub fn one(ring: S::Ring) -> Self {
        let one = ring.one();
        Self::monomial(ring, 0, 0, one)
    }

    pub fn constant(ring: S::Ring, c: S) -> Self {
        Self::monomial(ring, 0, 0, c)
    }

    pub fn monomial(ring: S::Ring, x_exp: u64, c_exp: u64, c: S) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(x_exp, c_exp, c)] };
        BiPoly { ring, terms }
    }

    pub fn x(ring: S::Ring) -> Self {
        let one = ring.one();
        Self::monomial(ring, 1, 0, one)
    }

    pub fn c(ring: S::Ring) -> Self {
        let one = ring.one();
        Self::monomial(ring, 0, 1, one)
    }

    /// Embeds a univariate polynomial in `X` or `C`.
    pub fn from_uni(p: &UniPoly<S>) -> Result<Self> {
        let terms = match p.var() {
            Var::X => p.terms().iter().map(|(e, c)| (*e, 0, c.clone())).collect(),
            Var::C => p.terms().iter().map(|(e, c)| (0, *e, c.clone())).collect(),
            Var::T => return Err(Error::InvalidArgument("bivariate polynomials use X and C".into())),
        };
        Ok(BiPoly { ring: p.ring().clone(), terms })
    }

    pub fn ring(&self) -> &S::Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(u64, u64, S)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1 == 0 && self.terms[0].2.is_one()
    }

    /// Degree in `X`, or [`NEG_INFINITY`] for zero.
    pub fn degree_x(&self) -> i64 {
        self.terms.first().map_or(NEG_INFINITY, |t| t.0 as i64)
    }

    /// Degree in `C`, or [`NEG_INFINITY`] for zero.
    pub fn degree_c(&self) -> i64 {
        self.terms.iter().map(|t| t.1 as i64).max().unwrap_or(NEG_INFINITY)
    }

    fn deg_c_u(&self) -> u64 {
        self.terms.iter().map(|t| t.1).max().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::IncompatibleRings);
        }
        Ok(())
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: &S| if negate_other { c.negate() } else { c.clone() };
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Less
            } else if j == b.len() {
                std::cmp::Ordering::Greater
            } else {
                (a[i].0, a[i].1).cmp(&(b[j].0, b[j].1))
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, b[j].1, fix(&b[j].2)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { a[i].2.minus(&b[j].2) } else { a[i].2.plus(&b[j].2) };
                    if !c.is_zero() {
                        out.push((a[i].0, a[i].1, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        BiPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    /// Kronecker map `X^i C^j ↦ Y^(i·width + j)`, injective while `j < width`.
    fn pack(&self, width: u64) -> Vec<(u64, S)> {
        self.terms.iter().map(|(i, j, c)| (i * width + j, c.clone())).collect()
    }

    fn unpack(ring: S::Ring, terms: Vec<(u64, S)>, width: u64) -> Self {
        let terms = terms.into_iter().map(|(e, c)| (e / width, e % width, c)).collect();
        BiPoly { ring, terms }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        let width = self.deg_c_u() + other.deg_c_u() + 1;
        let pa = self.pack(width);
        let prod = if std::ptr::eq(self, other) {
            S::mul_terms(&pa, &pa)
        } else {
            S::mul_terms(&pa, &other.pack(width))
        };
        Ok(Self::unpack(self.ring.clone(), prod, width))
    }

    /// Exact quotient; a nonzero remainder yields `NotDivisible`.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check(den)?;
        if den.is_zero() {
            return Err(Error::ZeroOperand);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let width = self.deg_c_u() + 1;
        if den.deg_c_u() >= width || den.degree_x() > self.degree_x() {
            return Err(Error::NotDivisible);
        }
        let q = S::div_terms(&self.pack(width), &den.pack(width))?;
        let q = Self::unpack(self.ring.clone(), q, width);
        // Without carries between C-slots the packed identity lifts back.
        if q.deg_c_u() + den.deg_c_u() >= width {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    pub fn scale(&self, c: &S) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(i, j, x)| (*i, *j, x.times(c)))
            .filter(|t| !t.2.is_zero())
            .collect();
        BiPoly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.ring.clone());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `X` or `C`.
    pub fn derivative(&self, var: Var) -> Result<Self> {
        let pick = match var {
            Var::X => |t: &(u64, u64, S)| t.0,
            Var::C => |t: &(u64, u64, S)| t.1,
            Var::T => return Err(Error::InvalidArgument("no variable t in a bivariate polynomial".into())),
        };
        let terms = self
            .terms
            .iter()
            .filter(|t| pick(t) > 0)
            .map(|t| {
                let k = self.ring.from_rational(&super::Rational::from_i64(pick(t) as i64));
                let c = t.2.times(&k);
                match var {
                    Var::X => (t.0 - 1, t.1, c),
                    _ => (t.0, t.1 - 1, c),
                }
            })
            .filter(|t| !t.2.is_zero())
            .collect::<Vec<_>>();
        // A uniform shift keeps the canonical order.
        Ok(BiPoly { ring: self.ring.clone(), terms })
    }

    /// Coefficients of `X^0, X^1, ...` as polynomials in `C`.
    pub fn x_rows(&self) -> Vec<UniPoly<S>> {
        let n = self.terms.first().map_or(0, |t| t.0 as usize + 1);
        let mut rows: Vec<Vec<(u64, S)>> = vec![Vec::new(); n];
        for (i, j, c) in &self.terms {
            rows[*i as usize].push((*j, c.clone()));
        }
        rows.into_iter()
            .map(|r| UniPoly::from_canonical(self.ring.clone(), Var::C, r))
            .collect()
    }

    pub fn from_x_rows(ring: S::Ring, rows: &[UniPoly<S>]) -> Self {
        let mut terms = Vec::new();
        for (i, row) in rows.iter().enumerate().rev() {
            for (j, c) in row.terms() {
                terms.push((i as u64, *j, c.clone()));
            }
        }
        BiPoly { ring, terms }
    }

    /// Leading coefficient in `X`, a polynomial in `C`.
    pub fn leading_coeff_x(&self) -> UniPoly<S> {
        match self.terms.first() {
            None => UniPoly::zero(self.ring.clone(), Var::C),
            Some(t) => {
                let top = t.0;
                let row = self.terms.iter().take_while(|t| t.0 == top).map(|t| (t.1, t.2.clone())).collect();
                UniPoly::from_canonical(self.ring.clone(), Var::C, row)
            }
        }
    }

    /// Leading coefficient in `C`, a polynomial in `X`.
    pub fn leading_coeff_c(&self) -> UniPoly<S> {
        let top = self.deg_c_u();
        let terms = self.terms.iter().filter(|t| t.1 == top).map(|t| (t.0, t.2.clone())).collect();
        UniPoly::new(self.ring.clone(), Var::X, terms)
    }

    /// Monic in `X`: the leading coefficient in `X` is the constant 1.
    pub fn is_monic_x(&self) -> bool {
        self.leading_coeff_x().is_one()
    }

    pub fn is_monic_c(&self) -> bool {
        self.leading_coeff_c().is_one()
    }

    /// Substitutes `X = x`, leaving a polynomial in `C`.
    pub fn eval_x(&self, x: &S) -> UniPoly<S> {
        let rows = self.x_rows();
        let mut acc = UniPoly::zero(self.ring.clone(), Var::C);
        for row in rows.iter().rev() {
            acc = &acc.scale(x) + row;
        }
        acc
    }

    /// Substitutes `C = c`, leaving a polynomial in `X`.
    pub fn eval_c(&self, c: &S) -> UniPoly<S> {
        let terms = self
            .x_rows()
            .iter()
            .enumerate()
            .map(|(i, row)| (i as u64, row.eval(c)))
            .collect();
        UniPoly::new(self.ring.clone(), Var::X, terms)
    }

    pub fn eval(&self, x: &S, c: &S) -> S {
        self.eval_x(x).eval(c)
    }

    /// `self(inner(X, C), C)`.
    pub fn compose_x(&self, inner: &Self) -> Result<Self> {
        self.check(inner)?;
        let rows = self.x_rows();
        let mut acc = BiPoly::zero(self.ring.clone());
        for row in rows.iter().rev() {
            acc = &(&acc * inner) + &BiPoly::from_uni(row)?;
        }
        Ok(acc)
    }

    pub fn map_coeffs<T: Scalar>(&self, ring: T::Ring, f: impl Fn(&S) -> T) -> BiPoly<T> {
        let terms = self.terms.iter().map(|(i, j, c)| (*i, *j, f(c))).collect();
        BiPoly::new(ring, terms)
    }

    /// Fallible coefficient map, e.g. to pull rational coefficients out of a
    /// quotient ring.
    pub fn try_map_coeffs<T: Scalar>(&self, ring: T::Ring, f: impl Fn(&S) -> Option<T>) -> Option<BiPoly<T>> {
        let terms = self
            .terms
            .iter()
            .map(|(i, j, c)| f(c).map(|t| (*i, *j, t)))
            .collect::<Option<Vec<_>>>()?;
        Some(BiPoly::new(ring, terms))
    }
}

macro_rules! bipoly_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a, S: Scalar> $tr<&'a BiPoly<S>> for &'a BiPoly<S> {
            type Output = BiPoly<S>;
            /// Panics on incompatible rings; use the `try_` form to get an error.
            fn $m(self, rhs: &'a BiPoly<S>) -> BiPoly<S> {
                self.$try(rhs).expect("incompatible polynomial rings")
            }
        }
    };
}
bipoly_op!(Add, add, try_add);
bipoly_op!(Sub, sub, try_sub);
bipoly_op!(Mul, mul, try_mul);

impl<'a, S: Scalar> Neg for &'a BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        let terms = self.terms.iter().map(|(i, j, c)| (*i, *j, c.negate())).collect();
        BiPoly { ring: self.ring.clone(), terms }
    }
}
