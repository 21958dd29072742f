use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Scalar, ScalarRing};
use crate::error::{Error, Result};

/// Degree reported for the zero polynomial.
pub const NEG_INFINITY: i64 = i64::MIN;

/// Variable tags. Bivariate polynomials always use `X` (major) and `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    C,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::C => "C",
            Var::T => "t",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "X" => Some(Var::X),
            "C" => Some(Var::C),
            "t" => Some(Var::T),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Univariate polynomial stored as `(exponent, coefficient)` pairs with
/// strictly decreasing exponents and no zero coefficients.
#[derive(Clone)]
pub struct UniPoly<S: Scalar> {
    ring: S::Ring,
    var: Var,
    terms: Vec<(u64, S)>,
}

impl<S: Scalar> PartialEq for UniPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.var == other.var && self.ring == other.ring && self.terms == other.terms
    }
}

impl<S: Scalar> Eq for UniPoly<S> {}

impl<S: Scalar> fmt::Debug for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

fn canonicalize<S: Scalar>(mut terms: Vec<(u64, S)>) -> Vec<(u64, S)> {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(u64, S)> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc = lc.plus(&c),
            _ => out.push((e, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(ring: S::Ring, var: Var, terms: Vec<(u64, S)>) -> Self {
        UniPoly { ring, var, terms: canonicalize(terms) }
    }

    /// Builds from terms already in canonical order; skips the sort.
    pub(crate) fn from_canonical(ring: S::Ring, var: Var, terms: Vec<(u64, S)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        UniPoly { ring, var, terms }
    }

    /// From ascending coefficients `c_0, c_1, ...`.
    pub fn from_coeffs(ring: S::Ring, var: Var, coeffs: Vec<S>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c))
            .collect();
        UniPoly { ring, var, terms }
    }

    pub fn zero(ring: S::Ring, var: Var) -> Self {
        UniPoly { ring, var, terms: Vec::new() }
    }

    pub fn one(ring: S::Ring, var: Var) -> Self {
        let one = ring.one();
        Self::constant(ring, var, one)
    }

    pub fn constant(ring: S::Ring, var: Var, c: S) -> Self {
        Self::monomial(ring, var, 0, c)
    }

    pub fn monomial(ring: S::Ring, var: Var, e: u64, c: S) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(e, c)] };
        UniPoly { ring, var, terms }
    }

    /// The polynomial consisting of the bare variable.
    pub fn variable(ring: S::Ring, var: Var) -> Self {
        let one = ring.one();
        Self::monomial(ring, var, 1, one)
    }

    pub fn ring(&self) -> &S::Ring {
        &self.ring
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn terms(&self) -> &[(u64, S)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(u64, S)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e == 0)
    }

    /// Degree, or [`NEG_INFINITY`] for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.first().map_or(NEG_INFINITY, |(e, _)| *e as i64)
    }

    pub fn deg(&self) -> Option<u64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, e: u64) -> S {
        self.terms
            .binary_search_by(|(te, _)| e.cmp(te))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.ring.zero())
    }

    /// Ascending dense coefficient vector.
    pub fn to_dense(&self) -> Vec<S> {
        let n = self.deg().map_or(0, |d| d as usize + 1);
        let mut v = vec![self.ring.zero(); n];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring || self.var != other.var {
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
            if j == b.len() || (i < a.len() && a[i].0 > b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 > a[i].0 {
                out.push((b[j].0, fix(&b[j].1)));
                j += 1;
            } else {
                let c = if negate_other { a[i].1.minus(&b[j].1) } else { a[i].1.plus(&b[j].1) };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        UniPoly { ring: self.ring.clone(), var: self.var, terms: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone(), self.var));
        }
        let terms = S::mul_terms(&self.terms, &other.terms);
        Ok(UniPoly { ring: self.ring.clone(), var: self.var, terms })
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring.clone(), self.var);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (*e, x.times(c)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        UniPoly { ring: self.ring.clone(), var: self.var, terms }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.ring.clone(), self.var);
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

    /// Exact quotient `self / den`; a nonzero remainder is an error.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check(den)?;
        if den.is_zero() {
            return Err(Error::ZeroOperand);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if den.degree() > self.degree() {
            return Err(Error::NotDivisible);
        }
        let terms = S::div_terms(&self.terms, &den.terms)?;
        Ok(UniPoly { ring: self.ring.clone(), var: self.var, terms })
    }

    /// Euclidean division over a field: `self = q * den + r`, `deg r < deg den`.
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self)> {
        self.check(den)?;
        let lc = den.leading_coeff().ok_or(Error::ZeroOperand)?;
        let inv = lc.inverse()?;
        let db = den.deg().unwrap();
        let mut rem = self.to_dense();
        let mut q = Vec::new();
        if let Some(da) = self.deg() {
            if da >= db {
                let mut i = da - db;
                loop {
                    let r = &rem[(i + db) as usize];
                    if !r.is_zero() {
                        let qc = r.times(&inv);
                        for (e, c) in &den.terms {
                            let k = (e + i) as usize;
                            rem[k] = rem[k].minus(&qc.times(c));
                        }
                        q.push((i, qc));
                    }
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
        let quot = UniPoly { ring: self.ring.clone(), var: self.var, terms: q };
        let rem = UniPoly::from_coeffs(self.ring.clone(), self.var, rem);
        Ok((quot, rem))
    }

    pub fn rem(&self, den: &Self) -> Result<Self> {
        Ok(self.div_rem(den)?.1)
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Result<Self> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(lc) if lc.is_one() => Ok(self.clone()),
            Some(lc) => Ok(self.scale(&lc.inverse()?)),
        }
    }

    pub fn derivative(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| *e > 0)
            .map(|(e, c)| {
                let k = self.ring.from_rational(&super::Rational::from_i64(*e as i64));
                (e - 1, c.times(&k))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        UniPoly { ring: self.ring.clone(), var: self.var, terms }
    }

    /// Horner evaluation over the sparse term list.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = self.ring.zero();
        let mut prev: Option<u64> = None;
        for (e, c) in &self.terms {
            if let Some(p) = prev {
                acc = acc.times(&x.pow(p - e));
            }
            acc = acc.plus(c);
            prev = Some(*e);
        }
        if let Some(p) = prev {
            acc = acc.times(&x.pow(p));
        }
        acc
    }

    /// `self(inner)`, keeping `inner`'s variable.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.ring != inner.ring {
            return Err(Error::IncompatibleRings);
        }
        let mut acc = UniPoly::zero(self.ring.clone(), inner.var);
        let mut prev: Option<u64> = None;
        for (e, c) in &self.terms {
            if let Some(p) = prev {
                acc = &acc * &inner.pow(p - e);
            }
            acc = &acc + &UniPoly::constant(self.ring.clone(), inner.var, c.clone());
            prev = Some(*e);
        }
        if let Some(p) = prev {
            acc = &acc * &inner.pow(p);
        }
        Ok(acc)
    }

    pub fn map_coeffs<T: Scalar>(&self, ring: T::Ring, f: impl Fn(&S) -> T) -> UniPoly<T> {
        let terms = self.terms.iter().map(|(e, c)| (*e, f(c))).collect();
        UniPoly::new(ring, self.var, terms)
    }
}

macro_rules! poly_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a, S: Scalar> $tr<&'a UniPoly<S>> for &'a UniPoly<S> {
            type Output = UniPoly<S>;
            /// Panics on incompatible rings; use the `try_` form to get an error.
            fn $m(self, rhs: &'a UniPoly<S>) -> UniPoly<S> {
                self.$try(rhs).expect("incompatible polynomial rings")
            }
        }
    };
}
poly_op!(Add, add, try_add);
poly_op!(Sub, sub, try_sub);
poly_op!(Mul, mul, try_mul);

impl<'a, S: Scalar> Neg for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn neg(self) -> UniPoly<S> {
        let terms = self.terms.iter().map(|(e, c)| (*e, c.negate())).collect();
        UniPoly { ring: self.ring.clone(), var: self.var, terms }
    }
}

/// Dense-accumulator product of two canonical term lists.
pub(crate) fn schoolbook_mul<S: Scalar>(a: &[(u64, S)], b: &[(u64, S)]) -> Vec<(u64, S)> {
    let n = (a[0].0 + b[0].0) as usize + 1;
    let mut acc: Vec<Option<S>> = vec![None; n];
    for (ea, ca) in a {
        for (eb, cb) in b {
            let k = (ea + eb) as usize;
            let p = ca.times(cb);
            acc[k] = Some(match acc[k].take() {
                Some(v) => v.plus(&p),
                None => p,
            });
        }
    }
    acc.into_iter()
        .enumerate()
        .rev()
        .filter_map(|(e, c)| c.filter(|c| !c.is_zero()).map(|c| (e as u64, c)))
        .collect()
}

/// Long division over a field that must leave no remainder.
pub(crate) fn long_div_exact<S: Scalar>(a: &[(u64, S)], b: &[(u64, S)]) -> Result<Vec<(u64, S)>> {
    let (da, db) = (a[0].0, b[0].0);
    if db > da {
        return Err(Error::NotDivisible);
    }
    let ring = a[0].1.ring();
    let inv = b[0].1.inverse()?;
    let mut rem = vec![ring.zero(); da as usize + 1];
    for (e, c) in a {
        rem[*e as usize] = c.clone();
    }
    let mut q = Vec::new();
    let mut i = da - db;
    loop {
        let r = &rem[(i + db) as usize];
        if !r.is_zero() {
            let qc = r.times(&inv);
            rem[(i + db) as usize] = ring.zero();
            for (e, c) in &b[1..] {
                let k = (e + i) as usize;
                rem[k] = rem[k].minus(&qc.times(c));
            }
            q.push((i, qc));
        }
        if i == 0 {
            break;
        }
        i -= 1;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::NotDivisible);
    }
    Ok(q)
}
