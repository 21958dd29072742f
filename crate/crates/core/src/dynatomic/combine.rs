//! Möbius products over a sequence of iterates.
//!
//! Every construction in this module has the same shape: given values
//! `y_k = f^k(y_0)` (as bivariate polynomials, or specialized in one
//! variable), `Φ_N(y_j) = ∏_{n|N} (y_{j+n} - y_j)^{μ(N/n)}`. Collecting the
//! factors with positive and negative exponent separately lets each result
//! be produced with a single exact division.

use super::{divisors, mobius};
use crate::error::Result;
use crate::exactmath::{BiPoly, Scalar, UniPoly};

pub(crate) trait PolyOps: Clone {
    fn unit_like(&self) -> Self;
    fn minus(&self, other: &Self) -> Result<Self>;
    fn times(&self, other: &Self) -> Result<Self>;
    fn divide(&self, other: &Self) -> Result<Self>;
    fn size_hint(&self) -> usize;
}

impl<S: Scalar> PolyOps for UniPoly<S> {
    fn unit_like(&self) -> Self {
        UniPoly::one(self.ring().clone(), self.var())
    }
    fn minus(&self, other: &Self) -> Result<Self> {
        self.try_sub(other)
    }
    fn times(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }
    fn divide(&self, other: &Self) -> Result<Self> {
        self.exact_div(other)
    }
    fn size_hint(&self) -> usize {
        self.terms().len()
    }
}

impl<S: Scalar> PolyOps for BiPoly<S> {
    fn unit_like(&self) -> Self {
        BiPoly::one(self.ring().clone())
    }
    fn minus(&self, other: &Self) -> Result<Self> {
        self.try_sub(other)
    }
    fn times(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }
    fn divide(&self, other: &Self) -> Result<Self> {
        self.exact_div(other)
    }
    fn size_hint(&self) -> usize {
        self.terms().len()
    }
}

/// Numerator and denominator factors of a Möbius product.
pub(crate) struct Factors<P> {
    num: Vec<P>,
    den: Vec<P>,
}

impl<P: PolyOps> Factors<P> {
    pub fn new() -> Self {
        Factors { num: Vec::new(), den: Vec::new() }
    }

    /// Records `Φ_N(y_j)^sign` where `seq[k] = y_k`.
    pub fn push_phi(&mut self, seq: &[P], j: usize, n: u32, invert: bool) -> Result<()> {
        for k in divisors(n as u64) {
            let mu = mobius(n as u64 / k);
            if mu == 0 {
                continue;
            }
            let factor = seq[j + k as usize].minus(&seq[j])?;
            if (mu > 0) != invert {
                self.num.push(factor);
            } else {
                self.den.push(factor);
            }
        }
        Ok(())
    }

    fn product(mut items: Vec<P>, like: &P) -> Result<P> {
        if items.is_empty() {
            return Ok(like.unit_like());
        }
        // Multiplying small factors first keeps intermediate sizes balanced.
        items.sort_by_key(|p| p.size_hint());
        let mut acc = items[0].clone();
        for p in &items[1..] {
            acc = acc.times(p)?;
        }
        Ok(acc)
    }

    pub fn evaluate(self, like: &P) -> Result<P> {
        let num = Self::product(self.num, like)?;
        if self.den.is_empty() {
            return Ok(num);
        }
        let den = Self::product(self.den, like)?;
        num.divide(&den)
    }
}

/// `Φ_N(y_0)` for `M = 0`, otherwise `Φ_N(y_M) / Φ_N(y_{M-1})`.
/// Requires `seq.len() > M + N`.
pub(crate) fn gen_dynatomic_from<P: PolyOps>(seq: &[P], m: u32, n: u32) -> Result<P> {
    assert!(seq.len() > (m + n) as usize, "not enough iterates");
    let mut f = Factors::new();
    f.push_phi(seq, m as usize, n, false)?;
    if m > 0 {
        f.push_phi(seq, m as usize - 1, n, true)?;
    }
    f.evaluate(&seq[0])
}

/// `Φ_N(y_j)` alone.
pub(crate) fn phi_from<P: PolyOps>(seq: &[P], j: usize, n: u32) -> Result<P> {
    assert!(seq.len() > j + n as usize, "not enough iterates");
    let mut f = Factors::new();
    f.push_phi(seq, j, n, false)?;
    f.evaluate(&seq[0])
}
