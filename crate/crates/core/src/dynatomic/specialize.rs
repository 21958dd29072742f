//! The same constructions with one variable fixed to a value.
//!
//! Fixing `X = x` gives polynomials in `C` (the parameter space seen from a
//! point); fixing `C = c` gives polynomials in `X`. Both are much smaller
//! than the bivariate objects and work over any coefficient ring, which is
//! what realizability decisions and modular degree checks need.

use super::combine::{gen_dynatomic_from, phi_from};
use super::{MapSpec, PortraitLabel};
use crate::error::Result;
use crate::exactmath::{Scalar, UniPoly, Var};

/// `[x, f_C(x), ..., f_C^k(x)]` as polynomials in `C`.
pub fn iterates_in_c<S: Scalar>(x: &S, spec: MapSpec, k: u32) -> Vec<UniPoly<S>> {
    let ring = x.ring();
    let c = UniPoly::variable(ring.clone(), Var::C);
    let mut out = vec![UniPoly::constant(ring, Var::C, x.clone())];
    for _ in 0..k {
        let next = &out.last().unwrap().pow(spec.d() as u64) + &c;
        out.push(next);
    }
    out
}

/// `[X, f_c(X), ..., f_c^k(X)]` as polynomials in `X` for a fixed `c`.
pub fn iterates_in_x<S: Scalar>(c: &S, spec: MapSpec, k: u32) -> Vec<UniPoly<S>> {
    let ring = c.ring();
    let shift = UniPoly::constant(ring.clone(), Var::X, c.clone());
    let mut out = vec![UniPoly::variable(ring, Var::X)];
    for _ in 0..k {
        let next = &out.last().unwrap().pow(spec.d() as u64) + &shift;
        out.push(next);
    }
    out
}

/// `Φ_{M,N}(x, C)`.
pub fn gen_dynatomic_in_c<S: Scalar>(x: &S, spec: MapSpec, label: PortraitLabel) -> Result<UniPoly<S>> {
    let seq = iterates_in_c(x, spec, label.m() + label.n());
    gen_dynatomic_from(&seq, label.m(), label.n())
}

/// `Φ_{M,N}(X, c)`.
pub fn gen_dynatomic_in_x<S: Scalar>(c: &S, spec: MapSpec, label: PortraitLabel) -> Result<UniPoly<S>> {
    let seq = iterates_in_x(c, spec, label.m() + label.n());
    gen_dynatomic_from(&seq, label.m(), label.n())
}

/// `Φ_N(seq[j])` for a sequence of iterates produced by this module.
pub fn phi_at_iterate<S: Scalar>(seq: &[UniPoly<S>], j: usize, n: u32) -> Result<UniPoly<S>> {
    phi_from(seq, j, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynatomic::gen_dynatomic_poly;
    use crate::exactmath::modp::PrimeField;
    use crate::exactmath::{parse_unipoly, Rational};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn specializations_agree_with_bivariate() {
        for d in 2..=3 {
            let spec = MapSpec::new(d).unwrap();
            for m in 0..=2 {
                for n in 1..=3 {
                    let label = PortraitLabel::new(m, n).unwrap();
                    let full = gen_dynatomic_poly(spec, label).unwrap();
                    for v in ["0", "-1/2", "3", "2/7"] {
                        let v = q(v);
                        assert_eq!(gen_dynatomic_in_c(&v, spec, label).unwrap(), full.eval_x(&v));
                        assert_eq!(gen_dynatomic_in_x(&v, spec, label).unwrap(), full.eval_c(&v));
                    }
                }
            }
        }
    }

    #[test]
    fn specialized_values() {
        let two = MapSpec::new(2).unwrap();
        let at = |x: &str, m, n| gen_dynatomic_in_c(&q(x), two, PortraitLabel::new(m, n).unwrap()).unwrap();
        assert_eq!(at("-1/2", 0, 2), parse_unipoly("C + 3/4", Var::C).unwrap());
        assert_eq!(at("1", 2, 2), parse_unipoly("(C + 1)^2", Var::C).unwrap());
        assert_eq!(at("1/2", 1, 2), parse_unipoly("C + 3/4", Var::C).unwrap());
    }

    #[test]
    fn works_over_prime_fields() {
        let field = PrimeField::new(1_000_003).unwrap();
        let spec = MapSpec::new(3).unwrap();
        let label = PortraitLabel::new(1, 2).unwrap();
        let full = gen_dynatomic_poly(spec, label).unwrap();
        let c = q("5/7");
        let reduced = gen_dynatomic_in_x(&field.try_from_rational(&c).unwrap(), spec, label).unwrap();
        let expected = full.eval_c(&c).map_coeffs(field, |r| field.try_from_rational(r).unwrap());
        assert_eq!(reduced, expected);
    }
}
