//! Cyclotomic factors `Ψ^ζ_{M,N}(X, C) = Φ_N(ζ·f^{M-1}(X), C)`.
//!
//! Since `f(ζ·y) = f(y)` whenever `ζ^d = 1`, the numerator `Φ_N(f^M(X))`
//! splits as `∏_ζ Ψ^ζ` over all `d`-th roots of unity, and `Ψ^1` is the
//! denominator of the quotient defining `Φ_{M,N}`.

use super::{divisors, MapSpec, PortraitLabel, Session};
use crate::error::{Error, Result};
use crate::exactmath::{BiPoly, QuotientElement, QuotientRing, Rational, Rationals, Scalar, ScalarRing, UniPoly, Var};

/// The `n`-th cyclotomic polynomial in `t`.
pub fn cyclotomic_poly(n: u32) -> UniPoly<Rational> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let one = Rational::one();
    let mut p = UniPoly::new(Rationals, Var::T, vec![(n as u64, one.clone()), (0, -one)]);
    for k in divisors(n as u64) {
        if k < n as u64 {
            p = p.exact_div(&cyclotomic_poly(k as u32)).expect("cyclotomic factors divide t^n - 1");
        }
    }
    p
}

/// `ℚ[t]/(Φ_d^cyc(t))`, which contains every `d`-th root of unity as a power of `t`.
pub fn cyclotomic_ring(spec: MapSpec) -> QuotientRing {
    QuotientRing::new(cyclotomic_poly(spec.d()), true).expect("cyclotomic polynomials have positive degree")
}

/// `t^k` in the cyclotomic ring.
pub fn root_of_unity(ring: &QuotientRing, k: u32) -> QuotientElement {
    ring.generator().pow(k as u64)
}

/// `Ψ^ζ_{M,N}(X, C)` for a `d`-th root of unity `ζ` and `M ≥ 1`.
pub fn psi_factor(spec: MapSpec, label: PortraitLabel, zeta: &QuotientElement) -> Result<BiPoly<QuotientElement>> {
    psi_factor_in(&Session::new(), spec, label, zeta)
}

pub(crate) fn psi_factor_in(
    session: &Session,
    spec: MapSpec,
    label: PortraitLabel,
    zeta: &QuotientElement,
) -> Result<BiPoly<QuotientElement>> {
    if label.m() == 0 {
        return Err(Error::InvalidArgument("cyclotomic factors need preperiod M >= 1".into()));
    }
    if !zeta.pow(spec.d() as u64).is_one() {
        return Err(Error::NotRootOfUnity(spec.d()));
    }
    let ring = zeta.parent().clone();
    let lift = |p: &BiPoly<Rational>| p.map_coeffs(ring.clone(), |c| ring.from_rational(c));
    let phi = lift(&*session.dynatomic(spec, label.n())?);
    let inner = lift(&*session.iterate(spec, label.m() - 1)).scale(zeta);
    phi.compose_x(&inner)
}

/// `∏_{k=1}^{d-1} Ψ^{t^k}` with its coefficients brought back to `ℚ`, or
/// `None` if some coefficient is irrational.
pub fn psi_product(spec: MapSpec, label: PortraitLabel) -> Result<Option<BiPoly<Rational>>> {
    let session = Session::new();
    let ring = cyclotomic_ring(spec);
    let mut acc = BiPoly::one(ring.clone());
    for k in 1..spec.d() {
        let psi = psi_factor_in(&session, spec, label, &root_of_unity(&ring, k))?;
        acc = acc.try_mul(&psi)?;
    }
    Ok(acc.try_map_coeffs(Rationals, |c| c.as_rational()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynatomic::gen_dynatomic_poly;
    use crate::exactmath::format::parse_unipoly;

    fn spec(d: u32) -> MapSpec {
        MapSpec::new(d).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let t = |s| parse_unipoly(s, Var::T).unwrap();
        assert_eq!(cyclotomic_poly(1), t("t - 1"));
        assert_eq!(cyclotomic_poly(2), t("t + 1"));
        assert_eq!(cyclotomic_poly(3), t("t^2 + t + 1"));
        assert_eq!(cyclotomic_poly(4), t("t^2 + 1"));
        assert_eq!(cyclotomic_poly(6), t("t^2 - t + 1"));
        assert_eq!(cyclotomic_poly(12), t("t^4 - t^2 + 1"));
    }

    #[test]
    fn quadratic_examples() {
        let ring = cyclotomic_ring(spec(2));
        let minus_one = root_of_unity(&ring, 1);
        let psi = psi_factor(spec(2), PortraitLabel::new(1, 2).unwrap(), &minus_one).unwrap();
        assert_eq!(psi.to_string(), "X^2 - X + C + 1");
        let psi = psi_factor(spec(2), PortraitLabel::new(1, 1).unwrap(), &minus_one).unwrap();
        assert_eq!(psi.to_string(), "X^2 + X + C");
    }

    #[test]
    fn trivial_root_gives_denominator() {
        let ring = cyclotomic_ring(spec(3));
        let label = PortraitLabel::new(2, 1).unwrap();
        let psi = psi_factor(spec(3), label, &root_of_unity(&ring, 0)).unwrap();
        let s = Session::new();
        let expected = s.dynatomic(spec(3), 1).unwrap().compose_x(&s.iterate(spec(3), 1)).unwrap();
        assert_eq!(psi.try_map_coeffs(Rationals, |c| c.as_rational()).unwrap(), expected);
    }

    #[test]
    fn rejects_non_roots_of_unity() {
        let ring = cyclotomic_ring(spec(3));
        let two = ring.from_rational(&Rational::from_i64(2));
        let label = PortraitLabel::new(1, 1).unwrap();
        assert_eq!(psi_factor(spec(3), label, &two), Err(Error::NotRootOfUnity(3)));
    }

    #[test]
    fn product_recovers_generalized_dynatomic() {
        let label = PortraitLabel::new(1, 2).unwrap();
        for d in [2, 3, 4] {
            let prod = psi_product(spec(d), label).unwrap().expect("rational coefficients");
            assert_eq!(prod, gen_dynatomic_poly(spec(d), label).unwrap());
        }
    }
}
