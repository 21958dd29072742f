use std::fmt;

use serde_json::{json, Value};

use super::orbit::{orbit_portrait, OrbitReport};
use super::point::FieldPoint;
use crate::dynatomic::{divisors, gen_dynatomic_in_c, iterates_in_c, phi_at_iterate, MapSpec, PortraitLabel};
use crate::error::{Error, Result};
use crate::exactmath::format::unipoly_to_json;
use crate::exactmath::gcd::gcd_uni;
use crate::exactmath::{Rational, Scalar, UniPoly, Var};

/// `P(C) = Φ_{M,N}(x, C)`.
pub fn specialize<S: FieldPoint>(label: PortraitLabel, spec: MapSpec, x: &S) -> Result<UniPoly<S>> {
    gen_dynatomic_in_c(x, spec, label)
}

/// `f_C^{M-1}(x)`: parameters where the preperiod drops below `M`.
/// The constant 1 when `M = 0`.
pub fn preperiod_drop_factor<S: FieldPoint>(label: PortraitLabel, spec: MapSpec, x: &S) -> UniPoly<S> {
    if label.m() == 0 {
        return UniPoly::one(x.ring(), Var::C);
    }
    iterates_in_c(x, spec, label.m() - 1).pop().unwrap()
}

/// `∏_{n|N, n<N} Φ_n(f_C^M(x), C)`: parameters where the eventual period
/// is a proper divisor of `N`.
pub fn period_drop_factor<S: FieldPoint>(label: PortraitLabel, spec: MapSpec, x: &S) -> Result<UniPoly<S>> {
    let seq = iterates_in_c(x, spec, label.m() + label.n());
    let mut acc = UniPoly::one(x.ring(), Var::C);
    for n in divisors(label.n() as u64) {
        if n < label.n() as u64 {
            acc = acc.try_mul(&phi_at_iterate(&seq, label.m() as usize, n as u32)?)?;
        }
    }
    Ok(acc)
}

/// `S(C)`, the product of the preperiod-drop and period-drop factors. It is
/// the zero polynomial exactly when `x = 0` and `M = 1`.
pub fn degenerate_locus<S: FieldPoint>(label: PortraitLabel, spec: MapSpec, x: &S) -> Result<UniPoly<S>> {
    preperiod_drop_factor(label, spec, x).try_mul(&period_drop_factor(label, spec, x)?)
}

/// A rational parameter at which `x` has exactly the requested portrait.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<S> {
    pub c: Rational,
    pub orbit: OrbitReport<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealizabilityResult<S: Scalar> {
    pub x: S,
    pub label: PortraitLabel,
    pub spec: MapSpec,
    pub realizable: bool,
    pub p: UniPoly<S>,
    pub s: UniPoly<S>,
    pub pstar: UniPoly<S>,
    pub witnesses: Vec<Witness<S>>,
    pub gcd_pstar_s_is_one: bool,
}

/// Decides whether some parameter `c` gives `x` exact portrait `(M, N)`.
///
/// The roots of `P = Φ_{M,N}(x, C)` are the parameters with formal portrait
/// `(M, N)`; such a root has exact portrait `(M, N)` iff it is not a root of
/// `S`. Stripping every factor shared with `S` from `P` leaves `P*`, and the
/// answer is yes iff `deg P* ≥ 1`. Rational roots of `P*` are reported as
/// witnesses after their orbits are recomputed independently.
pub fn realizes<S: FieldPoint>(x: &S, label: PortraitLabel, spec: MapSpec) -> Result<RealizabilityResult<S>> {
    let p = specialize(label, spec, x)?;
    let s = degenerate_locus(label, spec, x)?;
    let pstar = if s.is_zero() {
        // x = 0, M = 1: every root of P has preperiod 0.
        UniPoly::one(x.ring(), Var::C)
    } else {
        strip_common_factors(&p, &s)?
    };
    let gcd_pstar_s_is_one = gcd_uni(&pstar, &s)?.is_one();
    let realizable = pstar.degree() >= 1;
    if realizable && !gcd_pstar_s_is_one {
        return Err(Error::CertificateFailure(format!("gcd(P*, S) is not 1 for x = {x}, (M,N) = {label}")));
    }

    let mut roots = if realizable { S::rational_roots_of(&pstar)? } else { Vec::new() };
    roots.sort_by(|a, b| (a.denom(), a.numer()).cmp(&(b.denom(), b.numer())));
    let ring = x.ring();
    let mut witnesses = Vec::with_capacity(roots.len());
    for c in roots {
        let orbit = orbit_portrait(x, &crate::exactmath::ScalarRing::from_rational(&ring, &c), spec, label.m() + label.n() + 1)?;
        if orbit.portrait != Some(label) {
            return Err(Error::CertificateFailure(format!(
                "witness c = {c} gives x = {x} portrait {:?}, expected {label}",
                orbit.portrait
            )));
        }
        witnesses.push(Witness { c, orbit });
    }
    Ok(RealizabilityResult { x: x.clone(), label, spec, realizable, p, s, pstar, witnesses, gcd_pstar_s_is_one })
}

/// Removes from `p` every irreducible factor it shares with the nonzero `s`.
fn strip_common_factors<S: Scalar>(p: &UniPoly<S>, s: &UniPoly<S>) -> Result<UniPoly<S>> {
    let mut p = p.clone();
    loop {
        let g = gcd_uni(&p, s)?;
        if g.degree() <= 0 {
            return Ok(p);
        }
        p = p.exact_div(&g).map_err(|e| Error::CertificateFailure(format!("gcd does not divide P: {e}")))?;
    }
}

/// Checks that every root of the squarefree polynomial `h` is a parameter
/// at which `x` has exact portrait `(M, N)`, without factoring `h`.
pub fn certificate_check<S: FieldPoint>(x: &S, label: PortraitLabel, spec: MapSpec, h: &UniPoly<S>) -> Result<bool> {
    if h.degree() < 1 {
        return Err(Error::InvalidArgument("certificate polynomial must have degree at least 1".into()));
    }
    if h.var() != Var::C {
        return Err(Error::InvalidArgument("certificate polynomial must be in C".into()));
    }
    if gcd_uni(h, &h.derivative())?.degree() > 0 {
        return Err(Error::NotSquarefree);
    }
    let p = specialize(label, spec, x)?;
    if !p.rem(h)?.is_zero() {
        return Ok(false);
    }
    let coprime = |other: &UniPoly<S>| -> Result<bool> { Ok(gcd_uni(h, other)?.is_one()) };
    if label.m() > 0 && !coprime(&preperiod_drop_factor(label, spec, x))? {
        return Ok(false);
    }
    let seq = iterates_in_c(x, spec, label.m() + label.n());
    for n in divisors(label.n() as u64) {
        if n < label.n() as u64 && !coprime(&phi_at_iterate(&seq, label.m() as usize, n as u32)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl<S: Scalar> RealizabilityResult<S> {
    pub fn deg_pstar(&self) -> i64 {
        self.pstar.degree().max(0)
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "c": w.c.to_string(),
                    "orbit": w.orbit.orbit_strings(),
                    "portrait": w.orbit.portrait_json(),
                })
            })
            .collect();
        json!({
            "x": self.x.to_string(),
            "M": self.label.m(),
            "N": self.label.n(),
            "d": self.spec.d(),
            "realizable": self.realizable,
            "P": unipoly_to_json(&self.p),
            "S": unipoly_to_json(&self.s),
            "Pstar": unipoly_to_json(&self.pstar),
            "witnesses": witnesses,
            "certificate": {
                "gcd_Pstar_S_is_one": self.gcd_pstar_s_is_one,
                "deg_Pstar": self.deg_pstar(),
            },
        })
    }
}

impl<S: Scalar> fmt::Display for RealizabilityResult<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x = {}, (M,N) = {}, d = {}", self.x, self.label, self.spec.d())?;
        writeln!(f, "realizable: {}", self.realizable)?;
        writeln!(f, "P(C) = {}", self.p)?;
        writeln!(f, "S(C) = {}", self.s)?;
        writeln!(f, "P*(C) = {}", self.pstar)?;
        write!(f, "certificate: gcd(P*, S) = 1 is {}, deg P* = {}", self.gcd_pstar_s_is_one, self.deg_pstar())?;
        for w in &self.witnesses {
            write!(f, "\nwitness c = {}: orbit {}", w.c, w.orbit.orbit_strings().join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_unipoly;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn c(s: &str) -> UniPoly<Rational> {
        parse_unipoly(s, Var::C).unwrap()
    }

    fn label(m: u32, n: u32) -> PortraitLabel {
        PortraitLabel::new(m, n).unwrap()
    }

    fn two() -> MapSpec {
        MapSpec::new(2).unwrap()
    }

    #[test]
    fn degenerate_loci() {
        assert_eq!(degenerate_locus(label(0, 2), two(), &q("-1/2")).unwrap(), c("C + 3/4"));
        assert!(degenerate_locus(label(1, 1), two(), &q("0")).unwrap().is_zero());
        assert_eq!(degenerate_locus(label(1, 2), two(), &q("1/2")).unwrap(), c("1/2*(C^2 + 1/2*C - 3/16)"));
    }

    #[test]
    fn exceptional_cases() {
        for (x, m, n) in [("-1/2", 0, 2), ("1/2", 1, 2), ("1", 2, 2), ("-1", 2, 2), ("0", 1, 3)] {
            let r = realizes(&q(x), label(m, n), two()).unwrap();
            assert!(!r.realizable, "{x} {m} {n}");
            assert!(r.pstar.is_one());
        }
        let r = realizes(&q("1"), label(2, 2), two()).unwrap();
        assert_eq!(r.p, c("(C + 1)^2"));
        assert!(r.s.rem(&c("C + 1")).unwrap().is_zero());
    }

    #[test]
    fn realizable_cases_with_witnesses() {
        let r = realizes(&q("0"), label(0, 1), two()).unwrap();
        assert!(r.realizable);
        assert_eq!(r.pstar, c("C"));
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].c, q("0"));
        assert_eq!(r.witnesses[0].orbit.orbit_strings(), vec!["0"]);

        let r = realizes(&q("3/2"), label(0, 1), two()).unwrap();
        assert!(r.realizable);
        assert_eq!(r.witnesses.iter().map(|w| w.c.clone()).collect::<Vec<_>>(), vec![q("-3/4")]);
    }

    #[test]
    fn json_shape() {
        let r = realizes(&q("-1/2"), label(0, 2), two()).unwrap();
        let v = r.to_json();
        assert_eq!(v["realizable"], json!(false));
        assert_eq!(v["P"], json!({"vars": ["C"], "terms": [[1, "1"], [0, "3/4"]]}));
        assert_eq!(v["Pstar"], json!({"vars": ["C"], "terms": [[0, "1"]]}));
        assert_eq!(v["certificate"], json!({"gcd_Pstar_S_is_one": true, "deg_Pstar": 0}));
    }

    #[test]
    fn certificates() {
        assert!(certificate_check(&q("3/2"), label(0, 1), two(), &c("C + 3/4")).unwrap());
        assert!(!certificate_check(&q("1"), label(2, 2), two(), &c("C + 1")).unwrap());
        assert_eq!(
            certificate_check(&q("1"), label(2, 2), two(), &c("(C + 1)^2")),
            Err(Error::NotSquarefree)
        );
        let r = realizes(&q("2"), label(1, 3), MapSpec::new(3).unwrap()).unwrap();
        assert!(certificate_check(&q("2"), label(1, 3), MapSpec::new(3).unwrap(), &r.pstar.monic().unwrap()).unwrap());
    }
}
