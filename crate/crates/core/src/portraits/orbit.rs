use std::fmt;

use serde_json::{json, Value};

use super::point::FieldPoint;
use crate::dynatomic::{MapSpec, PortraitLabel};
use crate::error::Result;
use crate::exactmath::{Rational, Scalar, ScalarRing};

/// Iteration bound for exploratory orbit computations.
pub const DEFAULT_BOUND: u32 = 64;

/// The forward orbit of a point and its portrait, if one was found.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitReport<S> {
    /// Distinct orbit entries `x, f(x), ...` in order.
    pub orbit: Vec<S>,
    /// `None` when no repetition was found within the bound.
    pub portrait: Option<PortraitLabel>,
    /// Number of iterations actually carried out.
    pub bound_used: u32,
}

/// Iterates `z ↦ z^d + c` from `x` at most `bound` times and reports the
/// minimal `(m, n)` with `f^{m+n}(x) = f^m(x)`.
///
/// Rational orbits that provably escape (to infinity, or p-adically) stop
/// early with no portrait.
pub fn orbit_portrait<S: FieldPoint>(x: &S, c: &S, spec: MapSpec, bound: u32) -> Result<OrbitReport<S>> {
    let mut orbit = vec![x.clone()];
    for k in 1..=bound {
        let last = orbit.last().unwrap();
        if S::orbit_stops(last, c, spec.d()) {
            return Ok(OrbitReport { orbit, portrait: None, bound_used: k - 1 });
        }
        let next = last.pow(spec.d() as u64).plus(c);
        if let Some(m) = orbit.iter().position(|z| *z == next) {
            let label = PortraitLabel::new(m as u32, k - m as u32)?;
            return Ok(OrbitReport { orbit, portrait: Some(label), bound_used: k });
        }
        orbit.push(next);
    }
    Ok(OrbitReport { orbit, portrait: None, bound_used: bound })
}

/// `(f^N)'(x) = ∏_{k<N} d·f^k(x)^{d-1}` at the parameter `c`.
pub fn multiplier<S: Scalar>(x: &S, c: &S, spec: MapSpec, n: u32) -> S {
    let ring = x.ring();
    let d = ring.from_rational(&Rational::from_i64(spec.d() as i64));
    let mut z = x.clone();
    let mut acc = ring.one();
    for _ in 0..n {
        acc = acc.times(&d).times(&z.pow(spec.d() as u64 - 1));
        z = z.pow(spec.d() as u64).plus(c);
    }
    acc
}

impl<S: Scalar> OrbitReport<S> {
    pub fn orbit_strings(&self) -> Vec<String> {
        self.orbit.iter().map(|z| z.to_string()).collect()
    }

    pub fn portrait_json(&self) -> Value {
        match self.portrait {
            Some(l) => json!([l.m(), l.n()]),
            None => json!("NotPreperiodicWithinBound"),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "orbit": self.orbit_strings(),
            "portrait": self.portrait_json(),
            "bound_used": self.bound_used,
        })
    }
}

impl<S: Scalar> fmt::Display for OrbitReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.portrait {
            Some(l) => writeln!(f, "portrait: {l}")?,
            None => writeln!(f, "portrait: NotPreperiodicWithinBound ({} iterations)", self.bound_used)?,
        }
        write!(f, "orbit: {}", self.orbit_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::QuotientRing;
    use crate::exactmath::{parse_unipoly, Var};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn two() -> MapSpec {
        MapSpec::new(2).unwrap()
    }

    fn portrait(x: &str, c: &str) -> Option<(u32, u32)> {
        let r = orbit_portrait(&q(x), &q(c), two(), DEFAULT_BOUND).unwrap();
        r.portrait.map(|l| (l.m(), l.n()))
    }

    #[test]
    fn small_orbits() {
        assert_eq!(portrait("-1/2", "-3/4"), Some((0, 1)));
        assert_eq!(portrait("3/2", "-3/4"), Some((0, 1)));
        assert_eq!(portrait("1/2", "-3/4"), Some((1, 1)));
        assert_eq!(portrait("0", "-1"), Some((0, 2)));
        assert_eq!(portrait("1", "-1"), Some((1, 2)));
        assert_eq!(portrait("1", "1"), None);
        assert_eq!(portrait("1/3", "0"), None);
    }

    #[test]
    fn orbit_lists_distinct_entries() {
        let r = orbit_portrait(&q("1/2"), &q("-3/4"), two(), DEFAULT_BOUND).unwrap();
        assert_eq!(r.orbit_strings(), vec!["1/2", "-1/2"]);
        assert_eq!(r.to_string(), "portrait: (1,1)\norbit: 1/2, -1/2");
    }

    #[test]
    fn bound_is_respected() {
        // 0 -> -2 -> 2 -> 2 has portrait (2,1) but needs three iterations
        let r = orbit_portrait(&q("0"), &q("-2"), two(), 2).unwrap();
        assert_eq!(r.portrait, None);
        assert_eq!(r.bound_used, 2);
        let r = orbit_portrait(&q("0"), &q("-2"), two(), 3).unwrap();
        assert_eq!(r.portrait, Some(PortraitLabel::new(2, 1).unwrap()));
    }

    #[test]
    fn algebraic_orbit() {
        // c = i: 0 -> i -> i - 1 -> -i -> i - 1
        let ring = QuotientRing::new(parse_unipoly("t^2 + 1", Var::T).unwrap(), true).unwrap();
        let zero = ring.zero();
        let i = ring.generator();
        let r = orbit_portrait(&zero, &i, two(), DEFAULT_BOUND).unwrap();
        assert_eq!(r.portrait, Some(PortraitLabel::new(2, 2).unwrap()));
        assert_eq!(r.orbit_strings(), vec!["0", "t", "t - 1", "-t"]);
    }

    #[test]
    fn multiplier_examples() {
        assert_eq!(multiplier(&q("-1/2"), &q("-3/4"), two(), 1), q("-1"));
        assert_eq!(multiplier(&q("0"), &q("0"), two(), 1), q("0"));
        assert_eq!(multiplier(&q("0"), &q("-1"), two(), 2), q("0"));
        // for d = 3 the factor is 3·z^2
        let three = MapSpec::new(3).unwrap();
        assert_eq!(multiplier(&q("1"), &q("0"), three, 1), q("3"));
        assert_eq!(multiplier(&q("2"), &q("0"), three, 1), q("12"));
    }
}
