//! Iterates of `f_{d,C}(X) = X^d + C`, dynatomic and generalized dynatomic
//! polynomials, their cyclotomic factors, and degree bookkeeping.

mod combine;
mod curve;
mod psi;
mod session;
mod specialize;

use std::fmt;

use crate::error::{Error, Result};

pub use curve::{curve_info, CurveInfo};
pub use psi::{cyclotomic_poly, cyclotomic_ring, psi_factor, psi_product, root_of_unity};
pub use session::{dynatomic_poly, gen_dynatomic_poly, gen_dynatomic_recursive, iterate_poly, Session};
pub use specialize::{gen_dynatomic_in_c, gen_dynatomic_in_x, iterates_in_c, iterates_in_x, phi_at_iterate};

/// The map `z ↦ z^d + c`, `d ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MapSpec {
    d: u32,
}

impl MapSpec {
    pub fn new(d: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidArgument(format!("degree d must be at least 2, got {d}")));
        }
        Ok(MapSpec { d })
    }

    pub fn d(self) -> u32 {
        self.d
    }
}

/// A preperiodic portrait: preperiod `M ≥ 0`, eventual period `N ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PortraitLabel {
    m: u32,
    n: u32,
}

impl PortraitLabel {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("period N must be at least 1".into()));
        }
        Ok(PortraitLabel { m, n })
    }

    pub fn m(self) -> u32 {
        self.m
    }

    pub fn n(self) -> u32 {
        self.n
    }
}

impl fmt::Display for PortraitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors are defined for n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `D(N) = Σ_{n|N} μ(N/n) d^n`, the `X`-degree of `Φ_N`.
///
/// Panics if the value does not fit in a `u64`.
pub fn degree_d(spec: MapSpec, n: u32) -> u64 {
    let d = spec.d as i128;
    let total: i128 = divisors(n as u64)
        .into_iter()
        .map(|k| {
            let pow = d.checked_pow(k as u32).expect("D(N) overflows");
            mobius(n as u64 / k) as i128 * pow
        })
        .sum();
    u64::try_from(total).expect("D(N) overflows")
}

/// `(deg_X, deg_C)` of `Φ_{M,N}` predicted by the degree formulas.
///
/// For `M = 1` the `C`-degree is `(d-1)·D(N)/d`; its integrality relies on
/// `d | D(N)` and is checked rather than assumed.
pub fn expected_degrees(spec: MapSpec, label: PortraitLabel) -> (u64, u64) {
    let d = spec.d as u64;
    let big_d = degree_d(spec, label.n);
    assert_eq!(big_d % d, 0, "d must divide D(N)");
    if label.m == 0 {
        return (big_d, big_d / d);
    }
    let deg_x = (d - 1) * d.pow(label.m - 1) * big_d;
    assert_eq!(deg_x % d, 0, "C-degree of the generalized dynatomic polynomial must be integral");
    (deg_x, deg_x / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_and_divisors() {
        let mu: Vec<i8> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn degree_values() {
        let two = MapSpec::new(2).unwrap();
        let three = MapSpec::new(3).unwrap();
        assert_eq!(degree_d(two, 1), 2);
        assert_eq!(degree_d(two, 2), 2);
        assert_eq!(degree_d(two, 3), 6);
        assert_eq!(degree_d(three, 1), 3);
        assert_eq!(degree_d(three, 4), 72);
        let label = PortraitLabel::new(2, 2).unwrap();
        assert_eq!(expected_degrees(two, label), (4, 2));
    }

    #[test]
    fn invalid_inputs() {
        assert!(MapSpec::new(1).is_err());
        assert!(PortraitLabel::new(0, 0).is_err());
    }
}
