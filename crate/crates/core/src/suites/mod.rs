//! Named verification suites over the constructions in this crate.
//!
//! Each suite recomputes a family of identities from scratch and stops at
//! the first violation, which it describes in plain text.

mod degrees;
mod sweep;

use std::fmt;

use crate::dynatomic::{
    degree_d, divisors, gen_dynatomic_poly, gen_dynatomic_recursive, psi_product, MapSpec, PortraitLabel, Session,
};
use crate::exactmath::{BiPoly, Rational, Rationals, Var};

pub use degrees::{check_degrees_by_specialization, check_degrees_exact};
pub use sweep::{exception_grid, is_listed_exception, sweep, GridEntry};

/// Suite names accepted by [`run_suite`], in their default run order.
pub const SUITE_NAMES: &[&str] =
    &["factorization", "degrees", "degree-inequality", "psi-product", "derivative", "recursion", "exceptions"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: String,
    pub checks: usize,
    /// The first violated identity, if any.
    pub failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checks),
            Some(why) => write!(f, "FAIL {}: {}", self.name, why),
        }
    }
}

/// Result of a suite body: the number of checks, or the first violation.
type Checked = std::result::Result<usize, String>;

fn from_error(e: crate::error::Error) -> String {
    format!("computation failed: {e}")
}

pub fn run_suite(name: &str) -> Option<SuiteOutcome> {
    let body: fn() -> Checked = match name {
        "factorization" => || factorization(&[2, 3], 6),
        "degrees" => || degrees::degree_suite(4, 5, 3),
        "degree-inequality" => || degree_inequality(12, 5),
        "psi-product" => || psi_products(&[2, 3], 2, 3),
        "derivative" => || derivative_formula(&[2, 3], 6),
        "recursion" => || recursion(3, 3, 3),
        "exceptions" => sweep::exception_suite,
        _ => return None,
    };
    let (checks, failure) = match body() {
        Ok(n) => (n, None),
        Err(why) => (0, Some(why)),
    };
    Some(SuiteOutcome { name: name.to_string(), checks, failure })
}

fn spec(d: u32) -> MapSpec {
    MapSpec::new(d).expect("suite degrees are at least 2")
}

fn label(m: u32, n: u32) -> PortraitLabel {
    PortraitLabel::new(m, n).expect("suite periods are at least 1")
}

/// `∏_{n|N} Φ_n = f^N(X) - X`.
pub fn factorization(ds: &[u32], max_n: u32) -> Checked {
    let session = Session::new();
    let mut checks = 0;
    for &d in ds {
        for n in 1..=max_n {
            let mut prod = BiPoly::one(Rationals);
            for k in divisors(n as u64) {
                prod = &prod * &*session.dynatomic(spec(d), k as u32).map_err(from_error)?;
            }
            let target = &*session.iterate(spec(d), n) - &BiPoly::x(Rationals);
            if prod != target {
                return Err(format!("product of Phi_n over n | {n} differs from f^{n}(X) - X for d = {d}"));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// `D(N) > Σ_{n|N, n<N} D(n)`, with equality only at `N = d = 2`.
pub fn degree_inequality(max_n: u32, max_d: u32) -> Checked {
    let mut checks = 0;
    for d in 2..=max_d {
        for n in 1..=max_n {
            let lhs = degree_d(spec(d), n);
            let rhs: u64 =
                divisors(n as u64).into_iter().filter(|&k| k < n as u64).map(|k| degree_d(spec(d), k as u32)).sum();
            let ok = if (n, d) == (2, 2) { lhs == rhs } else { lhs > rhs };
            if !ok {
                return Err(format!("D({n}) = {lhs} against proper-divisor sum {rhs} for d = {d}"));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// `∏_{ζ^d = 1, ζ ≠ 1} Ψ^ζ_{M,N}` has rational coefficients and equals `Φ_{M,N}`.
pub fn psi_products(ds: &[u32], max_m: u32, max_n: u32) -> Checked {
    let mut checks = 0;
    for &d in ds {
        for m in 1..=max_m {
            for n in 1..=max_n {
                let prod = psi_product(spec(d), label(m, n)).map_err(from_error)?;
                let Some(prod) = prod else {
                    return Err(format!("Psi product for (d,M,N) = ({d},{m},{n}) has irrational coefficients"));
                };
                if prod != gen_dynatomic_poly(spec(d), label(m, n)).map_err(from_error)? {
                    return Err(format!("Psi product differs from Phi_{{{m},{n}}} for d = {d}"));
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}

/// `∂/∂C f^k(X) = 1 + Σ_{j=1}^{k-1} d^j ∏_{i=1}^{j} f^{k-i}(X)^{d-1}`.
pub fn derivative_formula(ds: &[u32], max_k: u32) -> Checked {
    let session = Session::new();
    let mut checks = 0;
    for &d in ds {
        let f: Vec<BiPoly<Rational>> = session.iterates(spec(d), max_k).iter().map(|p| (**p).clone()).collect();
        for k in 1..=max_k as usize {
            let lhs = f[k].derivative(Var::C).map_err(from_error)?;
            let mut rhs = BiPoly::one(Rationals);
            let mut running = BiPoly::one(Rationals);
            for j in 1..k {
                running = &running * &f[k - j].pow(d as u64 - 1);
                let coeff = Rational::from_i64(d as i64).pow(j as u32);
                rhs = &rhs + &running.scale(&coeff);
            }
            if lhs != rhs {
                return Err(format!("derivative formula fails for d = {d}, k = {k}"));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// `Φ_{M,N}(X) = Φ_{M-1,N}(f(X))` agrees with the defining quotient.
pub fn recursion(max_d: u32, max_m: u32, max_n: u32) -> Checked {
    let mut checks = 0;
    for d in 2..=max_d {
        for m in 2..=max_m {
            for n in 1..=max_n {
                let direct = gen_dynatomic_poly(spec(d), label(m, n)).map_err(from_error)?;
                let rec = gen_dynatomic_recursive(spec(d), label(m, n)).map_err(from_error)?;
                if direct != rec {
                    return Err(format!("recursion disagrees with the quotient for (d,M,N) = ({d},{m},{n})"));
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}

/// Runs every suite in order.
pub fn run_all() -> Vec<SuiteOutcome> {
    SUITE_NAMES.iter().map(|n| run_suite(n).expect("known suite")).collect()
}
