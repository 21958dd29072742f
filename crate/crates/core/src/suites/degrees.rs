//! Degree and monicity checks for `Φ_{M,N}`.
//!
//! Small cases are checked on the full bivariate polynomial. Large ones are
//! checked on specializations over a prime field: fixing `C = c_0` (or
//! `X = x_0`) at points where the leading coefficient survives, the degree in
//! the remaining variable and a leading coefficient of 1 must both match.

use super::{from_error, label, spec, Checked};
use crate::dynatomic::{degree_d, expected_degrees, gen_dynatomic_in_c, gen_dynatomic_in_x, MapSpec, PortraitLabel, Session};
use crate::exactmath::modp::PrimeField;
use crate::exactmath::Scalar;

/// Largest `deg_X · deg_C` for which the bivariate polynomial is built.
const EXACT_LIMIT: u64 = 20_000;

const PRIME: u64 = (1 << 61) - 1;
const SAMPLE_POINTS: [i64; 2] = [3, 1_234_567];

pub fn check_degrees_exact(session: &Session, spec: MapSpec, label: PortraitLabel) -> Result<(), String> {
    let (ex, ec) = expected_degrees(spec, label);
    let phi = session.gen_dynatomic(spec, label).map_err(from_error)?;
    let (dx, dc) = (phi.degree_x(), phi.degree_c());
    if (dx, dc) != (ex as i64, ec as i64) {
        return Err(format!("Phi_{{{label}}} for d = {}: degrees ({dx}, {dc}), expected ({ex}, {ec})", spec.d()));
    }
    if !phi.is_monic_x() || !phi.is_monic_c() {
        return Err(format!("Phi_{{{label}}} for d = {} is not monic in X and C", spec.d()));
    }
    if phi.terms().iter().any(|(_, _, c)| !c.is_integer()) {
        return Err(format!("Phi_{{{label}}} for d = {} has a non-integer coefficient", spec.d()));
    }
    Ok(())
}

pub fn check_degrees_by_specialization(spec: MapSpec, label: PortraitLabel) -> Result<(), String> {
    let field = PrimeField::new(PRIME).expect("Mersenne prime");
    let (ex, ec) = expected_degrees(spec, label);
    for v in SAMPLE_POINTS {
        let v = field.elem(v as u64);
        let in_x = gen_dynatomic_in_x(&v, spec, label).map_err(from_error)?;
        let in_c = gen_dynatomic_in_c(&v, spec, label).map_err(from_error)?;
        for (poly, expected, var) in [(&in_x, ex, "X"), (&in_c, ec, "C")] {
            if poly.degree() != expected as i64 || !poly.leading_coeff().is_some_and(|c| c.is_one()) {
                return Err(format!(
                    "Phi_{{{label}}} for d = {} specialized mod p has {var}-degree {}, expected monic of degree {expected}",
                    spec.d(),
                    poly.degree()
                ));
            }
        }
    }
    Ok(())
}

pub(super) fn degree_suite(max_d: u32, max_n: u32, max_m: u32) -> Checked {
    let two = spec(2);
    if degree_d(two, 2) != 2 || degree_d(two, 3) != 6 {
        return Err("D(2) = 2 and D(3) = 6 fail for d = 2".into());
    }
    let session = Session::new();
    let mut checks = 1;
    for d in 2..=max_d {
        for n in 1..=max_n {
            for m in 0..=max_m {
                let (ex, ec) = expected_degrees(spec(d), label(m, n));
                if ex * ec <= EXACT_LIMIT {
                    check_degrees_exact(&session, spec(d), label(m, n))?;
                } else {
                    check_degrees_by_specialization(spec(d), label(m, n))?;
                }
                checks += 1;
            }
        }
    }
    Ok(checks)
}
