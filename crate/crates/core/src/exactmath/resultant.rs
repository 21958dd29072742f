//! Resultants in `X` of bivariate polynomials, as polynomials in `C`.

use super::bipoly::BiPoly;
use super::scalar::Scalar;
use super::unipoly::{UniPoly, Var};
use crate::error::{Error, Result};

/// Polynomial in `X` over the domain `K[C]`, ascending, no trailing zeros.
type Rows<S> = Vec<UniPoly<S>>;

fn trim<S: Scalar>(v: &mut Rows<S>) {
    while v.last().is_some_and(|r| r.is_zero()) {
        v.pop();
    }
}

fn deg<S: Scalar>(v: &Rows<S>) -> usize {
    v.len() - 1
}

/// `lc(b)^(δ+1) · a = q·b + r`; returns `r`.
fn pseudo_rem<S: Scalar>(a: &Rows<S>, b: &Rows<S>) -> Rows<S> {
    let db = deg(b);
    let lcb = b[db].clone();
    let delta = deg(a) - db;
    let mut r = a.clone();
    let mut steps = 0u64;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lcb;
        }
        for (j, bj) in b.iter().enumerate() {
            let k = dr - db + j;
            r[k] = &r[k] - &(&lr * bj);
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
        steps += 1;
    }
    let extra = delta as u64 + 1 - steps;
    if extra > 0 {
        let f = lcb.pow(extra);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// `Res_X(a, b)` by the subresultant algorithm, with exact divisions in `K[C]`.
pub fn resultant<S: Scalar>(a: &BiPoly<S>, b: &BiPoly<S>) -> Result<UniPoly<S>> {
    if a.ring() != b.ring() {
        return Err(Error::IncompatibleRings);
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let ring = a.ring().clone();
    let one = UniPoly::one(ring.clone(), Var::C);
    let (mut a, mut b) = (a.x_rows(), b.x_rows());
    let mut sign_negative = false;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign_negative = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        let r = b[0].pow(deg(&a) as u64);
        return Ok(if sign_negative { -&r } else { r });
    }
    let (mut g, mut h) = (one.clone(), one);
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = &g * &h.pow(delta as u64);
        b = r.iter().map(|c| c.exact_div(&divisor)).collect::<Result<_>>()?;
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta as u64).exact_div(&h.pow(delta as u64 - 1))?,
        };
        if b.is_empty() {
            return Ok(UniPoly::zero(ring, Var::C));
        }
        if deg(&b) == 0 {
            break;
        }
    }
    let da = deg(&a) as u64;
    let lb = &b[0];
    let r = if da == 0 {
        one_like(lb)
    } else {
        lb.pow(da).exact_div(&h.pow(da - 1))?
    };
    Ok(if sign_negative { -&r } else { r })
}

fn one_like<S: Scalar>(p: &UniPoly<S>) -> UniPoly<S> {
    UniPoly::one(p.ring().clone(), p.var())
}

/// `Res_X(a, b)` as the determinant of the Sylvester matrix, by fraction-free
/// (Bareiss) elimination over `K[C]`. Independent of [`resultant`].
pub fn sylvester_resultant<S: Scalar>(a: &BiPoly<S>, b: &BiPoly<S>) -> Result<UniPoly<S>> {
    if a.ring() != b.ring() {
        return Err(Error::IncompatibleRings);
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let ring = a.ring().clone();
    let zero = UniPoly::zero(ring.clone(), Var::C);
    let (ra, rb) = (a.x_rows(), b.x_rows());
    let (m, n) = (ra.len() - 1, rb.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(UniPoly::one(ring, Var::C));
    }
    // Rows: n shifted copies of a, then m shifted copies of b; columns run
    // from the highest power of X down.
    let mut mat = vec![vec![zero.clone(); size]; size];
    for i in 0..n {
        for (k, c) in ra.iter().enumerate() {
            mat[i][i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in rb.iter().enumerate() {
            mat[n + i][i + n - k] = c.clone();
        }
    }
    let mut negate = false;
    let mut prev = UniPoly::one(ring.clone(), Var::C);
    for k in 0..size {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(zero),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &(&mat[k][k] * &mat[i][j]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = v.exact_div(&prev)?;
            }
            mat[i][k] = zero.clone();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    Ok(if negate { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::format::{parse_bipoly, parse_unipoly};
    use crate::exactmath::rational::Rational;

    fn bi(s: &str) -> BiPoly<Rational> {
        parse_bipoly(s).unwrap()
    }

    #[test]
    fn period_two_against_fixed_points() {
        let phi2 = bi("X^2 + X + C + 1");
        let phi1 = bi("X^2 - X + C");
        let expected = parse_unipoly("4*C + 3", Var::C).unwrap();
        assert_eq!(resultant(&phi2, &phi1).unwrap(), expected);
        assert_eq!(sylvester_resultant(&phi2, &phi1).unwrap(), expected);
        assert!(resultant(&phi1, &phi1).unwrap().is_zero());
        assert!(sylvester_resultant(&phi1, &phi1).unwrap().is_zero());
    }

    #[test]
    fn linear_case_follows_sylvester_convention() {
        // det [[1, -a], [1, -b]] = a - b
        let r = resultant(&bi("X - C"), &bi("X - 3")).unwrap();
        assert_eq!(r, parse_unipoly("C - 3", Var::C).unwrap());
        assert_eq!(sylvester_resultant(&bi("X - C"), &bi("X - 3")).unwrap(), r);
    }

    #[test]
    fn zero_operand() {
        assert_eq!(resultant(&bi("X"), &bi("0")), Err(Error::ZeroOperand));
    }

    #[test]
    fn routes_agree_on_mixed_degrees() {
        let cases = [
            ("X^3 + C*X + 1", "X^2 - C"),
            ("2*X^4 - C^2*X + 3", "C*X^3 + X - 1"),
            ("X^2 + C", "X^5 - X + C^3"),
            ("C*X + 1", "7"),
            ("(X - C)^2*(X + 1)", "(X - C)*(X^2 + C)"),
        ];
        for (a, b) in cases {
            let (a, b) = (bi(a), bi(b));
            assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b).unwrap(), "{a} / {b}");
            assert_eq!(resultant(&b, &a).unwrap(), sylvester_resultant(&b, &a).unwrap(), "{b} / {a}");
        }
    }
}
