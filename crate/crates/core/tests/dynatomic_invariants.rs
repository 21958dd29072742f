use dynatomic_core::dynatomic::{
    curve_info, cyclotomic_ring, degree_d, divisors, dynatomic_poly, expected_degrees, gen_dynatomic_poly,
    gen_dynatomic_recursive, iterate_poly, mobius, psi_factor, root_of_unity, MapSpec, PortraitLabel, Session,
};
use dynatomic_core::exactmath::{parse_bipoly, BiPoly, Rationals};

fn spec(d: u32) -> MapSpec {
    MapSpec::new(d).unwrap()
}

fn label(m: u32, n: u32) -> PortraitLabel {
    PortraitLabel::new(m, n).unwrap()
}

#[test]
fn iterate_examples() {
    assert_eq!(iterate_poly(spec(2), 0), BiPoly::x(Rationals));
    assert_eq!(iterate_poly(spec(2), 2), parse_bipoly("X^4 + 2*C*X^2 + C^2 + C").unwrap());
    assert_eq!(iterate_poly(spec(3), 2), parse_bipoly("(X^3 + C)^3 + C").unwrap());
}

#[test]
fn mobius_matches_factorization() {
    // μ(n) from an independent trial factorization into prime powers
    for n in 1..=200u64 {
        let mut k = n;
        let mut exps = Vec::new();
        let mut p = 2;
        while k > 1 {
            let mut e = 0;
            while k % p == 0 {
                k /= p;
                e += 1;
            }
            if e > 0 {
                exps.push(e);
            }
            p += 1;
        }
        let expected = if exps.iter().any(|&e| e > 1) { 0 } else if exps.len() % 2 == 0 { 1 } else { -1 };
        assert_eq!(mobius(n), expected, "mu({n})");
        let brute: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
        assert_eq!(divisors(n), brute);
    }
}

#[test]
fn monic_with_integer_coefficients() {
    let session = Session::new();
    for d in 2..=3 {
        for m in 0..=3 {
            for n in 1..=3 {
                if d == 3 && m == 3 && n == 3 {
                    continue; // covered by the degree suite through specialization
                }
                let phi = session.gen_dynatomic(spec(d), label(m, n)).unwrap();
                assert!(phi.is_monic_x() && phi.is_monic_c(), "d={d} M={m} N={n}");
                assert!(phi.terms().iter().all(|(_, _, c)| c.is_integer()));
                let (dx, dc) = expected_degrees(spec(d), label(m, n));
                assert_eq!((phi.degree_x() as u64, phi.degree_c() as u64), (dx, dc));
            }
        }
    }
}

#[test]
fn recursion_matches_quotient() {
    for d in 2..=3 {
        for m in 2..=3 {
            for n in 1..=3 {
                let direct = gen_dynatomic_poly(spec(d), label(m, n)).unwrap();
                let rec = gen_dynatomic_recursive(spec(d), label(m, n)).unwrap();
                assert_eq!(direct, rec, "d={d} M={m} N={n}");
            }
        }
    }
}

#[test]
fn phi_divides_iterate_difference() {
    for d in 2..=4 {
        for n in 1..=4 {
            let phi = dynatomic_poly(spec(d), n).unwrap();
            let diff = &iterate_poly(spec(d), n) - &BiPoly::x(Rationals);
            assert!(diff.exact_div(&phi).is_ok(), "Phi_{n} must divide f^{n} - X for d = {d}");
            assert_eq!(phi.degree_x() as u64, degree_d(spec(d), n));
        }
    }
}

#[test]
fn psi_examples() {
    let ring = cyclotomic_ring(spec(2));
    let minus_one = root_of_unity(&ring, 1);
    assert_eq!(psi_factor(spec(2), label(1, 2), &minus_one).unwrap().to_string(), "X^2 - X + C + 1");
    assert_eq!(psi_factor(spec(2), label(1, 1), &minus_one).unwrap().to_string(), "X^2 + X + C");
    assert!(psi_factor(spec(2), label(0, 1), &minus_one).is_err());
}

#[test]
fn curve_info_examples() {
    let a = curve_info(spec(2), label(0, 2));
    assert_eq!((a.deg_x, a.deg_c, a.components), (2, 1, 1));
    let b = curve_info(spec(2), label(2, 2));
    assert_eq!((b.deg_x, b.deg_c, b.components), (4, 2, 1));
    let c = curve_info(spec(3), label(1, 1));
    assert_eq!(c.components, 2);
    assert_eq!(c.singular_note, "points with f_{d,c}^{M-1}(x) = 0");
}

#[test]
fn shared_session_across_threads() {
    let session = Session::new();
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4).map(|_| s.spawn(|| session.dynatomic(spec(3), 3).unwrap())).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for r in &results {
        assert_eq!(**r, dynatomic_poly(spec(3), 3).unwrap());
    }
}
