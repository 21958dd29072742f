use dynatomic_core::dynatomic::{gen_dynatomic_in_c, MapSpec, PortraitLabel};
use dynatomic_core::exactmath::gcd_uni;
use dynatomic_core::exactmath::{parse_unipoly, QuotientRing, Rational, Var};
use dynatomic_core::portraits::{
    certificate_check, degenerate_locus, orbit_portrait, period_drop_factor, preperiod_drop_factor, realizes,
    specialize,
};
use dynatomic_core::suites::{exception_grid, sweep, GridEntry};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn spec(d: u32) -> MapSpec {
    MapSpec::new(d).unwrap()
}

fn label(m: u32, n: u32) -> PortraitLabel {
    PortraitLabel::new(m, n).unwrap()
}

const POINTS: [&str; 11] = ["0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3", "-1/3", "3/2", "5/2"];

#[test]
fn dichotomy_of_drop_factors() {
    // Every root of P either keeps its preperiod or keeps its period.
    for x in POINTS {
        for d in [2, 3] {
            for m in 1..=3 {
                for n in 1..=3 {
                    let x = q(x);
                    let p = specialize(label(m, n), spec(d), &x).unwrap();
                    let a = preperiod_drop_factor(label(m, n), spec(d), &x);
                    let b = period_drop_factor(label(m, n), spec(d), &x).unwrap();
                    let ga = gcd_uni(&p, &a).unwrap();
                    let gb = gcd_uni(&p, &b).unwrap();
                    assert!(ga.degree() <= 0 || gb.degree() <= 0, "x={x} d={d} M={m} N={n}");
                }
            }
        }
    }
}

#[test]
fn degenerate_locus_vanishes_only_at_origin_with_preperiod_one() {
    for x in POINTS {
        for d in [2, 3] {
            for m in 0..=3 {
                for n in 1..=4 {
                    let s = degenerate_locus(label(m, n), spec(d), &q(x)).unwrap();
                    assert_eq!(s.is_zero(), x == "0" && m == 1, "x={x} d={d} M={m} N={n}");
                }
            }
        }
    }
}

#[test]
fn witnesses_and_certificates_on_the_grid() {
    let grid = exception_grid();
    let mut witnessed = 0;
    for (entry, result) in grid.iter().zip(sweep(&grid)) {
        let r = result.unwrap();
        assert_eq!(r.realizable, r.pstar.degree() >= 1);
        assert!(r.p.rem(&r.pstar).unwrap().is_zero(), "P* divides P");
        for w in &r.witnesses {
            witnessed += 1;
            assert_eq!(w.orbit.portrait, Some(entry.label));
            let phi = gen_dynatomic_in_c(&entry.x, entry.spec, entry.label).unwrap();
            assert_eq!(phi.eval(&w.c), Rational::zero());
        }
        if r.realizable && r.pstar.degree() <= 24 {
            let h = dynatomic_core::exactmath::squarefree_part(&r.pstar).unwrap();
            assert!(certificate_check(&entry.x, entry.label, entry.spec, &h).unwrap());
        }
    }
    assert!(witnessed > 0);
}

#[test]
fn witnesses_sorted_by_denominator_then_numerator() {
    // x = 0 is fixed exactly when c = 0; period 2 for c = -1.
    let r = realizes(&q("0"), label(0, 2), spec(2)).unwrap();
    assert_eq!(r.witnesses.iter().map(|w| w.c.to_string()).collect::<Vec<_>>(), vec!["-1"]);
    let r = realizes(&q("3/2"), label(1, 1), spec(2)).unwrap();
    let cs: Vec<Rational> = r.witnesses.iter().map(|w| w.c.clone()).collect();
    let mut sorted = cs.clone();
    sorted.sort_by(|a, b| (a.denom(), a.numer()).cmp(&(b.denom(), b.numer())));
    assert_eq!(cs, sorted);
}

#[test]
fn specialization_examples() {
    let c = |s| parse_unipoly(s, Var::C).unwrap();
    assert_eq!(specialize(label(0, 2), spec(2), &q("-1/2")).unwrap(), c("C + 3/4"));
    assert_eq!(specialize(label(2, 2), spec(2), &q("1")).unwrap(), c("(C + 1)^2"));
    assert_eq!(specialize(label(1, 2), spec(2), &q("1/2")).unwrap(), c("C + 3/4"));
}

#[test]
fn algebraic_points() {
    // x = sqrt(2): z^2 + c has a fixed point at sqrt(2) for c = sqrt(2) - 2
    let ring = QuotientRing::new(parse_unipoly("t^2 - 2", Var::T).unwrap(), true).unwrap();
    let x = ring.generator();
    let r = realizes(&x, label(0, 1), spec(2)).unwrap();
    assert!(r.realizable);
    assert!(r.witnesses.is_empty());
    // x = i with c = i - 1 ... i -> -1 + i -> -i + ... just check the decision
    let gauss = QuotientRing::new(parse_unipoly("t^2 + 1", Var::T).unwrap(), true).unwrap();
    let i = gauss.generator();
    for (m, n) in [(0, 1), (0, 2), (1, 2), (2, 2), (2, 3)] {
        assert!(realizes(&i, label(m, n), spec(2)).unwrap().realizable, "M={m} N={n}");
    }
    let zero = dynatomic_core::exactmath::ScalarRing::zero(&gauss);
    assert!(!realizes(&zero, label(1, 2), spec(2)).unwrap().realizable);
}

#[test]
fn orbit_report_examples() {
    let r = orbit_portrait(&q("1"), &q("-1"), spec(2), 64).unwrap();
    assert_eq!(r.portrait, Some(label(1, 2)));
    assert_eq!(r.orbit_strings(), vec!["1", "0", "-1"]);
    let r = orbit_portrait(&q("1/7"), &q("1/3"), spec(3), 64).unwrap();
    assert_eq!(r.portrait, None);
}

#[test]
fn grid_file_parsing() {
    let grid = GridEntry::parse_grid(r#"[{"x":"-1/2","M":0,"N":2,"d":2},{"x":"3","M":1,"N":1,"d":3}]"#).unwrap();
    assert_eq!(grid.len(), 2);
    assert!(GridEntry::parse_grid(r#"[{"x":"0.5","M":0,"N":2,"d":2}]"#).is_err());
    assert!(GridEntry::parse_grid(r#"[{"x":"1","M":0,"N":0,"d":2}]"#).is_err());
    assert!(GridEntry::parse_grid(r#"{"x":"1"}"#).is_err());
}
