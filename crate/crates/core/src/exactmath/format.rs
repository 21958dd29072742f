//! Canonical text and JSON forms for polynomials.
//!
//! Text: terms in canonical order joined by ` + ` / ` - `, coefficients as
//! `num/den` (integers without a denominator) followed by `*` and the
//! monomial, e.g. `X^2 - 3/2*X*C + 1`. Non-rational coefficients print in
//! parentheses: `(t + 1)*X^2`.
//!
//! JSON: `{"vars":["X","C"],"terms":[[i,j,"c"],...]}` for bivariate and
//! `{"vars":["C"],"terms":[[j,"c"],...]}` for univariate polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::bipoly::BiPoly;
use super::quotient::{QuotientElement, QuotientRing};
use super::rational::{Rational, Rationals};
use super::scalar::Scalar;
use super::unipoly::{UniPoly, Var};
use crate::error::{Error, Result};

fn monomial(parts: &[(Var, u64)]) -> String {
    parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.name().to_string() } else { format!("{}^{}", v.name(), e) })
        .collect::<Vec<_>>()
        .join("*")
}

fn write_terms<'a, S: Scalar + 'a>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = (&'a S, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in items {
        match c.as_rational() {
            Some(r) => {
                let abs = r.abs();
                let body = if mono.is_empty() {
                    abs.to_string()
                } else if abs.is_one_value() {
                    mono
                } else {
                    format!("{abs}*{mono}")
                };
                match (first, r.is_negative()) {
                    (true, false) => write!(f, "{body}")?,
                    (true, true) => write!(f, "-{body}")?,
                    (false, false) => write!(f, " + {body}")?,
                    (false, true) => write!(f, " - {body}")?,
                }
            }
            None => {
                let body = if mono.is_empty() { format!("({c})") } else { format!("({c})*{mono}") };
                if first {
                    write!(f, "{body}")?;
                } else {
                    write!(f, " + {body}")?;
                }
            }
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Rational {
    fn is_one_value(&self) -> bool {
        self.is_integer() && self.numer() == &BigInt::from(1)
    }
}

impl<S: Scalar> fmt::Display for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var();
        write_terms(f, self.terms().iter().map(|(e, c)| (c, monomial(&[(var, *e)]))))
    }
}

impl<S: Scalar> fmt::Display for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().iter().map(|(i, j, c)| (c, monomial(&[(Var::X, *i), (Var::C, *j)]))))
    }
}

fn coeff_string<S: Scalar>(c: &S) -> String {
    match c.as_rational() {
        Some(r) => r.to_string(),
        None => c.to_string(),
    }
}

pub fn bipoly_to_json<S: Scalar>(p: &BiPoly<S>) -> Value {
    let terms: Vec<Value> = p.terms().iter().map(|(i, j, c)| json!([i, j, coeff_string(c)])).collect();
    json!({ "vars": ["X", "C"], "terms": terms })
}

pub fn unipoly_to_json<S: Scalar>(p: &UniPoly<S>) -> Value {
    let terms: Vec<Value> = p.terms().iter().map(|(e, c)| json!([e, coeff_string(c)])).collect();
    json!({ "vars": [p.var().name()], "terms": terms })
}

fn json_vars(v: &Value) -> Result<Vec<Var>> {
    let bad = || Error::Parse("polynomial JSON needs a \"vars\" array of variable names".into());
    v.get("vars")
        .and_then(Value::as_array)
        .ok_or_else(bad)?
        .iter()
        .map(|n| n.as_str().and_then(Var::from_name).ok_or_else(bad))
        .collect()
}

fn json_terms(v: &Value, arity: usize) -> Result<Vec<(Vec<u64>, Rational)>> {
    let bad = |m: &str| Error::Parse(format!("bad polynomial JSON term: {m}"));
    let arr = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\""))?;
    arr.iter()
        .map(|t| {
            let t = t.as_array().filter(|t| t.len() == arity + 1).ok_or_else(|| bad(&t.to_string()))?;
            let exps = t[..arity]
                .iter()
                .map(|e| e.as_u64().ok_or_else(|| bad(&e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            let c = t[arity].as_str().ok_or_else(|| bad(&t[arity].to_string()))?.parse::<Rational>()?;
            Ok((exps, c))
        })
        .collect()
}

pub fn bipoly_from_json(v: &Value) -> Result<BiPoly<Rational>> {
    if json_vars(v)? != [Var::X, Var::C] {
        return Err(Error::Parse("bivariate JSON must have vars [\"X\",\"C\"]".into()));
    }
    let terms = json_terms(v, 2)?.into_iter().map(|(e, c)| (e[0], e[1], c)).collect();
    Ok(BiPoly::new(Rationals, terms))
}

pub fn unipoly_from_json(v: &Value) -> Result<UniPoly<Rational>> {
    let vars = json_vars(v)?;
    if vars.len() != 1 {
        return Err(Error::Parse("univariate JSON must name exactly one variable".into()));
    }
    let terms = json_terms(v, 1)?.into_iter().map(|(e, c)| (e[0], c)).collect();
    Ok(UniPoly::new(Rationals, vars[0], terms))
}

// ---------------------------------------------------------------- parsing

/// Sparse polynomial in `X`, `C`, `t` used only while parsing.
type Multi = BTreeMap<[u64; 3], Rational>;

fn slot(v: Var) -> usize {
    match v {
        Var::X => 0,
        Var::C => 1,
        Var::T => 2,
    }
}

fn multi_add(mut a: Multi, b: Multi, sign: bool) -> Multi {
    for (k, c) in b {
        let c = if sign { c } else { -c };
        let e = a.entry(k).or_insert_with(Rational::zero);
        *e = &*e + &c;
        if e.is_zero() {
            a.remove(&k);
        }
    }
    a
}

fn multi_mul(a: &Multi, b: &Multi) -> Multi {
    let mut out = Multi::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let k = [ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]];
            let e = out.entry(k).or_insert_with(Rational::zero);
            *e = &*e + &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let ch = cs[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = cs[start..i].iter().collect();
            out.push(Tok::Num(lit.parse().expect("digits")));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Sym(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{ch}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    allowed: &'a [Var],
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in polynomial `{}`", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn exponent(&mut self) -> Result<u64> {
        if !self.eat('^') {
            return Ok(1);
        }
        match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                u64::try_from(n).map_err(|_| self.err("exponent too large"))
            }
            _ => Err(self.err("expected exponent after `^`")),
        }
    }

    fn expr(&mut self) -> Result<Multi> {
        let mut sign = !self.eat('-');
        if sign {
            self.eat('+');
        }
        let mut acc = Multi::new();
        loop {
            let t = self.term()?;
            acc = multi_add(acc, t, sign);
            if self.eat('+') {
                sign = true;
            } else if self.eat('-') {
                sign = false;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Multi> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = multi_mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Multi> {
        let base = match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let r = if self.eat('/') {
                    match self.toks.get(self.pos).cloned() {
                        Some(Tok::Num(d)) => {
                            self.pos += 1;
                            Rational::new(n, d).map_err(|_| self.err("zero denominator"))?
                        }
                        _ => return Err(self.err("expected denominator after `/`")),
                    }
                } else {
                    Rational::from_integer(n)
                };
                let mut m = Multi::new();
                if !r.is_zero() {
                    m.insert([0, 0, 0], r);
                }
                return Ok(m);
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let v = Var::from_name(&name)
                    .filter(|v| self.allowed.contains(v))
                    .ok_or_else(|| self.err(&format!("unknown variable `{name}`")))?;
                let mut k = [0u64; 3];
                k[slot(v)] = 1;
                let mut m = Multi::new();
                m.insert(k, Rational::one());
                m
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                inner
            }
            _ => return Err(self.err("expected a number, variable or `(`")),
        };
        let e = self.exponent()?;
        let mut acc = Multi::new();
        acc.insert([0, 0, 0], Rational::one());
        for _ in 0..e {
            acc = multi_mul(&acc, &base);
        }
        Ok(acc)
    }
}

fn parse_multi(s: &str, allowed: &[Var]) -> Result<Multi> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0, allowed, src: s };
    let m = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(m)
}

pub fn parse_unipoly(s: &str, var: Var) -> Result<UniPoly<Rational>> {
    let m = parse_multi(s, &[var])?;
    Ok(UniPoly::new(Rationals, var, m.into_iter().map(|(k, c)| (k[slot(var)], c)).collect()))
}

pub fn parse_bipoly(s: &str) -> Result<BiPoly<Rational>> {
    let m = parse_multi(s, &[Var::X, Var::C])?;
    Ok(BiPoly::new(Rationals, m.into_iter().map(|(k, c)| (k[0], k[1], c)).collect()))
}

/// Parses an element of `ℚ[t]/(m)` written as a polynomial in `t`.
pub fn parse_quotient_element(s: &str, ring: &QuotientRing) -> Result<QuotientElement> {
    Ok(ring.element(parse_unipoly(s, Var::T)?))
}

/// Parses a polynomial in `X`, `C` whose coefficients may involve `t`.
pub fn parse_bipoly_over(s: &str, ring: &QuotientRing) -> Result<BiPoly<QuotientElement>> {
    let m = parse_multi(s, &[Var::X, Var::C, Var::T])?;
    let mut terms = Vec::new();
    for (k, c) in m {
        let t = UniPoly::monomial(Rationals, Var::T, k[2], c);
        terms.push((k[0], k[1], ring.element(t)));
    }
    Ok(BiPoly::new(ring.clone(), terms))
}

/// Parses a univariate polynomial in `var` over a quotient ring.
pub fn parse_unipoly_over(s: &str, var: Var, ring: &QuotientRing) -> Result<UniPoly<QuotientElement>> {
    let m = parse_multi(s, &[var, Var::T])?;
    let terms = m
        .into_iter()
        .map(|(k, c)| (k[slot(var)], ring.element(UniPoly::monomial(Rationals, Var::T, k[2], c))))
        .collect();
    Ok(UniPoly::new(ring.clone(), var, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        let p = parse_bipoly("C + 1 + X + X^2").unwrap();
        assert_eq!(p.to_string(), "X^2 + X + C + 1");
        let q = parse_bipoly("-3/2*X^2 + X*C - 3/16").unwrap();
        assert_eq!(q.to_string(), "-3/2*X^2 + X*C - 3/16");
        assert_eq!(parse_unipoly("0", Var::C).unwrap().to_string(), "0");
        assert_eq!(parse_unipoly("(C+1)^2", Var::C).unwrap().to_string(), "C^2 + 2*C + 1");
    }

    #[test]
    fn text_json_round_trip() {
        let p = parse_bipoly("X^4 - 3/2*X^2 - X - 3/16 + 7*X^3*C^2").unwrap();
        let j = bipoly_to_json(&p);
        assert_eq!(
            j.to_string(),
            r#"{"vars":["X","C"],"terms":[[4,0,"1"],[3,2,"7"],[2,0,"-3/2"],[1,0,"-1"],[0,0,"-3/16"]]}"#
        );
        assert_eq!(bipoly_from_json(&j).unwrap(), p);
        assert_eq!(parse_bipoly(&p.to_string()).unwrap(), p);
        let u = parse_unipoly("C + 3/4", Var::C).unwrap();
        assert_eq!(unipoly_from_json(&unipoly_to_json(&u)).unwrap(), u);
    }

    #[test]
    fn quotient_coefficients_print_in_parentheses() {
        let ring = QuotientRing::new(parse_unipoly("t^2 + t + 1", Var::T).unwrap(), true).unwrap();
        let p = parse_bipoly_over("t*X^2 + (t + 1)*C - 2", &ring).unwrap();
        assert_eq!(p.to_string(), "(t)*X^2 + (t + 1)*C - 2");
        assert_eq!(parse_bipoly_over(&p.to_string(), &ring).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "X^", "2/", "Y + 1", "X + (C", "1.5*X", "X C"] {
            assert!(parse_bipoly(bad).is_err(), "{bad}");
        }
    }
}
