use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::combine::{gen_dynatomic_from, phi_from};
use super::{MapSpec, PortraitLabel};
use crate::error::Result;
use crate::exactmath::{BiPoly, Rational, Rationals};

type Poly = BiPoly<Rational>;

/// Construction cache for iterates and dynatomic polynomials.
///
/// A session may be shared between threads; lookups are serialized and the
/// cached values are identical to what a fresh computation would return.
#[derive(Default)]
pub struct Session {
    iterates: Mutex<HashMap<u32, Vec<Arc<Poly>>>>,
    dynatomic: Mutex<HashMap<(u32, u32), Arc<Poly>>>,
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[f^0(X), ..., f^n(X)]`.
    pub fn iterates(&self, spec: MapSpec, n: u32) -> Vec<Arc<Poly>> {
        let mut cache = self.iterates.lock().expect("iterate cache poisoned");
        let seq = cache.entry(spec.d()).or_insert_with(|| vec![Arc::new(BiPoly::x(Rationals))]);
        let c = BiPoly::c(Rationals);
        while seq.len() <= n as usize {
            let next = &seq.last().unwrap().pow(spec.d() as u64) + &c;
            seq.push(Arc::new(next));
        }
        seq[..=n as usize].to_vec()
    }

    /// `f_{d,C}^n(X)`; `n = 0` gives `X`.
    pub fn iterate(&self, spec: MapSpec, n: u32) -> Arc<Poly> {
        self.iterates(spec, n).pop().unwrap()
    }

    fn owned_iterates(&self, spec: MapSpec, n: u32) -> Vec<Poly> {
        self.iterates(spec, n).iter().map(|p| (**p).clone()).collect()
    }

    /// `Φ_N(X, C)`.
    pub fn dynatomic(&self, spec: MapSpec, n: u32) -> Result<Arc<Poly>> {
        if let Some(p) = self.dynatomic.lock().expect("cache poisoned").get(&(spec.d(), n)) {
            return Ok(p.clone());
        }
        let label = PortraitLabel::new(0, n)?;
        let seq = self.owned_iterates(spec, n);
        let phi = Arc::new(phi_from(&seq, 0, label.n())?);
        self.dynatomic.lock().expect("cache poisoned").insert((spec.d(), n), phi.clone());
        Ok(phi)
    }

    /// `Φ_{M,N}(X, C)`, built as the quotient `Φ_N(f^M(X)) / Φ_N(f^{M-1}(X))`.
    pub fn gen_dynatomic(&self, spec: MapSpec, label: PortraitLabel) -> Result<Poly> {
        if label.m() == 0 {
            return Ok((*self.dynatomic(spec, label.n())?).clone());
        }
        let seq = self.owned_iterates(spec, label.m() + label.n());
        gen_dynatomic_from(&seq, label.m(), label.n())
    }

    /// `Φ_{M,N}` through `Φ_{M,N}(X) = Φ_{M-1,N}(f(X))`, starting from the
    /// quotient at `M = 1`.
    pub fn gen_dynatomic_recursive(&self, spec: MapSpec, label: PortraitLabel) -> Result<Poly> {
        if label.m() <= 1 {
            return self.gen_dynatomic(spec, label);
        }
        let f = self.iterate(spec, 1);
        let mut acc = self.gen_dynatomic(spec, PortraitLabel::new(1, label.n())?)?;
        for _ in 1..label.m() {
            acc = acc.compose_x(&f)?;
        }
        Ok(acc)
    }
}

pub fn iterate_poly(spec: MapSpec, n: u32) -> BiPoly<Rational> {
    (*Session::new().iterate(spec, n)).clone()
}

pub fn dynatomic_poly(spec: MapSpec, n: u32) -> Result<BiPoly<Rational>> {
    Ok((*Session::new().dynatomic(spec, n)?).clone())
}

pub fn gen_dynatomic_poly(spec: MapSpec, label: PortraitLabel) -> Result<BiPoly<Rational>> {
    Session::new().gen_dynatomic(spec, label)
}

pub fn gen_dynatomic_recursive(spec: MapSpec, label: PortraitLabel) -> Result<BiPoly<Rational>> {
    Session::new().gen_dynatomic_recursive(spec, label)
}
