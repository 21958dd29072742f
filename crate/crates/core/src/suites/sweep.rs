use rayon::prelude::*;
use serde_json::Value;

use super::{from_error, label, spec, Checked};
use crate::dynatomic::{MapSpec, PortraitLabel};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::portraits::{realizes, RealizabilityResult};

/// One realizability query with a rational point.
#[derive(Clone, Debug, PartialEq)]
pub struct GridEntry {
    pub x: Rational,
    pub label: PortraitLabel,
    pub spec: MapSpec,
}

impl GridEntry {
    /// Reads `{"x":"p/q","M":m,"N":n,"d":d}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("grid entry {v}: {what}"));
        let x = v.get("x").and_then(Value::as_str).ok_or_else(|| bad("\"x\" must be a string"))?.parse()?;
        let int = |key: &str| -> Result<u32> {
            v.get(key)
                .and_then(Value::as_u64)
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| bad(&format!("\"{key}\" must be a non-negative integer")))
        };
        Ok(GridEntry { x, label: PortraitLabel::new(int("M")?, int("N")?)?, spec: MapSpec::new(int("d")?)? })
    }

    pub fn parse_grid(text: &str) -> Result<Vec<Self>> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("grid file: {e}")))?;
        v.as_array()
            .ok_or_else(|| Error::Parse("grid file must hold a JSON array".into()))?
            .iter()
            .map(Self::from_json)
            .collect()
    }
}

/// Runs every query, in parallel, returning results in input order.
pub fn sweep(entries: &[GridEntry]) -> Vec<Result<RealizabilityResult<Rational>>> {
    entries.par_iter().map(|e| realizes(&e.x, e.label, e.spec)).collect()
}

/// The classification grid: 11 points, `M ≤ 3`, `N ≤ 4`, `d ∈ {2, 3}`.
pub fn exception_grid() -> Vec<GridEntry> {
    let points = ["0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3", "-1/3", "3/2", "5/2"];
    let mut out = Vec::new();
    for x in points {
        for d in [2, 3] {
            for m in 0..=3 {
                for n in 1..=4 {
                    out.push(GridEntry { x: x.parse().unwrap(), label: label(m, n), spec: spec(d) });
                }
            }
        }
    }
    out
}

/// The cases where no parameter realizes the portrait: `(x, M) = (0, 1)` in
/// every degree, and four sporadic quadratic cases.
pub fn is_listed_exception(x: &Rational, label: PortraitLabel, spec: MapSpec) -> bool {
    let (m, n, d) = (label.m(), label.n(), spec.d());
    let zero = Rational::zero();
    let half = Rational::frac(1, 2);
    let one = Rational::one();
    if *x == zero && m == 1 {
        return true;
    }
    if (n, d) != (2, 2) {
        return false;
    }
    (m == 0 && *x == -&half) || (m == 1 && *x == half) || (m == 2 && (*x == one || *x == -&one))
}

pub(super) fn exception_suite() -> Checked {
    let grid = exception_grid();
    let results = sweep(&grid);
    for (entry, result) in grid.iter().zip(results) {
        let result = result.map_err(from_error)?;
        let expected = !is_listed_exception(&entry.x, entry.label, entry.spec);
        if result.realizable != expected {
            return Err(format!(
                "x = {}, (M,N) = {}, d = {}: realizable = {}, expected {}",
                entry.x,
                entry.label,
                entry.spec.d(),
                result.realizable,
                expected
            ));
        }
    }
    Ok(grid.len())
}
