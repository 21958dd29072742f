//! Orbit portraits of concrete points and realizability of a portrait at a
//! point `x` for some parameter `c`.

mod orbit;
mod point;
mod realize;

pub use orbit::{multiplier, orbit_portrait, OrbitReport, DEFAULT_BOUND};
pub use point::{FieldPoint, PointValue};
pub use realize::{
    certificate_check, degenerate_locus, period_drop_factor, preperiod_drop_factor, realizes, specialize,
    RealizabilityResult, Witness,
};
