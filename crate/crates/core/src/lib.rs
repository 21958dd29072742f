//! Exact algebra for dynatomic and generalized dynatomic polynomials of the
//! unicritical family `z^d + c`, and realizability of preperiodic portraits.

pub mod error;
pub mod dynatomic;
pub mod exactmath;
pub mod portraits;
pub mod suites;

pub use error::{Error, Result};
