//! Exact arithmetic: rationals, sparse polynomials in one and two variables,
//! simple algebraic extensions of ℚ, and the gcd/resultant/root machinery
//! built on top of them.

pub mod bipoly;
pub mod format;
pub mod gcd;
pub mod modp;
pub mod quotient;
pub mod rational;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod unipoly;
mod zpoly;

pub use bipoly::BiPoly;
pub use format::{bipoly_from_json, bipoly_to_json, parse_bipoly, parse_unipoly, unipoly_from_json, unipoly_to_json};
pub use gcd::{gcd_uni, squarefree_part};
pub use quotient::{QuotientElement, QuotientRing};
pub use rational::{Rational, Rationals};
pub use resultant::{resultant, sylvester_resultant};
pub use roots::rational_roots;
pub use scalar::{Scalar, ScalarRing};
pub use unipoly::{UniPoly, Var, NEG_INFINITY};
