//! Normalized Mittag-Leffler functions on the closed unit disk.
//!
//! The two-parameter Mittag-Leffler function generalizes the exponential:
//!
//! ```text
//! E_{a,b}(z) = sum_{n>=0} z^n / Gamma(a n + b),        a > 0, b > 0.
//! ```
//!
//! This crate works with its normalization
//!
//! ```text
//! NE(z) = Gamma(b) z E_{a,b}(z) = z + sum_{n>=1} A_n z^{n+1},
//! A_n   = Gamma(b) / Gamma(a n + b),
//! ```
//!
//! which has value 0 and derivative 1 at the origin. It evaluates `NE`, its
//! derivative, and its partial sums at complex points of the closed unit
//! disk, and certifies the sharp lower bounds satisfied by the real parts of
//! the four ratios full/partial, partial/full and their derivative
//! analogues, together with the coefficient tail inequalities and Mobius
//! witness functions those bounds rest on.
//!
//! Evaluation is backed by truncation certificates: [`build_table`] selects
//! a truncation index whose certified tail bound (plain and `(n+1)`-weighted)
//! is below the requested tolerance on the whole closed disk, so every
//! downstream number carries a known accuracy budget.
//!
//! All operations are pure functions over immutable data and can be called
//! concurrently without restriction.

pub mod bounds;
mod error;
pub mod eval;
pub mod gamma;
pub mod identities;
pub mod kahan;
mod params;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use params::{MLParams, RatioCase, RatioKind};
pub use table::{build_table, coefficient, CoefficientTable, TRUNCATION_CAP};
