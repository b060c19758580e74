use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Parameter pair (alpha, beta) of the series, both strictly positive.
///
/// Positivity is validated once at construction; accessors hand out plain
/// floats, so downstream code never rechecks the domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MLParams {
    alpha: f64,
    beta: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || alpha <= 0.0 || beta <= 0.0 {
            return Err(Error::Domain(format!(
                "alpha and beta must be finite and positive, got alpha = {alpha}, beta = {beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    pub fn beta(self) -> f64 {
        self.beta
    }

    /// True when alpha >= 1 and beta >= 1. In this range the coefficients
    /// A_n decrease strictly and satisfy the geometric domination
    /// A_{n+1} <= A_n / (beta + 1), which the modulus bounds and the fast
    /// truncation certificate rely on.
    pub fn geometric_regime(self) -> bool {
        self.alpha >= 1.0 && self.beta >= 1.0
    }
}

/// The four ratio families whose real parts admit sharp lower bounds on
/// the closed unit disk. `NE` is the normalized function, `P_m` its m-th
/// partial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RatioKind {
    /// Re { NE(z) / P_m(z) }.
    FullOverPartial,
    /// Re { P_m(z) / NE(z) }.
    PartialOverFull,
    /// Re { NE'(z) / P_m'(z) }.
    DerivFullOverPartial,
    /// Re { P_m'(z) / NE'(z) }.
    DerivPartialOverFull,
}

impl RatioKind {
    pub const ALL: [RatioKind; 4] = [
        RatioKind::FullOverPartial,
        RatioKind::PartialOverFull,
        RatioKind::DerivFullOverPartial,
        RatioKind::DerivPartialOverFull,
    ];

    /// Kebab-case name used by the CLI and serialized reports.
    pub fn name(self) -> &'static str {
        match self {
            RatioKind::FullOverPartial => "full-over-partial",
            RatioKind::PartialOverFull => "partial-over-full",
            RatioKind::DerivFullOverPartial => "deriv-full-over-partial",
            RatioKind::DerivPartialOverFull => "deriv-partial-over-full",
        }
    }

    pub fn is_derivative(self) -> bool {
        matches!(
            self,
            RatioKind::DerivFullOverPartial | RatioKind::DerivPartialOverFull
        )
    }
}

impl fmt::Display for RatioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RatioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RatioKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "unknown ratio case {s:?}; expected one of: full-over-partial, \
                     partial-over-full, deriv-full-over-partial, deriv-partial-over-full"
                ))
            })
    }
}

/// A ratio family together with the partial-sum order m. Order 0 denotes
/// the partial sum P_0(z) = z (derivative 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RatioCase {
    pub kind: RatioKind,
    pub m: usize,
}

impl RatioCase {
    pub fn new(kind: RatioKind, m: usize) -> Self {
        Self { kind, m }
    }
}
