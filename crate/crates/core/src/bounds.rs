//! Sharp ratio bounds, their hypothesis thresholds, and the proof-side
//! machinery: coefficient tail inequalities and Mobius witness functions.
//!
//! For beta at or above the case threshold, the four ratio families obey
//!
//! ```text
//! Re { NE /P_m  } >= (b^2 - b - 1)/b^2      Re { P_m /NE  } >= b^2/(b^2 + b + 1)
//! Re { NE'/P_m' } >= (b^2 - 3b - 2)/b^2     Re { P_m'/NE' } >= b^2/(b^2 + 3b + 2)
//! ```
//!
//! on the closed unit disk. The value thresholds solve b^2 - b - 1 = 0
//! (golden ratio) and the derivative thresholds solve b^2 - 3b - 2 = 0.
//! Each inequality is equivalent to |w(z)| <= 1 for an explicit Mobius
//! witness w built from the partial head P and tail T of the reduced
//! series; [`w_witness`] constructs it and [`mobius_shifted_ratio`] the
//! affine rescale of the ratio that (1+w)/(1-w) must reproduce.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::{
    eval_ratio, partial_derivative, reduced_partial, require_in_disk, tail_part,
    weighted_tail_part, DENOMINATOR_GUARD,
};
use crate::kahan::KahanSum;
use crate::params::{RatioCase, RatioKind};
use crate::table::CoefficientTable;

/// Threshold for the value ratios: (1 + sqrt 5)/2, the positive root of
/// b^2 - b - 1.
pub const VALUE_THRESHOLD: f64 = 1.618033988749895;

/// Threshold for the derivative ratios: (3 + sqrt 17)/2, the positive root
/// of b^2 - 3b - 2.
pub const DERIV_THRESHOLD: f64 = 3.5615528128088303;

/// (value threshold, derivative threshold).
pub fn thresholds() -> (f64, f64) {
    (VALUE_THRESHOLD, DERIV_THRESHOLD)
}

/// Minimal beta for which the bound of the given family is claimed.
pub fn threshold_for(kind: RatioKind) -> f64 {
    if kind.is_derivative() {
        DERIV_THRESHOLD
    } else {
        VALUE_THRESHOLD
    }
}

/// A closed-form sharp bound for one ratio family at a given beta.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TheoremBound {
    pub kind: RatioKind,
    pub beta: f64,
    /// Lower bound for the real part of the ratio on the closed disk.
    pub value: f64,
    /// Minimal beta for which the bound is claimed.
    pub threshold: f64,
}

/// Upper bound (b^2 + b + 1)/b^2 for |NE| on the closed disk, valid for
/// beta >= 1 (with alpha >= 1 assumed at use sites).
pub fn lemma_modulus_bound(beta: f64) -> Result<f64> {
    if !beta.is_finite() || beta < 1.0 {
        return Err(Error::HypothesisViolated {
            quantity: "modulus bound",
            detail: format!("requires beta >= 1, got beta = {beta}"),
        });
    }
    Ok((beta * beta + beta + 1.0) / (beta * beta))
}

/// Upper bound (b^2 + 3b + 2)/b^2 for |NE'| on the closed disk, valid for
/// beta >= 1 (with alpha >= 1 assumed at use sites).
pub fn lemma_derivative_bound(beta: f64) -> Result<f64> {
    if !beta.is_finite() || beta < 1.0 {
        return Err(Error::HypothesisViolated {
            quantity: "derivative modulus bound",
            detail: format!("requires beta >= 1, got beta = {beta}"),
        });
    }
    Ok((beta * beta + 3.0 * beta + 2.0) / (beta * beta))
}

/// The bound formula without the hypothesis gate. Below the threshold the
/// returned value carries no validity claim (it may be negative); the
/// scan-beta explorer uses this to probe threshold behavior.
pub fn raw_bound(kind: RatioKind, beta: f64) -> f64 {
    let b2 = beta * beta;
    match kind {
        RatioKind::FullOverPartial => (b2 - beta - 1.0) / b2,
        RatioKind::PartialOverFull => b2 / (b2 + beta + 1.0),
        RatioKind::DerivFullOverPartial => (b2 - 3.0 * beta - 2.0) / b2,
        RatioKind::DerivPartialOverFull => b2 / (b2 + 3.0 * beta + 2.0),
    }
}

/// The sharp bound for one family, gated on beta >= threshold. The bound
/// is independent of alpha and of the partial-sum order m.
pub fn theorem_bound(kind: RatioKind, beta: f64) -> Result<TheoremBound> {
    let threshold = threshold_for(kind);
    if !beta.is_finite() || beta < threshold {
        return Err(Error::HypothesisViolated {
            quantity: kind.name(),
            detail: format!("requires beta >= {threshold}, got beta = {beta}"),
        });
    }
    Ok(TheoremBound {
        kind,
        beta,
        value: raw_bound(kind, beta),
        threshold,
    })
}

/// Left-hand side of the coefficient tail inequality and whether it stays
/// at or below 1 (with 1e-10 slack).
///
/// Unweighted: sum_{n<=m} A_n + (b^2/(b+1)) sum_{n>m} A_n <= 1.
/// Weighted:   sum_{n<=m} (n+1) A_n + (b^2/(3b+2)) sum_{n>m} (n+1) A_n <= 1.
///
/// The reported LHS includes the table's certified tail bound, so the
/// verdict covers the dropped part of the series as well. Callers should
/// build the table with tolerance <= 1e-12 for the verdict to be
/// meaningful.
pub fn check_tail_inequality(table: &CoefficientTable, m: usize, weighted: bool) -> (f64, bool) {
    let beta = table.params().beta();
    let (factor, tail_cert) = if weighted {
        (
            beta * beta / (3.0 * beta + 2.0),
            table.weighted_tail_bound(),
        )
    } else {
        (beta * beta / (beta + 1.0), table.tail_bound())
    };
    let mut head = KahanSum::new();
    let mut tail = KahanSum::new();
    for (i, &a) in table.coefficients().iter().enumerate() {
        let n = i + 1;
        let term = if weighted { (n + 1) as f64 * a } else { a };
        if n <= m {
            head.add(term);
        } else {
            tail.add(term);
        }
    }
    let lhs = head.value() + factor * (tail.value() + tail_cert);
    (lhs, lhs <= 1.0 + 1e-10)
}

/// Witness constants for one family: the ratio bound Re >= num/den is
/// equivalent to |w| <= 1 with w built from P (partial head) and T (tail)
/// of the corresponding reduced series.
struct WitnessConstants {
    /// b^2 / (b+1), or b^2 / (3b+2) for derivative families.
    c: f64,
    /// (b^2 + b + 1)/(b+1), or (b^2 + 3b + 2)/(3b+2).
    d: f64,
    /// (b^2 - b - 1)/(b+1), or (b^2 - 3b - 2)/(3b+2).
    e: f64,
}

fn witness_constants(kind: RatioKind, beta: f64) -> WitnessConstants {
    let b2 = beta * beta;
    let den = if kind.is_derivative() {
        3.0 * beta + 2.0
    } else {
        beta + 1.0
    };
    WitnessConstants {
        c: b2 / den,
        d: (b2 + den) / den,
        e: (b2 - den) / den,
    }
}

/// Head/tail pair (P, T) for the series family of `kind` at z.
fn head_tail(
    table: &CoefficientTable,
    kind: RatioKind,
    m: usize,
    z: Complex64,
) -> (Complex64, Complex64) {
    if kind.is_derivative() {
        (partial_derivative(table, m, z), weighted_tail_part(table, m, z))
    } else {
        (reduced_partial(table, m, z), tail_part(table, m, z))
    }
}

/// The Mobius witness w(z) for the given case:
///
/// ```text
/// full-over-partial families:  w =  c T / (2P + c T)
/// partial-over-full families:  w = -d T / (2P - e T)
/// ```
///
/// with (c, d, e) from [`witness_constants`]. In all cases
/// (1+w)/(1-w) equals the shifted, rescaled ratio returned by
/// [`mobius_shifted_ratio`], and |w| <= 1 on the closed disk is equivalent
/// to the family's bound. w(0) = 0 since the tail has no constant term.
pub fn w_witness(table: &CoefficientTable, case: RatioCase, z: Complex64) -> Result<Complex64> {
    require_in_disk(z)?;
    let beta = table.params().beta();
    let threshold = threshold_for(case.kind);
    if beta < threshold {
        return Err(Error::HypothesisViolated {
            quantity: "witness construction",
            detail: format!("requires beta >= {threshold}, got beta = {beta}"),
        });
    }
    let k = witness_constants(case.kind, beta);
    let (p, t) = head_tail(table, case.kind, case.m, z);
    let (numerator, denominator) = match case.kind {
        RatioKind::FullOverPartial | RatioKind::DerivFullOverPartial => {
            (k.c * t, 2.0 * p + k.c * t)
        }
        RatioKind::PartialOverFull | RatioKind::DerivPartialOverFull => {
            (-k.d * t, 2.0 * p - k.e * t)
        }
    };
    let modulus = denominator.norm();
    if modulus < DENOMINATOR_GUARD {
        return Err(Error::SingularDenominator {
            modulus,
            guard: DENOMINATOR_GUARD,
        });
    }
    Ok(numerator / denominator)
}

/// The affine rescale of the ratio that the witness relation targets:
///
/// ```text
/// full-over-partial:  c * ratio - e
/// partial-over-full:  d * ratio - c
/// ```
///
/// Back-substituting [`w_witness`] as (1+w)/(1-w) reproduces this value;
/// the bound Re(ratio) >= bound is Re of this expression >= 0.
pub fn mobius_shifted_ratio(
    table: &CoefficientTable,
    case: RatioCase,
    z: Complex64,
) -> Result<Complex64> {
    let ratio = eval_ratio(table, case, z)?;
    let k = witness_constants(case.kind, table.params().beta());
    Ok(match case.kind {
        RatioKind::FullOverPartial | RatioKind::DerivFullOverPartial => k.c * ratio - k.e,
        RatioKind::PartialOverFull | RatioKind::DerivPartialOverFull => k.d * ratio - k.c,
    })
}
