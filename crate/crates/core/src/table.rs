//! Series coefficients with certified truncation.

use crate::error::{Error, Result};
use crate::gamma::log_gamma_pos;
use crate::kahan::KahanSum;
use crate::params::MLParams;

/// Hard ceiling on the truncation index search. The series is entire, so
/// hitting the cap indicates a kernel problem, not a mathematical limit.
pub const TRUNCATION_CAP: usize = 10_000;

/// Multiplicative inflation absorbing ~1e-15 relative kernel rounding in
/// certificate arithmetic, so a computed tail bound cannot undershoot the
/// true tail by a last-bit comparison.
const CERTIFICATE_SLACK: f64 = 1.0 + 1e-12;

/// n-th series coefficient A_n = Gamma(beta) / Gamma(alpha n + beta),
/// computed in log space so Gamma(alpha n + beta) never overflows.
/// n = 0 returns 1 (the empty-product convention used by the reduced
/// series 1 + sum A_n z^n).
pub fn coefficient(params: MLParams, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let lg_beta = log_gamma_pos(params.beta());
    (lg_beta - log_gamma_pos(params.alpha() * n as f64 + params.beta())).exp()
}

/// Immutable table of A_1..A_N for one parameter pair.
///
/// On the closed unit disk the dropped tail of the value series is at most
/// `tail_bound` and the dropped tail of the derivative series (weights
/// n+1) is at most `weighted_tail_bound`; both are certified to be at or
/// below the tolerance the table was built with. Immutability makes the
/// table safely shareable across concurrent verification workers.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    params: MLParams,
    coeffs: Vec<f64>,
    tol: f64,
    tail_bound: f64,
    weighted_tail_bound: f64,
    coefficient_sum: f64,
    weighted_coefficient_sum: f64,
}

impl CoefficientTable {
    pub fn params(&self) -> MLParams {
        self.params
    }

    /// A_1..A_N; index i holds A_{i+1}.
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// The certified truncation index N.
    pub fn truncation_index(&self) -> usize {
        self.coeffs.len()
    }

    /// Tolerance the table was built with.
    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Certified bound on sum_{n>N} A_n.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// Certified bound on sum_{n>N} (n+1) A_n.
    pub fn weighted_tail_bound(&self) -> f64 {
        self.weighted_tail_bound
    }

    /// Compensated sum of the stored A_n.
    pub fn coefficient_sum(&self) -> f64 {
        self.coefficient_sum
    }

    /// Compensated sum of the stored (n+1) A_n.
    pub fn weighted_coefficient_sum(&self) -> f64 {
        self.weighted_coefficient_sum
    }
}

/// Builds a table whose certified tail bounds (plain and (n+1)-weighted)
/// are both at or below `tol` on the closed unit disk.
///
/// The certificate anchors at the computed A_{N+1} and dominates the tail
/// by a geometric series with ratio q:
///
/// - alpha >= 1, beta >= 1: q = 1/(beta+1), valid because
///   A_{k+1}/A_k = Gamma(alpha k + beta)/Gamma(alpha k + alpha + beta)
///   <= 1/(alpha k + beta) <= 1/(beta + 1) for k >= 1.
/// - otherwise: ratio test with q = A_{N+2}/A_{N+1}, valid because the
///   coefficient log-ratios strictly decrease in n (digamma is increasing
///   on the positive axis), so the first dropped ratio dominates the rest.
///
/// The weighted tail uses sum_{j>=0} (N+2+j) q^j = (N+2)/(1-q) + q/(1-q)^2.
pub fn build_table(params: MLParams, tol: f64) -> Result<CoefficientTable> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be finite and positive, got {tol}"
        )));
    }
    let geometric = params.geometric_regime();
    let mut coeffs = Vec::new();
    let mut a_next = coefficient(params, 1);
    for n in 1..=TRUNCATION_CAP {
        coeffs.push(a_next);
        a_next = coefficient(params, n + 1);

        let (tail, weighted) = if a_next == 0.0 {
            // A_{N+1} underflowed, so the true tail is below
            // 2^-1074 * (N+3); MIN_POSITIVE dominates it comfortably.
            (f64::MIN_POSITIVE, f64::MIN_POSITIVE)
        } else {
            let q = if geometric {
                1.0 / (params.beta() + 1.0)
            } else {
                coefficient(params, n + 2) / a_next * CERTIFICATE_SLACK
            };
            if q.is_nan() || q >= 1.0 {
                continue;
            }
            let tail = a_next / (1.0 - q) * CERTIFICATE_SLACK;
            let weighted = a_next
                * ((n + 2) as f64 / (1.0 - q) + q / ((1.0 - q) * (1.0 - q)))
                * CERTIFICATE_SLACK;
            (tail, weighted)
        };

        if tail <= tol && weighted <= tol {
            let mut sum = KahanSum::new();
            let mut weighted_sum = KahanSum::new();
            for (i, &a) in coeffs.iter().enumerate() {
                sum.add(a);
                weighted_sum.add((i + 2) as f64 * a);
            }
            return Ok(CoefficientTable {
                params,
                coeffs,
                tol,
                tail_bound: tail,
                weighted_tail_bound: weighted,
                coefficient_sum: sum.value(),
                weighted_coefficient_sum: weighted_sum.value(),
            });
        }
    }
    Err(Error::TruncationFailure {
        alpha: params.alpha(),
        beta: params.beta(),
        tol,
        cap: TRUNCATION_CAP,
    })
}
