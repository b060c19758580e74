//! Series evaluation on the closed unit disk.
//!
//! Everything here works on the "reduced" series F(z) = NE(z)/z
//! = 1 + sum A_n z^n and its partial prefixes: the common factor z of the
//! value ratios is cancelled algebraically, which turns the 0/0 at the
//! origin into a removable point where every ratio equals 1. Derivative
//! series already have constant term 1 and need no cancellation.
//!
//! Sums run in ascending n with per-component compensated accumulation;
//! the coefficients decay monotonically in the regimes of interest, so the
//! rounding budget stays a few ulps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::params::{RatioCase, RatioKind};
use crate::table::CoefficientTable;

/// Radial slack accepted past |z| = 1, absorbing rounding in points placed
/// exactly on the boundary: membership is re^2 + im^2 <= 1 + DISK_SLACK.
pub const DISK_SLACK: f64 = 1e-12;

/// Ratio denominators with modulus below this are reported singular rather
/// than divided by. Verification certifies 1 - sum A_n > 0 beforehand, so
/// the guard never fires under the theorem hypotheses.
pub const DENOMINATOR_GUARD: f64 = 1e-12;

pub(crate) fn require_in_disk(z: Complex64) -> Result<()> {
    if z.norm_sqr() <= 1.0 + DISK_SLACK {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "|z| = {} lies outside the closed unit disk",
            z.norm()
        )))
    }
}

/// sum_{n=lo..=hi} w(n) A_n z^n with w(n) = n+1 for derivative series and
/// 1 otherwise. Real and imaginary parts are compensated separately.
fn series_part(coeffs: &[f64], lo: usize, hi: usize, z: Complex64, derivative: bool) -> Complex64 {
    let hi = hi.min(coeffs.len());
    if lo > hi {
        return Complex64::new(0.0, 0.0);
    }
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    let mut zp = z.powu(lo as u32);
    for n in lo..=hi {
        let w = if derivative { (n + 1) as f64 } else { 1.0 };
        let c = w * coeffs[n - 1];
        re.add(c * zp.re);
        im.add(c * zp.im);
        zp *= z;
    }
    Complex64::new(re.value(), im.value())
}

/// F(z) = 1 + sum_{n=1..N} A_n z^n.
pub(crate) fn reduced_full(table: &CoefficientTable, z: Complex64) -> Complex64 {
    1.0 + series_part(table.coefficients(), 1, usize::MAX, z, false)
}

/// 1 + sum_{n=1..min(m,N)} A_n z^n.
pub(crate) fn reduced_partial(table: &CoefficientTable, m: usize, z: Complex64) -> Complex64 {
    1.0 + series_part(table.coefficients(), 1, m, z, false)
}

/// NE'(z) = 1 + sum_{n=1..N} (n+1) A_n z^n.
pub(crate) fn full_derivative(table: &CoefficientTable, z: Complex64) -> Complex64 {
    1.0 + series_part(table.coefficients(), 1, usize::MAX, z, true)
}

/// 1 + sum_{n=1..min(m,N)} (n+1) A_n z^n.
pub(crate) fn partial_derivative(table: &CoefficientTable, m: usize, z: Complex64) -> Complex64 {
    1.0 + series_part(table.coefficients(), 1, m, z, true)
}

/// sum_{n=m+1..N} A_n z^n, the witness tail (computed directly rather than
/// as a difference, so no cancellation enters).
pub(crate) fn tail_part(table: &CoefficientTable, m: usize, z: Complex64) -> Complex64 {
    series_part(table.coefficients(), m + 1, usize::MAX, z, false)
}

/// sum_{n=m+1..N} (n+1) A_n z^n.
pub(crate) fn weighted_tail_part(table: &CoefficientTable, m: usize, z: Complex64) -> Complex64 {
    series_part(table.coefficients(), m + 1, usize::MAX, z, true)
}

/// E_{a,b}(z) = sum_{n>=0} z^n / Gamma(a n + b), truncated at the table's
/// certified index; absolute truncation error <= table tolerance.
/// beta = 1 reproduces the one-parameter function.
pub fn eval_ml(table: &CoefficientTable, z: Complex64) -> Result<Complex64> {
    require_in_disk(z)?;
    let inv_gamma_beta = (-crate::gamma::log_gamma_pos(table.params().beta())).exp();
    Ok(reduced_full(table, z) * inv_gamma_beta)
}

/// The normalized function NE(z) = z + sum_{n>=1} A_n z^{n+1}.
pub fn eval_normalized(table: &CoefficientTable, z: Complex64) -> Result<Complex64> {
    require_in_disk(z)?;
    Ok(reduced_full(table, z) * z)
}

/// NE'(z) = 1 + sum_{n>=1} (n+1) A_n z^n, with absolute truncation error
/// <= the table's weighted tail bound.
pub fn eval_normalized_derivative(table: &CoefficientTable, z: Complex64) -> Result<Complex64> {
    require_in_disk(z)?;
    Ok(full_derivative(table, z))
}

/// Partial sum of order m: z + sum_{n=1..m} A_n z^{n+1}; order 0 gives z.
/// This is an exact finite sum (up to kernel accuracy of the A_n); orders
/// at or past the truncation index agree with `eval_normalized` to within
/// the tail bound.
pub fn eval_partial_sum(table: &CoefficientTable, m: usize, z: Complex64) -> Result<Complex64> {
    require_in_disk(z)?;
    Ok(reduced_partial(table, m, z) * z)
}

/// Derivative of the order-m partial sum: 1 + sum_{n=1..m} (n+1) A_n z^n.
pub fn eval_partial_sum_derivative(
    table: &CoefficientTable,
    m: usize,
    z: Complex64,
) -> Result<Complex64> {
    require_in_disk(z)?;
    Ok(partial_derivative(table, m, z))
}

/// The requested ratio at z. For the value cases the shared factor z is
/// cancelled analytically, so z = 0 is regular and every case returns 1
/// there. Denominators with modulus below [`DENOMINATOR_GUARD`] error out.
pub fn eval_ratio(table: &CoefficientTable, case: RatioCase, z: Complex64) -> Result<Complex64> {
    require_in_disk(z)?;
    let (num, den) = match case.kind {
        RatioKind::FullOverPartial => (reduced_full(table, z), reduced_partial(table, case.m, z)),
        RatioKind::PartialOverFull => (reduced_partial(table, case.m, z), reduced_full(table, z)),
        RatioKind::DerivFullOverPartial => (
            full_derivative(table, z),
            partial_derivative(table, case.m, z),
        ),
        RatioKind::DerivPartialOverFull => (
            partial_derivative(table, case.m, z),
            full_derivative(table, z),
        ),
    };
    let modulus = den.norm();
    if modulus < DENOMINATOR_GUARD {
        return Err(Error::SingularDenominator {
            modulus,
            guard: DENOMINATOR_GUARD,
        });
    }
    Ok(num / den)
}
