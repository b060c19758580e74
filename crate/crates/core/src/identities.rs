//! Closed forms at alpha = 2 and small integer beta, used as independent
//! oracles for the series evaluator and the published special-case bounds.
//!
//! With w = sqrt(z) (principal branch; every expression below is even in
//! w, so the branch choice cancels):
//!
//! ```text
//! NE_{2,1}(z) = z cosh w
//! NE_{2,2}(z) = w sinh w
//! NE_{2,3}(z) = 2 (cosh w - 1)
//! NE_{2,4}(z) = 6 (sinh w - w) / w
//! ```
//!
//! Derivatives (d/dz, using dw/dz = 1/(2w)):
//!
//! ```text
//! NE'_{2,1}(z) = cosh w + (w/2) sinh w
//! NE'_{2,2}(z) = (sinh(w)/w + cosh w) / 2
//! NE'_{2,3}(z) = sinh(w) / w
//! NE'_{2,4}(z) = 3 (w cosh w - sinh w) / w^3
//! ```
//!
//! The derivative forms are validated against central finite differences
//! of the series evaluator in this module's tests before serving as
//! oracles elsewhere.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::eval::{eval_normalized, eval_normalized_derivative};
use crate::params::MLParams;
use crate::table::build_table;

/// The closed-form family at alpha = 2, beta in {1, 2, 3, 4}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecialCase {
    E21,
    E22,
    E23,
    E24,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 4] = [
        SpecialCase::E21,
        SpecialCase::E22,
        SpecialCase::E23,
        SpecialCase::E24,
    ];

    pub fn params(self) -> MLParams {
        let beta = match self {
            SpecialCase::E21 => 1.0,
            SpecialCase::E22 => 2.0,
            SpecialCase::E23 => 3.0,
            SpecialCase::E24 => 4.0,
        };
        MLParams::new(2.0, beta).expect("constant parameters are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            SpecialCase::E21 => "e21",
            SpecialCase::E22 => "e22",
            SpecialCase::E23 => "e23",
            SpecialCase::E24 => "e24",
        }
    }
}

/// sinh(w)/w with the limit 1 at w = 0; no cancellation for small w.
fn sinhc(w: Complex64) -> Complex64 {
    if w.re == 0.0 && w.im == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        w.sinh() / w
    }
}

/// Closed-form value of the normalized function. Entire in z; the E23
/// case uses cosh w - 1 = 2 sinh^2(w/2) (cancellation-free), and E24
/// switches to its Taylor series for |z| < 1e-4 where sinh w - w would
/// cancel.
pub fn closed_form(case: SpecialCase, z: Complex64) -> Complex64 {
    let w = z.sqrt();
    match case {
        SpecialCase::E21 => z * w.cosh(),
        SpecialCase::E22 => w * w.sinh(),
        SpecialCase::E23 => {
            let half = (0.5 * w).sinh();
            4.0 * half * half
        }
        SpecialCase::E24 => {
            if z.norm() < 1e-4 {
                // 6 (sinh w - w)/w = z + z^2/20 + z^3/840 + O(z^4).
                z * (1.0 + z * (1.0 / 20.0 + z * (1.0 / 840.0)))
            } else {
                6.0 * (w.sinh() - w) / w
            }
        }
    }
}

/// Closed-form derivative of the normalized function. The E24 case uses
/// its Taylor series for |z| <= 1e-2, where the direct numerator
/// w cosh w - sinh w loses about 3 eps/|z| of absolute accuracy.
pub fn closed_form_derivative(case: SpecialCase, z: Complex64) -> Complex64 {
    let w = z.sqrt();
    match case {
        SpecialCase::E21 => w.cosh() + 0.5 * w * w.sinh(),
        SpecialCase::E22 => 0.5 * (sinhc(w) + w.cosh()),
        SpecialCase::E23 => sinhc(w),
        SpecialCase::E24 => {
            if z.norm() <= 1e-2 {
                // 3 (w cosh w - sinh w)/w^3
                //   = 1 + z/10 + z^2/280 + z^3/15120 + z^4/1330560 + ...
                1.0 + z
                    * (0.1
                        + z * (1.0 / 280.0 + z * (1.0 / 15120.0 + z * (1.0 / 1330560.0))))
            } else {
                3.0 * (w * w.cosh() - w.sinh()) / (w * w * w)
            }
        }
    }
}

/// Max over the grid of |eval_normalized - closed_form|. Builds the series
/// table for the case's parameters internally at tolerance 1e-15.
pub fn identity_residual(case: SpecialCase, grid: &[Complex64]) -> Result<f64> {
    let table = build_table(case.params(), 1e-15)?;
    let mut worst = 0.0f64;
    for &z in grid {
        let series = eval_normalized(&table, z)?;
        let closed = closed_form(case, z);
        worst = worst.max((series - closed).norm());
    }
    Ok(worst)
}

/// Max over the grid of |eval_normalized_derivative - closed_form_derivative|.
pub fn identity_residual_derivative(case: SpecialCase, grid: &[Complex64]) -> Result<f64> {
    let table = build_table(case.params(), 1e-15)?;
    let mut worst = 0.0f64;
    for &z in grid {
        let series = eval_normalized_derivative(&table, z)?;
        let closed = closed_form_derivative(case, z);
        worst = worst.max((series - closed).norm());
    }
    Ok(worst)
}
