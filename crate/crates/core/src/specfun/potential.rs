//! Closed-form route to the entropy integral through the logarithmic
//! potential of `H_n`.
//!
//! The printed formula for `V_n` is ambiguous in its inner sum. It is
//! evaluated here with the sum read as `k = 1..n` and the hypergeometric
//! argument taken at the evaluation point. That reading reproduces `n = 1`
//! exactly and fails from `n = 2` on, so every value carries an
//! `experimental` flag set from a comparison with the quadrature oracle.

use serde::Serialize;

use super::factorial::ln_fact;
use super::hermite::hermite_nodes;
use super::hypergeometric::{hyp1f1_gauss, hyp2f2_gauss};
use super::sum::CompensatedSum;
use super::{EULER_GAMMA, ROOTS_MAX_ORDER, SQRT_PI};
use crate::{quad, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogPotential {
    pub value: f64,
    /// Raised when the closed-form entropy integral built from `V_n` disagrees
    /// with quadrature by more than 1e-6 relative for this `n`.
    pub experimental: bool,
}

/// `2^n n! sqrt(pi)` in log form.
pub(crate) fn ln_norm(n: u32) -> f64 {
    f64::from(n) * std::f64::consts::LN_2 + ln_fact(n) + SQRT_PI.ln()
}

fn binomial(n: u32, k: u32) -> f64 {
    (ln_fact(n) - ln_fact(k) - ln_fact(n - k)).exp().round()
}

/// `sum_{k=1..n} C(n,k) (-1)^k 2^k / k`
fn inner_coefficient(n: u32) -> f64 {
    let mut acc = CompensatedSum::new();
    for k in 1..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * binomial(n, k) * 2f64.powi(k as i32) / f64::from(k));
    }
    acc.value()
}

fn log_potential_raw(n: u32, x: f64) -> Result<f64> {
    let f22 = hyp2f2_gauss(x)?.value;
    let f11 = hyp1f1_gauss(x)?.value;
    let bracket = std::f64::consts::LN_2 + 0.5 * EULER_GAMMA - x * x * f22
        + 0.5 * inner_coefficient(n) * f11;
    Ok(ln_norm(n).exp() * bracket)
}

/// `V_n(x)`, the logarithmic potential of `H_n`, for `1 <= n <= 32`.
pub fn log_potential(n: super::HermiteOrder, x: f64) -> Result<LogPotential> {
    let order = n.get();
    if order == 0 {
        return Err(Error::NoRoots);
    }
    if order > ROOTS_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: i64::from(order),
            min: 1,
            max: i64::from(ROOTS_MAX_ORDER),
        });
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("log_potential requires finite x, got {x}")));
    }
    let value = log_potential_raw(order, x)?;
    Ok(LogPotential {
        value,
        experimental: !quad::closed_form_validated(order),
    })
}

/// `I_3(n) = 2^n n! sqrt(pi) ln(2^{2n}) - 2 sum_k V_n(x_{n,k})` over the roots of
/// `H_n`. Unvalidated for `n >= 2`; see the module docs.
pub fn entropy_integral_closed_form(n: super::HermiteOrder) -> Result<f64> {
    let order = n.get();
    if order == 0 {
        return Ok(0.0);
    }
    if order > ROOTS_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: i64::from(order),
            min: 0,
            max: i64::from(ROOTS_MAX_ORDER),
        });
    }
    let mut acc = CompensatedSum::new();
    for r in hermite_nodes(order as usize) {
        acc.add(log_potential_raw(order, r)?);
    }
    let lead = ln_norm(order).exp() * 2.0 * f64::from(order) * std::f64::consts::LN_2;
    Ok(lead - 2.0 * acc.value())
}
