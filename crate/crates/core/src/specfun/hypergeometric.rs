//! The two confluent series appearing in the logarithmic potential, both at
//! argument `-x^2`.

use serde::Serialize;

use super::factorial::ln_fact;
use super::sum::CompensatedSum;
use crate::{Error, Result};

/// Largest `|x|` for which `1F1(1; 1/2; -x^2)` is validated to 1e-12 relative.
pub const HYP1F1_VALID_MAX: f64 = 8.0;
/// Largest `|x|` for which `2F2(1, 1; 3/2, 2; -x^2)` is validated to 1e-12
/// relative in double precision.
pub const HYP2F2_VALID_MAX: f64 = 3.0;

const MAX_TERMS: usize = 4000;

/// A series evaluation with its error metadata.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    /// Estimated absolute error of `value`.
    pub error_estimate: f64,
    /// `false` when the argument lies outside the validated range.
    pub validated: bool,
}

fn check_finite(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("hypergeometric argument must be finite, got {x}")))
    }
}

/// `1F1(1; 1/2; -x^2)` through the Kummer-transformed series
/// `e^{-x^2} 1F1(-1/2; 1/2; x^2) = e^{-y} - sum_{k>=1} e^{-y} y^k / (k! (2k-1))`,
/// `y = x^2`. Every term after the first has the same sign. The Poisson
/// weights `e^{-y} y^k / k!` are generated outward from their mode, so nothing
/// overflows.
pub fn hyp1f1_gauss(x: f64) -> Result<SeriesValue> {
    check_finite(x)?;
    let y = x * x;
    if y == 0.0 {
        return Ok(SeriesValue { value: 1.0, error_estimate: 0.0, validated: true });
    }

    let mode = (y.floor() as u64).max(1);
    let ln_mode = mode as f64 * y.ln() - y - ln_fact(mode.min(u64::from(u32::MAX)) as u32);
    let p_mode = ln_mode.exp();

    let mut acc = CompensatedSum::new();
    let mut terms = 0usize;

    // downward from the mode to k = 1
    let mut p = p_mode;
    let mut k = mode;
    loop {
        acc.add(p / (2 * k - 1) as f64);
        terms += 1;
        if k == 1 || p < f64::EPSILON * 1e-3 * acc.value() {
            break;
        }
        p *= k as f64 / y;
        k -= 1;
    }

    // upward from mode + 1
    let mut p = p_mode;
    let mut k = mode;
    while terms < MAX_TERMS {
        p *= y / (k + 1) as f64;
        k += 1;
        let term = p / (2 * k - 1) as f64;
        acc.add(term);
        terms += 1;
        if term < f64::EPSILON * 1e-3 * acc.value() {
            break;
        }
    }

    let head = (-y).exp();
    let tail = acc.value();
    let value = head - tail;
    let error_estimate = 4.0 * f64::EPSILON * (1.0 + y) * (head + tail);
    Ok(SeriesValue {
        value,
        error_estimate,
        validated: x.abs() <= HYP1F1_VALID_MAX,
    })
}

/// `1F1(1; 1/2; -x^2)` by its direct alternating series
/// `sum_k (-x^2)^k / (1/2)_k`, with compensated summation. Only usable for
/// moderate `|x|`; kept as an independent cross-check of [`hyp1f1_gauss`].
pub fn hyp1f1_gauss_direct(x: f64) -> Result<SeriesValue> {
    check_finite(x)?;
    let y = x * x;
    let (value, abs_sum) = alternating_series(y, |k| 1.0 / (k as f64 - 0.5), |_| 1.0);
    Ok(SeriesValue {
        value,
        error_estimate: 8.0 * f64::EPSILON * abs_sum,
        validated: x.abs() <= 2.0,
    })
}

/// `2F2(1, 1; 3/2, 2; -x^2) = sum_k (-x^2)^k / ((3/2)_k (k + 1))`, summed with
/// compensation. There is no sign-preserving transformation, so the
/// cancellation error grows like `e^{x^2}` and is reported in
/// `error_estimate`.
pub fn hyp2f2_gauss(x: f64) -> Result<SeriesValue> {
    check_finite(x)?;
    let y = x * x;
    if y > 700.0 {
        return Ok(SeriesValue { value: f64::NAN, error_estimate: f64::INFINITY, validated: false });
    }
    let (value, abs_sum) =
        alternating_series(y, |k| 1.0 / (k as f64 + 0.5), |k| 1.0 / (k as f64 + 1.0));
    Ok(SeriesValue {
        value,
        error_estimate: 8.0 * f64::EPSILON * abs_sum,
        validated: x.abs() <= HYP2F2_VALID_MAX,
    })
}

/// Sums `sum_k a_k w_k (-y)^k` where `a_0 = 1` and
/// `a_k = a_{k-1} * ratio(k)`. Returns the sum and `sum |terms|`.
fn alternating_series(y: f64, ratio: impl Fn(usize) -> f64, weight: impl Fn(usize) -> f64) -> (f64, f64) {
    let mut acc = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut a = 1.0;
    acc.add(weight(0));
    abs_sum += weight(0);
    for k in 1..MAX_TERMS {
        a *= -y * ratio(k);
        let term = a * weight(k);
        acc.add(term);
        abs_sum += term.abs();
        if (k as f64) > y && term.abs() <= f64::EPSILON * 1e-3 * acc.value().abs() {
            break;
        }
    }
    (acc.value(), abs_sum)
}
