use crate::{Error, Result};

#[allow(clippy::excessive_precision)]
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_78;

/// `ln(n!)`. Exact integer product for `n <= 20`, Stirling series above.
pub fn ln_factorial(n: i64) -> Result<f64> {
    if n < 0 {
        return Err(Error::Domain(format!("ln_factorial requires n >= 0, got {n}")));
    }
    let n = u32::try_from(n)
        .map_err(|_| Error::Domain(format!("ln_factorial argument {n} too large")))?;
    Ok(ln_fact(n))
}

pub(crate) fn ln_fact(n: u32) -> f64 {
    if n <= 20 {
        // 20! < 2^63, so the product is exact
        let prod: u64 = (1..=u64::from(n)).product();
        return (prod as f64).ln();
    }
    let x = f64::from(n);
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    // Bernoulli-number corrections B_{2k} / (2k (2k-1) x^{2k-1})
    let series = inv
        * (1.0 / 12.0
            - inv2
                * (1.0 / 360.0
                    - inv2
                        * (1.0 / 1260.0
                            - inv2
                                * (1.0 / 1680.0
                                    - inv2 * (1.0 / 1188.0 - inv2 * (691.0 / 360_360.0))))));
    x * x.ln() - x + 0.5 * x.ln() + HALF_LN_2PI + series
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_region() {
        assert_eq!(ln_factorial(0).unwrap(), 0.0);
        assert_eq!(ln_factorial(1).unwrap(), 0.0);
        assert_eq!(ln_factorial(5).unwrap(), 120f64.ln());
        assert!((ln_factorial(20).unwrap() - 42.335_616_460_753_485).abs() < 1e-13);
    }

    #[test]
    fn negative_is_domain_error() {
        assert!(matches!(ln_factorial(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn stirling_region_matches_log_sum() {
        // reference values: 40-digit evaluation of ln(n!)
        let frozen = [
            (21, 45.380_138_898_476_908),
            (50, 148.477_766_951_773_03),
            (64, 205.168_199_482_641_2),
            (170, 706.573_062_245_787_35),
        ];
        for (n, want) in frozen {
            let got = ln_fact(n);
            assert!(((got - want) / want).abs() <= 1e-14, "n={n}: {got} vs {want}");
        }
        for n in 21..=170u32 {
            let direct: f64 = (2..=n).map(|k| f64::from(k).ln()).sum();
            let got = ln_fact(n);
            assert!(((got - direct) / direct).abs() <= 1e-13, "n={n}");
        }
    }
}
