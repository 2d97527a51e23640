//! Special functions needed by the entropy integrals.
//!
//! Hermite polynomials use the physicists' convention (weight `e^{-z^2}`) and
//! are always evaluated through the three-term recurrence.

mod factorial;
mod hermite;
mod hypergeometric;
pub(crate) mod potential;
pub(crate) mod sum;

pub use factorial::ln_factorial;
pub use hermite::{hermite_eval, hermite_roots, HermiteOrder, RootSet};
pub(crate) use hermite::{hermite_nodes, hermite_pair};
pub use hypergeometric::{hyp1f1_gauss, hyp1f1_gauss_direct, hyp2f2_gauss, SeriesValue};
pub use potential::{entropy_integral_closed_form, log_potential, LogPotential};

/// Largest Hermite degree accepted for evaluation.
pub const EVAL_MAX_ORDER: u32 = 64;
/// Largest Hermite degree for which [`hermite_roots`] is supported.
pub const ROOTS_MAX_ORDER: u32 = 32;

/// Euler-Mascheroni constant.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;
/// `sqrt(pi)`.
#[allow(clippy::excessive_precision)]
pub const SQRT_PI: f64 = 1.772_453_850_905_516_027_30;
/// `ln(2 pi e)`, the entropic bound of the criterion.
#[allow(clippy::excessive_precision)]
pub const LN_2PI_E: f64 = 2.837_877_066_409_345_483_56;

/// Mathematical constants used throughout, to at least 20 significant digits
/// in source.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathConstants {
    pub euler_gamma: f64,
    pub sqrt_pi: f64,
    pub ln_2pi_e: f64,
}

impl MathConstants {
    pub const VALUES: MathConstants = MathConstants {
        euler_gamma: EULER_GAMMA,
        sqrt_pi: SQRT_PI,
        ln_2pi_e: LN_2PI_E,
    };
}

impl Default for MathConstants {
    fn default() -> Self {
        Self::VALUES
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    #[test]
    fn constants_are_consistent() {
        let c = MathConstants::default();
        assert!((c.ln_2pi_e.exp() / (2.0 * PI * E) - 1.0).abs() < 1e-15);
        assert!((c.sqrt_pi - PI.sqrt()).abs() <= 1e-15);
        assert_eq!(c.euler_gamma, 0.5772156649015329);
    }
}
