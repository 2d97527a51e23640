//! Marginal densities of the sum/difference coordinates, their Shannon
//! entropies, and the entanglement criterion
//! `f(eta) = H[w-] + H[v+] - ln(2 pi e)`.
//!
//! With `t = e^{eta/2} / sqrt2`, the marginal `w-` is the standard Hermite
//! density `rho_n(z) = e^{-z^2} H_n(z)^2 / (2^n n! sqrt(pi))` rescaled by `t`,
//! and `v+` is `rho_m` rescaled by `t`. A density rescaled by `s` has entropy
//! `S - ln s`, where `S` is the entropy of the unscaled density, so `eta`
//! enters only through `ln t` and `f` is exactly linear in `eta`.

use std::f64::consts::{FRAC_1_SQRT_2, LN_2};
use std::sync::OnceLock;

use serde::Serialize;

use crate::oscillator::{Rotation, MAX_QUANTUM_NUMBER};
use crate::quad::{self, hermite_panels, integrate_panels_graded, legendre_rule, DEFAULT_PANEL_ORDER};
use crate::specfun::{
    entropy_integral_closed_form, hermite_pair, ln_factorial, potential::ln_norm, HermiteOrder,
    LN_2PI_E,
};
use crate::{Error, Result};

/// Which marginal density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `w-(x-)`, position difference coordinate.
    WMinus,
    /// `v+(p+)`, momentum sum coordinate.
    VPlus,
    /// `w+(x+)`, position sum coordinate.
    WPlus,
    /// `v-(p-)`, momentum difference coordinate.
    VMinus,
}

/// Where an entropy integral value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedForm,
    Quadrature,
}

/// The substitutions `z1 = t x-`, `z2 = x+ / 2t`, `p1 = p- / 2t`, `p2 = t p+`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingTransform {
    pub eta: f64,
    pub t: f64,
}

impl ScalingTransform {
    pub fn new(eta: f64) -> Result<Self> {
        if !eta.is_finite() {
            return Err(Error::Domain(format!("eta must be finite, got {eta}")));
        }
        Ok(Self { eta, t: (0.5 * eta).exp() * FRAC_1_SQRT_2 })
    }

    /// `ln t = eta/2 - ln2/2`
    pub fn ln_t(&self) -> f64 {
        0.5 * self.eta - 0.5 * LN_2
    }

    pub fn z1(&self, x_minus: f64) -> f64 {
        self.t * x_minus
    }

    pub fn z2(&self, x_plus: f64) -> f64 {
        x_plus / (2.0 * self.t)
    }

    pub fn ptilde1(&self, p_minus: f64) -> f64 {
        p_minus / (2.0 * self.t)
    }

    pub fn ptilde2(&self, p_plus: f64) -> f64 {
        self.t * p_plus
    }
}

/// Integrals and prefactors entering `H[w-]` and `H[v+]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralBundle {
    pub n: u32,
    pub m: u32,
    pub t: f64,
    pub i0: f64,
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub j0: f64,
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
    pub q_nm: f64,
    pub r_nm: f64,
    pub i3_source: Source,
    pub j3_source: Source,
    /// Closed-form `I3` through `V_n`, present only where it agrees with
    /// quadrature.
    pub i3_closed_form: Option<f64>,
    pub j3_closed_form: Option<f64>,
}

impl IntegralBundle {
    /// `H[w-] = -(1/t) q {(ln q) I1 + I2 + I3}`
    pub fn entropy_w_minus(&self) -> f64 {
        -(self.q_nm / self.t) * (self.q_nm.ln() * self.i1 + self.i2 + self.i3)
    }

    /// `H[v+] = -(1/t) r {(ln r) J1 + J2 + J3}`
    pub fn entropy_v_plus(&self) -> f64 {
        -(self.r_nm / self.t) * (self.r_nm.ln() * self.j1 + self.j2 + self.j3)
    }
}

/// Result of the criterion for one state and coupling.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub n: u32,
    pub m: u32,
    pub eta: f64,
    #[serde(rename = "H_w_minus")]
    pub h_w_minus: f64,
    #[serde(rename = "H_v_plus")]
    pub h_v_plus: f64,
    pub f: f64,
    pub eta0: f64,
    pub entangled: bool,
    /// `H[w+] + H[v-] - ln(2 pi e)`
    pub alt_f: f64,
    /// Largest `|closed-form - quadrature|` over the two standard entropies.
    pub oracle_delta: f64,
}

fn check_quantum(q: u32) -> Result<HermiteOrder> {
    if q > MAX_QUANTUM_NUMBER {
        return Err(Error::UnsupportedOrder {
            order: i64::from(q),
            min: 0,
            max: i64::from(MAX_QUANTUM_NUMBER),
        });
    }
    HermiteOrder::new(q)
}

const CACHE_LEN: usize = MAX_QUANTUM_NUMBER as usize + 1;

/// `I3(n)` by quadrature at the default panel order. Memoized.
fn entropy_integral(n: u32) -> Result<f64> {
    static CACHE: [OnceLock<f64>; CACHE_LEN] = [const { OnceLock::new() }; CACHE_LEN];
    let order = check_quantum(n)?;
    if let Some(v) = CACHE[n as usize].get() {
        return Ok(*v);
    }
    let rule = legendre_rule(DEFAULT_PANEL_ORDER)?;
    let value = quad::entropy_integral_numeric(order, &rule)?;
    Ok(*CACHE[n as usize].get_or_init(|| value))
}

/// Entropy of `rho_n` from the integral `I3`:
/// `S_n = ln(2^n n! sqrt(pi)) + n + 1/2 - I3 / (2^n n! sqrt(pi))`.
fn entropy_from_integral(n: u32, i3: f64) -> f64 {
    let ln_i1 = ln_norm(n);
    ln_i1 + f64::from(n) + 0.5 - i3 * (-ln_i1).exp()
}

/// Shannon entropy `S_n` of the standard Hermite density
/// `rho_n(z) = e^{-z^2} H_n(z)^2 / (2^n n! sqrt(pi))`, by quadrature.
pub fn standard_entropy(n: u32) -> Result<f64> {
    Ok(entropy_from_integral(n, entropy_integral(n)?))
}

/// `S_n` through the closed-form `V_n` route. Experimental for `n >= 2`.
pub fn standard_entropy_closed_form(n: u32) -> Result<f64> {
    let order = check_quantum(n)?;
    Ok(entropy_from_integral(n, entropy_integral_closed_form(order)?))
}

/// `S_n - S_0`: entropy of `rho_n` in excess of the Gaussian ground state.
fn excess_entropy(n: u32) -> Result<f64> {
    Ok(standard_entropy(n)? - standard_entropy(0)?)
}

/// Closed forms `I0`, `I1`, `I2` (and mirrors), prefactors `q_nm`, `r_nm`, and
/// `I3`, `J3` from quadrature.
///
/// `r_nm` uses `2^{n+m}` in its denominator; it is the value that normalizes
/// `v+`.
pub fn integral_bundle(n: u32, m: u32, eta: f64) -> Result<IntegralBundle> {
    check_quantum(n)?;
    check_quantum(m)?;
    let scaling = ScalingTransform::new(eta)?;

    let ln_i0 = ln_norm(m);
    let ln_i1 = ln_norm(n);
    let i0 = ln_i0.exp();
    let i1 = ln_i1.exp();
    let i2 = -i1 * (f64::from(n) + 0.5);
    let j0 = i1;
    let j1 = i0;
    let j2 = -j1 * (f64::from(m) + 0.5);

    let ln_fact_n = ln_factorial(i64::from(n))?;
    let ln_fact_m = ln_factorial(i64::from(m))?;
    let ln_pi = std::f64::consts::PI.ln();
    let ln_denominator = ln_pi + ln_fact_n + ln_fact_m + f64::from(n + m) * LN_2;
    let q_nm = (scaling.ln_t() + ln_i0 - ln_denominator).exp();
    let r_nm = (scaling.ln_t() + ln_i1 - ln_denominator).exp();

    let i3 = entropy_integral(n)?;
    let j3 = entropy_integral(m)?;
    let closed = |k: u32| -> Result<Option<f64>> {
        if quad::closed_form_validated(k) {
            Ok(Some(entropy_integral_closed_form(HermiteOrder::new(k)?)?))
        } else {
            Ok(None)
        }
    };

    Ok(IntegralBundle {
        n,
        m,
        t: scaling.t,
        i0,
        i1,
        i2,
        i3,
        j0,
        j1,
        j2,
        j3,
        q_nm,
        r_nm,
        i3_source: Source::Quadrature,
        j3_source: Source::Quadrature,
        i3_closed_form: closed(n)?,
        j3_closed_form: closed(m)?,
    })
}

/// Coordinate scale of a marginal: `t` or `1 / 2t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scale {
    Near,
    Far,
}

impl Scale {
    fn ln(self, scaling: &ScalingTransform) -> f64 {
        match self {
            Scale::Near => scaling.ln_t(),
            Scale::Far => -(scaling.ln_t() + LN_2),
        }
    }

    fn value(self, scaling: &ScalingTransform) -> f64 {
        match self {
            Scale::Near => scaling.t,
            Scale::Far => 1.0 / (2.0 * scaling.t),
        }
    }
}

/// Hermite order and coordinate scale `s` of a marginal, which has the form
/// `s rho_k(s u)`.
fn side_profile(side: Side, n: u32, m: u32, rotation: Rotation) -> (u32, Scale) {
    use Scale::{Far, Near};
    match (rotation, side) {
        (Rotation::PlusQuarter, Side::WMinus) => (n, Near),
        (Rotation::PlusQuarter, Side::VPlus) => (m, Near),
        (Rotation::PlusQuarter, Side::WPlus) => (m, Far),
        (Rotation::PlusQuarter, Side::VMinus) => (n, Far),
        (Rotation::MinusQuarter, Side::WMinus) => (m, Far),
        (Rotation::MinusQuarter, Side::VPlus) => (n, Far),
        (Rotation::MinusQuarter, Side::WPlus) => (n, Near),
        (Rotation::MinusQuarter, Side::VMinus) => (m, Near),
    }
}

/// Marginal density value, e.g. `w-(x-) = q_nm e^{-z1^2} H_n(z1)^2`.
pub fn marginal(side: Side, n: u32, m: u32, eta: f64, u: f64) -> Result<f64> {
    marginal_rotated(side, n, m, eta, Rotation::PlusQuarter, u)
}

/// [`marginal`] for either quarter-turn rotation.
pub fn marginal_rotated(side: Side, n: u32, m: u32, eta: f64, rotation: Rotation, u: f64) -> Result<f64> {
    if !u.is_finite() {
        return Err(Error::Domain(format!("marginal requires finite u, got {u}")));
    }
    let bundle = integral_bundle(n, m, eta)?;
    let scaling = ScalingTransform::new(eta)?;
    let (order, scale) = side_profile(side, n, m, rotation);
    let scale = scale.value(&scaling);
    let prefactor = match (rotation, side) {
        (Rotation::PlusQuarter, Side::WMinus) => bundle.q_nm,
        (Rotation::PlusQuarter, Side::VPlus) => bundle.r_nm,
        _ => (scale.ln() - ln_norm(order)).exp(),
    };
    let z = scale * u;
    let h = hermite_pair(order, z).0;
    Ok(prefactor * (-z * z).exp() * h * h)
}

/// Shannon entropy of a marginal, `S_k - ln s`.
pub fn shannon_entropy(side: Side, n: u32, m: u32, eta: f64) -> Result<f64> {
    shannon_entropy_rotated(side, n, m, eta, Rotation::PlusQuarter)
}

/// [`shannon_entropy`] for either quarter-turn rotation.
pub fn shannon_entropy_rotated(side: Side, n: u32, m: u32, eta: f64, rotation: Rotation) -> Result<f64> {
    check_quantum(n)?;
    check_quantum(m)?;
    let scaling = ScalingTransform::new(eta)?;
    let (order, scale) = side_profile(side, n, m, rotation);
    Ok(standard_entropy(order)? - scale.ln(&scaling))
}

/// `-int p ln p du` of a marginal by graded Gauss-Legendre panels split at its
/// zeros. Independent of the entropy decomposition; used as a cross-check.
pub fn shannon_entropy_numeric(side: Side, n: u32, m: u32, eta: f64, panel_order: usize) -> Result<f64> {
    marginal_quadrature(side, n, m, eta, panel_order, |p| if p > 0.0 { -p * p.ln() } else { 0.0 })
}

/// `int p du` of a marginal, by the same panels as [`shannon_entropy_numeric`].
pub fn marginal_mass(side: Side, n: u32, m: u32, eta: f64, panel_order: usize) -> Result<f64> {
    marginal_quadrature(side, n, m, eta, panel_order, |p| p)
}

fn marginal_quadrature(
    side: Side,
    n: u32,
    m: u32,
    eta: f64,
    panel_order: usize,
    g: impl Fn(f64) -> f64,
) -> Result<f64> {
    let scaling = ScalingTransform::new(eta)?;
    let (order, scale) = side_profile(side, n, m, Rotation::PlusQuarter);
    let scale = scale.value(&scaling);
    let panels: Vec<f64> = hermite_panels(check_quantum(order)?)?.into_iter().map(|z| z / scale).collect();
    let rule = legendre_rule(panel_order)?.with_panels(panels)?;
    let bundle = integral_bundle(n, m, eta)?;
    let prefactor = match side {
        Side::WMinus => bundle.q_nm,
        Side::VPlus => bundle.r_nm,
        _ => (scale.ln() - ln_norm(order)).exp(),
    };
    integrate_panels_graded(
        |u| {
            let z = scale * u;
            let h = hermite_pair(order, z).0;
            g(prefactor * (-z * z).exp() * h * h)
        },
        &rule,
    )
}

/// `eta0(n, m) = S_n + S_m + ln 2 - ln(2 pi e)`, the eta-intercept of `f`.
///
/// Evaluated as `(S_n - S_0) + (S_m - S_0)`, which is the same quantity since
/// `2 S_0 + ln 2 = ln(2 pi e)`, and is exactly zero for the ground state.
pub fn threshold_eta0(n: u32, m: u32) -> Result<f64> {
    check_quantum(n)?;
    check_quantum(m)?;
    Ok(excess_entropy(n)? + excess_entropy(m)?)
}

/// Full criterion report for the `(w-, v+)` pairing at `alpha = +45 deg`.
pub fn criterion_f(n: u32, m: u32, eta: f64) -> Result<EntropyReport> {
    criterion_f_rotated(n, m, eta, Rotation::PlusQuarter)
}

/// Criterion report for either quarter-turn rotation (sign of `C`). The
/// reported pairing is always `(w-, v+)`; `alt_f` is `(w+, v-)`.
pub fn criterion_f_rotated(n: u32, m: u32, eta: f64, rotation: Rotation) -> Result<EntropyReport> {
    let scaling = ScalingTransform::new(eta)?;
    let h_w_minus = shannon_entropy_rotated(Side::WMinus, n, m, eta, rotation)?;
    let h_v_plus = shannon_entropy_rotated(Side::VPlus, n, m, eta, rotation)?;
    let eta0 = threshold_eta0(n, m)?;

    // H_a + H_b - ln(2 pi e) = eta0 - ln2 - ln(s_a s_b)
    let pair = |a: Side, b: Side| {
        let (_, sa) = side_profile(a, n, m, rotation);
        let (_, sb) = side_profile(b, n, m, rotation);
        let ln_scales = match (sa, sb) {
            (Scale::Near, Scale::Near) => 2.0 * scaling.ln_t(),
            (Scale::Far, Scale::Far) => -2.0 * (scaling.ln_t() + LN_2),
            _ => -LN_2,
        };
        eta0 - LN_2 - ln_scales
    };
    let f = pair(Side::WMinus, Side::VPlus);
    let alt_f = pair(Side::WPlus, Side::VMinus);

    let oracle_delta = (standard_entropy_closed_form(n)? - standard_entropy(n)?)
        .abs()
        .max((standard_entropy_closed_form(m)? - standard_entropy(m)?).abs());

    Ok(EntropyReport {
        n,
        m,
        eta,
        h_w_minus,
        h_v_plus,
        f,
        eta0,
        entangled: f < 0.0,
        alt_f,
        oracle_delta,
    })
}

/// `true` iff `f(n, m, eta) < 0`.
pub fn is_entangled(n: u32, m: u32, eta: f64) -> Result<bool> {
    Ok(criterion_f(n, m, eta)?.entangled)
}

/// `H[w-] + H[v+] - ln(2 pi e)` computed literally from the two entropies.
pub fn criterion_from_parts(report: &EntropyReport) -> f64 {
    report.h_w_minus + report.h_v_plus - LN_2PI_E
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{EULER_GAMMA, SQRT_PI};
    use std::f64::consts::{E, PI};

    const S1: f64 = 1.342_727_788_386_178_3;

    #[test]
    fn standard_entropy_anchors() {
        assert!((standard_entropy(0).unwrap() - 0.5 * (PI * E).ln()).abs() <= 1e-10);
        let s1 = (2.0 * SQRT_PI).ln() + EULER_GAMMA - 0.5;
        assert!((standard_entropy(1).unwrap() - s1).abs() <= 1e-8);
        assert!((s1 - S1).abs() < 1e-15);
    }

    #[test]
    fn bundle_closed_forms() {
        let b = integral_bundle(2, 1, 0.3).unwrap();
        assert!((b.i1 - 8.0 * SQRT_PI).abs() < 1e-13);
        assert!((b.i1 - 14.179_630_8).abs() < 1e-7);
        assert!((b.i0 - 2.0 * SQRT_PI).abs() < 1e-14);
        assert!((b.i2 + 8.0 * SQRT_PI * 2.5).abs() < 1e-12);
        assert_eq!(b.j0, b.i1);
        assert_eq!(b.j1, b.i0);
        assert!(b.i3_closed_form.is_none());
        assert_eq!(b.j3_closed_form.map(|v| (v - b.j3).abs() < 1e-9), Some(true));

        let b1 = integral_bundle(1, 0, 0.0).unwrap();
        assert!((b1.i2 + 3.0 * SQRT_PI).abs() < 1e-14);
        assert!((b1.i2 + 5.317_361_6).abs() < 1e-7);
        assert_eq!(integral_bundle(0, 4, 0.0).unwrap().i3, 0.0);
        assert!(integral_bundle(33, 0, 0.0).is_err());
    }

    #[test]
    fn r_nm_printed_power_loses_mass() {
        // the printed 2^{n+2m} denominator would leave 2^{-m} of the mass
        let (n, m) = (1, 2);
        let b = integral_bundle(n, m, 0.4).unwrap();
        let printed = b.r_nm / 2f64.powi(m as i32);
        let mass = marginal_mass(Side::VPlus, n, m, 0.4, DEFAULT_PANEL_ORDER).unwrap();
        assert!((mass - 1.0).abs() < 1e-10);
        assert!((mass * printed / b.r_nm - 0.25).abs() < 1e-10);
    }

    #[test]
    fn expanded_entropy_matches_decomposition() {
        for (n, m) in [(0, 0), (1, 3), (4, 2), (7, 7)] {
            for eta in [-0.7, 0.0, 0.5, 1.3] {
                let b = integral_bundle(n, m, eta).unwrap();
                let w = shannon_entropy(Side::WMinus, n, m, eta).unwrap();
                let v = shannon_entropy(Side::VPlus, n, m, eta).unwrap();
                assert!((b.entropy_w_minus() - w).abs() < 1e-12, "n={n} m={m} eta={eta}");
                assert!((b.entropy_v_plus() - v).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn marginal_examples() {
        let v = marginal(Side::WMinus, 0, 0, 0.0, 0.0).unwrap();
        assert!((v - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-15);
        for u in [0.3, 1.7, 4.0] {
            let a = marginal(Side::WMinus, 2, 1, 0.4, u).unwrap();
            let b = marginal(Side::WMinus, 2, 1, 0.4, -u).unwrap();
            assert_eq!(a, b);
        }
        let mass = marginal_mass(Side::WMinus, 3, 1, 0.7, DEFAULT_PANEL_ORDER).unwrap();
        assert!((mass - 1.0).abs() < 1e-8);
    }

    #[test]
    fn entropy_examples() {
        let h = shannon_entropy(Side::WMinus, 0, 0, 0.0).unwrap();
        assert!((h - 0.5 * (2.0 * PI * E).ln()).abs() < 1e-12);
        let h1 = shannon_entropy(Side::WMinus, 1, 5, 0.0).unwrap();
        assert!((h1 - (S1 + 0.5 * LN_2)).abs() < 1e-8);
        for (n, m, eta) in [(3, 1, 0.8), (0, 2, -1.1), (6, 6, 2.0)] {
            let a = shannon_entropy(Side::WMinus, n, m, eta).unwrap();
            let b = shannon_entropy(Side::WMinus, n, m, 0.0).unwrap();
            assert!((a - b + eta / 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn entropy_matches_direct_integration() {
        for side in [Side::WMinus, Side::VPlus, Side::WPlus, Side::VMinus] {
            for (n, m, eta) in [(0, 0, 0.0), (2, 1, 0.5), (4, 3, -0.6)] {
                let a = shannon_entropy(side, n, m, eta).unwrap();
                let b = shannon_entropy_numeric(side, n, m, eta, DEFAULT_PANEL_ORDER).unwrap();
                assert!((a - b).abs() < 1e-10, "{side:?} n={n} m={m} eta={eta}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn criterion_examples() {
        for eta in [-1.0, 0.0, 0.37, 2.0] {
            let r = criterion_f(0, 0, eta).unwrap();
            assert!((r.f + eta).abs() <= 1e-12);
        }
        let r11 = criterion_f(1, 1, 0.0).unwrap();
        assert!((r11.f - 0.541).abs() < 2e-3);
        assert!((criterion_f(2, 2, 0.0).unwrap().f - 0.852).abs() < 2e-3);
        assert!((criterion_f(3, 3, 0.0).unwrap().f - 1.07).abs() < 1e-2);
    }

    #[test]
    fn report_invariants() {
        for (n, m, eta) in [(0, 0, 0.0), (1, 2, 0.9), (5, 0, -0.4), (8, 8, 1.5)] {
            let r = criterion_f(n, m, eta).unwrap();
            assert!((criterion_from_parts(&r) - r.f).abs() <= 1e-13);
            assert_eq!(r.entangled, r.f < 0.0);
            assert!((r.f - (r.eta0 - eta)).abs() <= 1e-9);
            assert!((r.alt_f - (r.eta0 + eta)).abs() <= 1e-12);
            let alt_parts = shannon_entropy(Side::WPlus, n, m, eta).unwrap()
                + shannon_entropy(Side::VMinus, n, m, eta).unwrap()
                - LN_2PI_E;
            assert!((alt_parts - r.alt_f).abs() <= 1e-13);
        }
    }

    #[test]
    fn oracle_delta_small_where_closed_form_holds() {
        assert!(criterion_f(0, 1, 0.2).unwrap().oracle_delta < 1e-9);
        assert!(criterion_f(2, 0, 0.2).unwrap().oracle_delta > 1e-6);
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold_eta0(0, 0).unwrap(), 0.0);
        assert!((threshold_eta0(1, 0).unwrap() - 0.270).abs() < 2e-3);
        assert_eq!(threshold_eta0(4, 2).unwrap(), threshold_eta0(2, 4).unwrap());
        // 40-digit reference for eta0(1, 1)
        assert!((threshold_eta0(1, 1).unwrap() - 0.540_725_690_922_956).abs() < 1e-10);
    }

    #[test]
    fn entanglement_verdicts() {
        assert!(is_entangled(0, 0, 0.1).unwrap());
        assert!(!is_entangled(1, 1, 0.5).unwrap());
        for n in 0..4 {
            for m in 0..4 {
                assert!(!is_entangled(n, m, 0.0).unwrap());
            }
        }
    }

    #[test]
    fn rotation_sign_swaps_pairings() {
        for (n, m, eta) in [(1, 2, 0.6), (3, 0, 1.2)] {
            let plus = criterion_f_rotated(n, m, eta, Rotation::PlusQuarter).unwrap();
            let minus = criterion_f_rotated(n, m, eta, Rotation::MinusQuarter).unwrap();
            assert!((minus.f - plus.alt_f).abs() < 1e-12);
            assert!((minus.alt_f - plus.f).abs() < 1e-12);
        }
    }

    #[test]
    fn scaling_transform() {
        let s = ScalingTransform::new(0.8).unwrap();
        assert!(s.t > 0.0);
        assert_eq!((2.0 * s.t) * (1.0 / (2.0 * s.t)), 1.0);
        assert!((s.ln_t() - s.t.ln()).abs() < 1e-15);
        assert!((s.z1(2.0) * s.z2(2.0) - 2.0).abs() < 1e-15);
        assert!(ScalingTransform::new(f64::NAN).is_err());
    }
}
