//! Deterministic quadrature: Gauss-Hermite rules for polynomial integrands
//! against `e^{-z^2}`, and Gauss-Legendre panels for the log-singular entropy
//! integrand `e^{-z^2} H_n^2 ln H_n^2`.
//!
//! Panels are summed in a fixed order with compensated summation, so a given
//! input always produces the same bits.

use std::sync::OnceLock;

use serde::Serialize;

use crate::specfun::{
    entropy_integral_closed_form, hermite_nodes, hermite_pair, sum::CompensatedSum, HermiteOrder,
    ROOTS_MAX_ORDER, SQRT_PI,
};
use crate::{Error, Result};

/// Points per Gauss-Legendre panel used unless a caller asks otherwise.
pub const DEFAULT_PANEL_ORDER: usize = 48;
pub const GAUSS_HERMITE_MAX_ORDER: usize = 64;
pub const LEGENDRE_MAX_ORDER: usize = 512;

/// Distance beyond the classical turning point `sqrt(2n + 1)` at which the
/// entropy integrand is truncated. The discarded tail is below 1e-40.
pub const TAIL_MARGIN: f64 = 10.0;

/// Relative disagreement above which the closed-form entropy integral is
/// treated as unvalidated.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleKind {
    GaussHermite,
    LegendrePanels,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    /// Points per rule (Gauss-Hermite) or per panel (Gauss-Legendre).
    pub order: usize,
    /// Gauss-Hermite nodes, or Gauss-Legendre reference nodes on `[-1, 1]`.
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Panel boundaries, strictly increasing. Only for `LegendrePanels`.
    pub panels: Option<Vec<f64>>,
}

/// Gauss-Hermite rule of the given order, exact for `z^p e^{-z^2}`,
/// `p <= 2 order - 1`.
pub fn gauss_hermite_rule(order: usize) -> Result<QuadratureRule> {
    if !(1..=GAUSS_HERMITE_MAX_ORDER).contains(&order) {
        return Err(Error::UnsupportedOrder {
            order: order as i64,
            min: 1,
            max: GAUSS_HERMITE_MAX_ORDER as i64,
        });
    }
    let nodes = hermite_nodes(order);
    // w_i = 1 / sum_{k<n} p_k(x_i)^2 with p_k orthonormal under e^{-z^2}
    let weights = nodes
        .iter()
        .map(|&x| {
            let mut prev = 0.0;
            let mut cur = SQRT_PI.sqrt().recip();
            let mut acc = cur * cur;
            for k in 1..order {
                let kf = k as f64;
                let next = (2.0 / kf).sqrt() * x * cur - ((kf - 1.0) / kf).sqrt() * prev;
                prev = cur;
                cur = next;
                acc += cur * cur;
            }
            acc.recip()
        })
        .collect();
    Ok(QuadratureRule {
        kind: RuleKind::GaussHermite,
        order,
        nodes,
        weights,
        panels: None,
    })
}

/// Gauss-Legendre reference rule on `[-1, 1]`, without panels.
pub fn legendre_rule(order: usize) -> Result<QuadratureRule> {
    if !(1..=LEGENDRE_MAX_ORDER).contains(&order) {
        return Err(Error::UnsupportedOrder {
            order: order as i64,
            min: 1,
            max: LEGENDRE_MAX_ORDER as i64,
        });
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut deriv = 1.0;
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            deriv = dp;
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        deriv = if dp.is_finite() { dp } else { deriv };
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(QuadratureRule {
        kind: RuleKind::LegendrePanels,
        order,
        nodes,
        weights,
        panels: None,
    })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * cur - (kf - 1.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    let nf = n as f64;
    (cur, nf * (x * cur - prev) / (x * x - 1.0))
}

impl QuadratureRule {
    /// Attaches panel boundaries to a Gauss-Legendre rule.
    pub fn with_panels(mut self, boundaries: Vec<f64>) -> Result<Self> {
        if self.kind != RuleKind::LegendrePanels {
            return Err(Error::InvalidRule("panels require a Gauss-Legendre rule".into()));
        }
        if boundaries.len() < 2 {
            return Err(Error::InvalidRule("need at least two panel boundaries".into()));
        }
        if !boundaries.iter().all(|b| b.is_finite())
            || !boundaries.windows(2).all(|w| w[0] < w[1])
        {
            return Err(Error::InvalidRule("panel boundaries must be finite and strictly increasing".into()));
        }
        self.panels = Some(boundaries);
        Ok(self)
    }

    /// Gauss-Hermite: `sum_i w_i f(x_i)`, approximating `int e^{-z^2} f(z) dz`.
    pub fn integrate_weighted<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        if self.kind != RuleKind::GaussHermite {
            return Err(Error::InvalidRule("weighted integration needs a Gauss-Hermite rule".into()));
        }
        let mut acc = CompensatedSum::new();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            let v = f(x);
            if !v.is_finite() {
                return Err(Error::NonFinite { node: x });
            }
            acc.add(w * v);
        }
        Ok(acc.value())
    }
}

/// Integrates `f` over the panels of `rule`, one Gauss-Legendre rule per
/// panel, summing panels left to right.
pub fn integrate_panels<F: Fn(f64) -> f64>(f: F, rule: &QuadratureRule) -> Result<f64> {
    panel_sum(f, rule, Grading::None)
}

/// Like [`integrate_panels`], but each panel is first mapped through
/// `z = a + (b - a) (s - sin(2 pi s) / (2 pi))`, which clusters the
/// Gauss-Legendre nodes towards both panel ends. Use this when the integrand
/// has a weak (e.g. `u ln u`) singularity at panel boundaries.
pub fn integrate_panels_graded<F: Fn(f64) -> f64>(f: F, rule: &QuadratureRule) -> Result<f64> {
    panel_sum(f, rule, Grading::SineSquared)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Grading {
    None,
    SineSquared,
}

fn panel_sum<F: Fn(f64) -> f64>(f: F, rule: &QuadratureRule, grading: Grading) -> Result<f64> {
    let panels = match (&rule.kind, &rule.panels) {
        (RuleKind::LegendrePanels, Some(p)) => p,
        _ => {
            return Err(Error::InvalidRule(
                "panel integration needs a Gauss-Legendre rule with panels".into(),
            ))
        }
    };
    let tau = std::f64::consts::TAU;
    let mut total = CompensatedSum::new();
    for w in panels.windows(2) {
        let (a, b) = (w[0], w[1]);
        let width = b - a;
        let mut acc = CompensatedSum::new();
        for (&x, &wt) in rule.nodes.iter().zip(&rule.weights) {
            let s = 0.5 * (x + 1.0);
            let (node, jac) = match grading {
                Grading::None => (a + width * s, 1.0),
                Grading::SineSquared => (
                    a + width * (s - (tau * s).sin() / tau),
                    1.0 - (tau * s).cos(),
                ),
            };
            let v = f(node);
            if !v.is_finite() {
                return Err(Error::NonFinite { node });
            }
            acc.add(wt * jac * v);
        }
        total.add(0.5 * width * acc.value());
    }
    Ok(total.value())
}

/// Truncation half-width `sqrt(2n + 1) + 10` for order `n`.
pub fn truncation_half_width(n: u32) -> f64 {
    (2.0 * f64::from(n) + 1.0).sqrt() + TAIL_MARGIN
}

/// Boundaries on `[-L, L]` splitting the real line at the roots of `H_n`, with
/// the two Gaussian tails cut into unit-width pieces.
pub fn hermite_panels(n: HermiteOrder) -> Result<Vec<f64>> {
    let order = n.get();
    if order > ROOTS_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: i64::from(order),
            min: 0,
            max: i64::from(ROOTS_MAX_ORDER),
        });
    }
    let half = truncation_half_width(order);
    let roots = hermite_nodes(order as usize);
    let outer = roots.last().copied().unwrap_or(0.0);
    // unit-width pieces across the Gaussian tail
    let tail_pieces = (half - outer).ceil().max(1.0) as usize;
    let step = (half - outer) / tail_pieces as f64;
    let tail = (1..tail_pieces).map(|i| outer + step * i as f64);

    let mut b = Vec::with_capacity(roots.len() + 2 * tail_pieces + 1);
    b.push(-half);
    b.extend(tail.clone().rev().map(|z| -z));
    if roots.is_empty() {
        b.push(0.0);
    }
    b.extend(&roots);
    b.extend(tail);
    b.push(half);
    Ok(b)
}

/// `e^{-z^2} H_n(z)^2 ln(H_n(z)^2)`, continuously extended by 0 at roots.
pub(crate) fn entropy_integrand(n: u32, z: f64) -> f64 {
    let h = hermite_pair(n, z).0;
    let u = h * h;
    if u == 0.0 {
        return 0.0;
    }
    (-z * z).exp() * u * u.ln()
}

/// `I_3(n) = int e^{-z^2} H_n^2 ln(H_n^2) dz` by Gauss-Legendre panels split at
/// the roots of `H_n`, with the per-panel order taken from `rule`. Panels are
/// graded towards their ends (see [`integrate_panels_graded`]).
pub fn entropy_integral_numeric(n: HermiteOrder, rule: &QuadratureRule) -> Result<f64> {
    if rule.kind != RuleKind::LegendrePanels {
        return Err(Error::InvalidRule("entropy integral needs a Gauss-Legendre rule".into()));
    }
    let order = n.get();
    if order == 0 {
        return Ok(0.0);
    }
    let panelled = rule.clone().with_panels(hermite_panels(n)?)?;
    integrate_panels_graded(|z| entropy_integrand(order, z), &panelled)
}

/// Whether the closed-form entropy integral (through `V_n`) agrees with
/// quadrature for order `n` to `CLOSED_FORM_TOLERANCE`. Memoized.
pub(crate) fn closed_form_validated(n: u32) -> bool {
    static CACHE: [OnceLock<bool>; ROOTS_MAX_ORDER as usize + 1] =
        [const { OnceLock::new() }; ROOTS_MAX_ORDER as usize + 1];
    let Some(slot) = CACHE.get(n as usize) else {
        return false;
    };
    *slot.get_or_init(|| {
        let Ok(order) = HermiteOrder::new(n) else {
            return false;
        };
        let numeric = legendre_rule(DEFAULT_PANEL_ORDER)
            .and_then(|rule| entropy_integral_numeric(order, &rule));
        match (entropy_integral_closed_form(order), numeric) {
            (Ok(cf), Ok(q)) => (cf - q).abs() <= CLOSED_FORM_TOLERANCE * q.abs().max(1.0),
            _ => false,
        }
    })
}
