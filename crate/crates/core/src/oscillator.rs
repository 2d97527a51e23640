//! Normal modes of two bilinearly coupled oscillators
//! `H = P1^2/2m1 + P2^2/2m2 + A/2 X1^2 + B/2 X2^2 + C/2 X1 X2`.
//!
//! The potential is rotated by `alpha` into
//! `K/2 (e^{2 eta} X1'^2 + e^{-2 eta} X2'^2)` with `K = sqrt(AB - C^2/4)`, and all
//! further work happens in the dimensionless units `hbar = M = K = omega = 1`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, LN_2};

use serde::Serialize;

use crate::specfun::{hermite_pair, ln_factorial, SQRT_PI};
use crate::{Error, Result};

/// Largest quantum number accepted per mode.
pub const MAX_QUANTUM_NUMBER: u32 = 32;

/// `|A - B| <= DEGENERACY_TOLERANCE * (A + B)` selects the `A -> B` limit.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// Allowed deviation of `|alpha|` from 45 degrees for the sum/difference
/// coordinate wavefunctions, in radians.
pub const QUARTER_TURN_TOLERANCE: f64 = 1e-6;

/// Raw couplings of the coupled Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoupledHamiltonian {
    pub m1: f64,
    pub m2: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl CoupledHamiltonian {
    pub fn new(m1: f64, m2: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        let h = Self { m1, m2, a, b, c };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m1", self.m1), ("m2", self.m2), ("A", self.a), ("B", self.b)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if !self.c.is_finite() {
            return Err(Error::Domain(format!("C must be finite, got {}", self.c)));
        }
        let discriminant = 4.0 * self.a * self.b - self.c * self.c;
        if discriminant <= 0.0 {
            return Err(Error::UnboundMode { discriminant });
        }
        Ok(())
    }

    pub fn couplings(&self) -> Couplings {
        Couplings { a: self.a, b: self.b, c: self.c }
    }
}

/// Quadratic-form coefficients `(A, B, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Couplings {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Couplings {
    /// Largest componentwise error relative to `max(|A|, |B|, |C|)` of `reference`.
    pub fn relative_error(&self, reference: &Couplings) -> f64 {
        let scale = reference.a.abs().max(reference.b.abs()).max(reference.c.abs());
        let diff = (self.a - reference.a)
            .abs()
            .max((self.b - reference.b).abs())
            .max((self.c - reference.c).abs());
        diff / scale
    }
}

/// Normal-mode description of a [`CoupledHamiltonian`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiagonalizedSystem {
    /// `M = sqrt(m1 m2)`
    pub mass: f64,
    /// `K = sqrt(AB - C^2/4)`
    pub stiffness: f64,
    /// `omega = sqrt(K / M)`
    pub omega: f64,
    pub eta: f64,
    /// Rotation angle in radians.
    pub alpha: f64,
    /// Set when `A ~ B` and the `A -> B` limit (with `eta >= 0`) was used.
    pub degenerate: bool,
}

/// Sign of the quarter-turn rotation in the `A ~ B` regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rotation {
    /// `alpha = +45 deg` (`C < 0`): `y1 = x-/sqrt2`, `y2 = x+/sqrt2`.
    PlusQuarter,
    /// `alpha = -45 deg` (`C > 0`): `y1 = x+/sqrt2`, `y2 = -x-/sqrt2`.
    MinusQuarter,
}

impl DiagonalizedSystem {
    pub fn alpha_deg(&self) -> f64 {
        self.alpha.to_degrees()
    }

    pub fn rotation(&self) -> Result<Rotation> {
        if (self.alpha - FRAC_PI_4).abs() <= QUARTER_TURN_TOLERANCE {
            Ok(Rotation::PlusQuarter)
        } else if (self.alpha + FRAC_PI_4).abs() <= QUARTER_TURN_TOLERANCE {
            Ok(Rotation::MinusQuarter)
        } else {
            Err(Error::UnsupportedRegime { alpha_deg: self.alpha_deg() })
        }
    }

    /// Eigenfunction in sum/difference coordinates for this system's rotation.
    pub fn wavefunction(&self, mode: &ModePair, space: Space, u_plus: f64, u_minus: f64) -> Result<f64> {
        let rotation = self.rotation()?;
        rotated_wavefunction(mode, self.eta, space, rotation, u_plus, u_minus)
    }
}

/// Diagonalizes the coupled Hamiltonian.
///
/// `eta` carries the sign of `A - B`; `2 alpha = atan(C / (B - A))` lies in
/// `(-pi/2, pi/2)`. When `|A - B| <= 1e-12 (A + B)` the `A -> B` limit from
/// above is taken: `e^{2 eta} = sqrt((2A + |C|)/(2A - |C|))` and
/// `alpha = -sign(C) 45 deg`.
pub fn diagonalize(h: &CoupledHamiltonian) -> Result<DiagonalizedSystem> {
    h.validate()?;
    let mass = (h.m1 * h.m2).sqrt();
    let stiffness = 0.5 * (4.0 * h.a * h.b - h.c * h.c).sqrt();
    let omega = (stiffness / mass).sqrt();

    let split = h.a - h.b;
    let degenerate = split.abs() <= DEGENERACY_TOLERANCE * (h.a + h.b);

    let (eta, alpha) = if degenerate {
        if h.c == 0.0 {
            (0.0, 0.0)
        } else {
            let eta = 0.5 * (h.c.abs() / (2.0 * stiffness)).asinh();
            (eta, -h.c.signum() * FRAC_PI_4)
        }
    } else {
        // sinh(2 eta) = sign(A - B) hypot(A - B, C) / 2K, cosh(2 eta) = (A + B) / 2K
        let spread = split.hypot(h.c);
        let eta = split.signum() * 0.5 * (spread / (2.0 * stiffness)).asinh();
        let alpha = 0.5 * (-h.c * split.signum()).atan2(split.abs());
        (eta, alpha)
    };

    Ok(DiagonalizedSystem { mass, stiffness, omega, eta, alpha, degenerate })
}

/// Inverts [`diagonalize`]: expands `K (e^{2 eta} y1^2 + e^{-2 eta} y2^2)` under the
/// rotation and reads off the `x1^2`, `x2^2`, `x1 x2` coefficients.
pub fn reconstruct(d: &DiagonalizedSystem) -> Couplings {
    let (s, c) = d.alpha.sin_cos();
    let up = (2.0 * d.eta).exp();
    let down = (-2.0 * d.eta).exp();
    let k = d.stiffness;
    Couplings {
        a: k * (up * c * c + down * s * s),
        b: k * (up * s * s + down * c * c),
        c: -2.0 * k * (2.0 * d.alpha).sin() * (2.0 * d.eta).sinh(),
    }
}

/// Quantum numbers of the two normal modes with their normalization constants
/// `c = 1 / sqrt(sqrt(pi) n! 2^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModePair {
    pub n: u32,
    pub m: u32,
    pub c1: f64,
    pub c2: f64,
}

impl ModePair {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        for q in [n, m] {
            if q > MAX_QUANTUM_NUMBER {
                return Err(Error::UnsupportedOrder {
                    order: i64::from(q),
                    min: 0,
                    max: i64::from(MAX_QUANTUM_NUMBER),
                });
            }
        }
        Ok(Self { n, m, c1: normalization(n), c2: normalization(m) })
    }
}

fn normalization(n: u32) -> f64 {
    let ln_norm = SQRT_PI.ln() + ln_factorial(i64::from(n)).expect("n >= 0") + f64::from(n) * LN_2;
    (-0.5 * ln_norm).exp()
}

/// `E_nm = e^eta (n + 1/2) + e^{-eta} (m + 1/2)` in units of `hbar omega`.
pub fn energy(mode: &ModePair, eta: f64) -> f64 {
    eta.exp() * (f64::from(mode.n) + 0.5) + (-eta).exp() * (f64::from(mode.m) + 0.5)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    Position,
    Momentum,
}

/// `Psi_nm(x+, x-)` or `Phi_nm(p+, p-)` for the `alpha = +45 deg` rotation.
/// Normalized so that `int int |Psi|^2 du+ du- / 2 = 1`.
pub fn wavefunction(mode: &ModePair, eta: f64, space: Space, u_plus: f64, u_minus: f64) -> Result<f64> {
    rotated_wavefunction(mode, eta, space, Rotation::PlusQuarter, u_plus, u_minus)
}

fn rotated_wavefunction(
    mode: &ModePair,
    eta: f64,
    space: Space,
    rotation: Rotation,
    u_plus: f64,
    u_minus: f64,
) -> Result<f64> {
    if !(eta.is_finite() && u_plus.is_finite() && u_minus.is_finite()) {
        return Err(Error::Domain("wavefunction arguments must be finite".into()));
    }
    let (y1, y2) = match rotation {
        Rotation::PlusQuarter => (u_minus * FRAC_1_SQRT_2, u_plus * FRAC_1_SQRT_2),
        Rotation::MinusQuarter => (u_plus * FRAC_1_SQRT_2, -u_minus * FRAC_1_SQRT_2),
    };
    // momentum: e^{eta/2} y1 -> e^{-eta/2} p1 and e^{-eta/2} y2 -> e^{eta/2} p2
    let s = match space {
        Space::Position => eta,
        Space::Momentum => -eta,
    };
    let z1 = (0.5 * s).exp() * y1;
    let z2 = (-0.5 * s).exp() * y2;
    let h1 = hermite_pair(mode.n, z1).0;
    let h2 = hermite_pair(mode.m, z2).0;
    Ok(mode.c1 * mode.c2 * (-0.5 * (z1 * z1 + z2 * z2)).exp() * h1 * h2)
}
