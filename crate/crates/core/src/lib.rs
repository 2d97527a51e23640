//! Shannon entropic entanglement criterion for a pair of coupled quantum
//! harmonic oscillators.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`] Hermite polynomials and their roots, log-factorials, the two
//!   hypergeometric functions of the logarithmic potential, and the potential
//!   itself.
//! * [`quad`] Gauss-Hermite rules and root-split Gauss-Legendre panels. These
//!   are the numeric oracle for every closed form in the crate.
//! * [`oscillator`] Normal-mode diagonalization of the coupled Hamiltonian,
//!   eigenenergies and eigenfunctions in sum/difference coordinates.
//! * [`seec`] Marginal densities, their Shannon entropies, the criterion
//!   `f(eta) = H[w-] + H[v+] - ln(2 pi e)` and the threshold `eta0(n, m)`.
//!
//! Everything is dimensionless (`hbar = M = K = omega = 1`).

#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod error;
pub mod oscillator;
pub mod quad;
pub mod seec;
pub mod specfun;

pub use error::{Error, Result};
pub use oscillator::{
    diagonalize, energy, reconstruct, wavefunction, CoupledHamiltonian, Couplings,
    DiagonalizedSystem, ModePair, Rotation, Space, MAX_QUANTUM_NUMBER,
};
pub use quad::{
    entropy_integral_numeric, gauss_hermite_rule, integrate_panels, legendre_rule,
    integrate_panels_graded, QuadratureRule, RuleKind, DEFAULT_PANEL_ORDER,
};
pub use seec::{
    criterion_f, criterion_f_rotated, integral_bundle, is_entangled, marginal, marginal_mass,
    marginal_rotated, shannon_entropy, shannon_entropy_numeric, shannon_entropy_rotated,
    standard_entropy, standard_entropy_closed_form, threshold_eta0, EntropyReport, IntegralBundle,
    ScalingTransform, Side, Source,
};
pub use specfun::{
    hermite_eval, hermite_roots, hyp1f1_gauss, hyp2f2_gauss, ln_factorial, log_potential,
    HermiteOrder, LogPotential, MathConstants, RootSet, SeriesValue,
};
