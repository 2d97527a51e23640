//! Cross-checks of every closed form against the quadrature oracle.
//!
//! Normative checks decide the exit status. The `V_n` closed-form route and
//! the pairing comparisons are reported only.

use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{ensure, Result};
use serde::Serialize;
use seec_core::specfun::{entropy_integral_closed_form, hermite_eval, EULER_GAMMA, SQRT_PI};
use seec_core::{
    criterion_f, criterion_f_rotated, entropy_integral_numeric, gauss_hermite_rule, integral_bundle,
    legendre_rule, marginal_mass, shannon_entropy, shannon_entropy_numeric, HermiteOrder, Rotation,
    Side, DEFAULT_PANEL_ORDER,
};

use crate::format::write_output;
use crate::{VerifyArgs, VerifyFormat};

pub const MAX_VERIFY_ORDER: u32 = 12;
pub const CLOSED_FORM_TOL: f64 = 1e-10;
pub const SELF_CONVERGENCE_TOL: f64 = 1e-9;
pub const ANALYTIC_I3_TOL: f64 = 1e-9;
pub const NORMALIZATION_TOL: f64 = 1e-8;
pub const ENTROPY_TOL: f64 = 1e-8;
pub const EXPERIMENTAL_TOL: f64 = 1e-6;
const ETAS: [f64; 3] = [0.0, 0.5, 1.0];

#[derive(Debug, Serialize)]
struct IntegralCheck {
    n: u32,
    /// `int e^{-z^2} H_n^2`: serves as `I1(n)` and as `I0` for `m = n`.
    i1_closed: f64,
    i1_quadrature: f64,
    i1_rel_delta: f64,
    i2_closed: f64,
    i2_quadrature: f64,
    i2_rel_delta: f64,
    i3_quadrature: f64,
    /// `|I3(order 48) - I3(order 96)| / I1`
    i3_self_convergence: f64,
    /// `|I3(1) - 4 sqrt(pi) (1 - gamma/2)|`, only for `n = 1`.
    i3_analytic_delta: Option<f64>,
    i3_closed_form: f64,
    i3_closed_form_rel_delta: f64,
    closed_form_status: &'static str,
}

#[derive(Debug, Serialize)]
struct PairCheck {
    n: u32,
    m: u32,
    eta: f64,
    w_minus_norm_residual: f64,
    v_plus_norm_residual: f64,
    h_w_minus_delta: f64,
    h_v_plus_delta: f64,
    closed_form_entropy_delta: f64,
    closed_form_status: &'static str,
    f: f64,
    alt_f: f64,
    pairing_difference: f64,
    /// `f` when `C > 0` (`alpha = -45 deg`) minus `f` when `C < 0`.
    sign_of_c_difference: f64,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    n_max: u32,
    passed: bool,
    failures: Vec<String>,
    experimental_flags: usize,
    integrals: Vec<IntegralCheck>,
    pairs: Vec<PairCheck>,
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }
}

fn status(delta: f64) -> &'static str {
    if delta <= EXPERIMENTAL_TOL {
        "validated"
    } else {
        "EXPERIMENTAL"
    }
}

fn build(n_max: u32) -> Result<VerifyReport> {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };

    let rule = legendre_rule(DEFAULT_PANEL_ORDER)?;
    let fine = legendre_rule(2 * DEFAULT_PANEL_ORDER)?;
    let mut integrals = Vec::new();
    for n in 0..=n_max {
        let order = HermiteOrder::new(n)?;
        let bundle = integral_bundle(n, n, 0.0)?;
        let gh = gauss_hermite_rule(n as usize + 2)?;
        let h2 = |z: f64| hermite_eval(order, z).map(|h| h * h).unwrap_or(f64::NAN);
        let i1_q = gh.integrate_weighted(h2)?;
        let i2_q = -gh.integrate_weighted(|z| z * z * h2(z))?;
        let i3 = entropy_integral_numeric(order, &rule)?;
        let i3_fine = entropy_integral_numeric(order, &fine)?;
        let self_conv = (i3 - i3_fine).abs() / bundle.i1;
        let analytic = (n == 1).then(|| (i3 - 4.0 * SQRT_PI * (1.0 - 0.5 * EULER_GAMMA)).abs());
        let cf = entropy_integral_closed_form(order)?;
        let cf_delta = if n == 0 { (cf - i3).abs() } else { rel(cf, i3) };

        let c = IntegralCheck {
            n,
            i1_closed: bundle.i1,
            i1_quadrature: i1_q,
            i1_rel_delta: rel(i1_q, bundle.i1),
            i2_closed: bundle.i2,
            i2_quadrature: i2_q,
            i2_rel_delta: rel(i2_q, bundle.i2),
            i3_quadrature: i3,
            i3_self_convergence: self_conv,
            i3_analytic_delta: analytic,
            i3_closed_form: cf,
            i3_closed_form_rel_delta: cf_delta,
            closed_form_status: status(cf_delta),
        };
        check(c.i1_rel_delta <= CLOSED_FORM_TOL, format!("I1({n}) closed form vs Gauss-Hermite: {:e}", c.i1_rel_delta));
        check(c.i2_rel_delta <= CLOSED_FORM_TOL, format!("I2({n}) closed form vs Gauss-Hermite: {:e}", c.i2_rel_delta));
        check(self_conv <= SELF_CONVERGENCE_TOL, format!("I3({n}) panel refinement: {self_conv:e}"));
        if let Some(d) = analytic {
            check(d <= ANALYTIC_I3_TOL, format!("I3(1) vs 4 sqrt(pi)(1 - gamma/2): {d:e}"));
        }
        integrals.push(c);
    }

    let mut pairs = Vec::new();
    for n in 0..=n_max {
        for m in 0..=n_max {
            for eta in ETAS {
                let report = criterion_f(n, m, eta)?;
                let minus = criterion_f_rotated(n, m, eta, Rotation::MinusQuarter)?;
                let w_mass = marginal_mass(Side::WMinus, n, m, eta, DEFAULT_PANEL_ORDER)?;
                let v_mass = marginal_mass(Side::VPlus, n, m, eta, DEFAULT_PANEL_ORDER)?;
                let hw = shannon_entropy(Side::WMinus, n, m, eta)?;
                let hv = shannon_entropy(Side::VPlus, n, m, eta)?;
                let hw_q = shannon_entropy_numeric(Side::WMinus, n, m, eta, DEFAULT_PANEL_ORDER)?;
                let hv_q = shannon_entropy_numeric(Side::VPlus, n, m, eta, DEFAULT_PANEL_ORDER)?;
                let p = PairCheck {
                    n,
                    m,
                    eta,
                    w_minus_norm_residual: (w_mass - 1.0).abs(),
                    v_plus_norm_residual: (v_mass - 1.0).abs(),
                    h_w_minus_delta: (hw - hw_q).abs(),
                    h_v_plus_delta: (hv - hv_q).abs(),
                    closed_form_entropy_delta: report.oracle_delta,
                    closed_form_status: status(report.oracle_delta),
                    f: report.f,
                    alt_f: report.alt_f,
                    pairing_difference: report.f - report.alt_f,
                    sign_of_c_difference: minus.f - report.f,
                };
                let tag = format!("(n={n}, m={m}, eta={eta})");
                check(p.w_minus_norm_residual <= NORMALIZATION_TOL, format!("int w- != 1 at {tag}: {:e}", p.w_minus_norm_residual));
                check(p.v_plus_norm_residual <= NORMALIZATION_TOL, format!("int v+ != 1 at {tag}: {:e}", p.v_plus_norm_residual));
                check(p.h_w_minus_delta <= ENTROPY_TOL, format!("H[w-] decomposition vs quadrature at {tag}: {:e}", p.h_w_minus_delta));
                check(p.h_v_plus_delta <= ENTROPY_TOL, format!("H[v+] decomposition vs quadrature at {tag}: {:e}", p.h_v_plus_delta));
                pairs.push(p);
            }
        }
    }

    let experimental_flags = integrals.iter().filter(|c| c.closed_form_status != "validated").count();
    Ok(VerifyReport {
        n_max,
        passed: failures.is_empty(),
        failures,
        experimental_flags,
        integrals,
        pairs,
    })
}

fn table(report: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Entropy integrals: closed form vs quadrature (n <= {})", report.n_max);
    let _ = writeln!(
        s,
        "{:>3}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}  {:>12}",
        "n", "dI1 rel", "dI2 rel", "I3 refine", "I3 exact", "V_n rel", "V_n path"
    );
    for c in &report.integrals {
        let exact = c.i3_analytic_delta.map_or_else(|| "-".to_string(), |d| format!("{d:.2e}"));
        let _ = writeln!(
            s,
            "{:>3}  {:>10.2e}  {:>10.2e}  {:>10.2e}  {:>10}  {:>10.2e}  {:>12}",
            c.n, c.i1_rel_delta, c.i2_rel_delta, c.i3_self_convergence, exact, c.i3_closed_form_rel_delta, c.closed_form_status
        );
    }
    let max = |f: fn(&PairCheck) -> f64| report.pairs.iter().map(f).fold(0.0f64, f64::max);
    let _ = writeln!(s);
    let _ = writeln!(s, "Marginals over n, m <= {} and eta in {{0, 0.5, 1}}", report.n_max);
    let _ = writeln!(s, "  max |int w- - 1|            {:.2e}", max(|p| p.w_minus_norm_residual));
    let _ = writeln!(s, "  max |int v+ - 1|            {:.2e}", max(|p| p.v_plus_norm_residual));
    let _ = writeln!(s, "  max |H[w-] - quadrature|    {:.2e}", max(|p| p.h_w_minus_delta));
    let _ = writeln!(s, "  max |H[v+] - quadrature|    {:.2e}", max(|p| p.h_v_plus_delta));
    let _ = writeln!(s, "  max closed-form entropy gap {:.2e}  (V_n path, not normative)", max(|p| p.closed_form_entropy_delta));
    let _ = writeln!(s, "  max |f - alt_f|             {:.2e}  (alt_f = H[w+] + H[v-] - ln 2pi e; equals -2 eta)", max(|p| p.pairing_difference.abs()));
    let _ = writeln!(s, "  max |f(C>0) - f(C<0)|       {:.2e}  (sign of C swaps the pairings)", max(|p| p.sign_of_c_difference.abs()));
    let _ = writeln!(s);
    if report.passed {
        let _ = writeln!(
            s,
            "PASS: all normative checks within tolerance; {} order(s) with the V_n closed form flagged EXPERIMENTAL",
            report.experimental_flags
        );
    } else {
        let _ = writeln!(s, "FAIL: {} normative check(s) out of tolerance", report.failures.len());
        for f in &report.failures {
            let _ = writeln!(s, "  {f}");
        }
    }
    s
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode> {
    ensure!(args.n_max <= MAX_VERIFY_ORDER, "n-max must be at most {MAX_VERIFY_ORDER}, got {}", args.n_max);
    let report = build(args.n_max)?;
    let json = serde_json::to_string_pretty(&report)? + "\n";
    match args.format {
        VerifyFormat::Json => write_output(args.out.as_deref(), json.as_bytes())?,
        VerifyFormat::Text => {
            write_output(None, table(&report).as_bytes())?;
            if let Some(path) = &args.out {
                write_output(Some(path), json.as_bytes())?;
            }
        }
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(2) })
}
