use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use serde::Serialize;
use seec_core::{
    criterion_f, diagonalize as diagonalize_core, reconstruct, threshold_eta0, wavefunction as psi,
    CoupledHamiltonian, ModePair, Space, MAX_QUANTUM_NUMBER,
};

use crate::format::{sig12, write_output};
use crate::svg::{line_plot, Series};
use crate::{
    CriterionArgs, DiagonalizeArgs, Format, SpaceArg, SweepArgs, ThresholdArgs, WavefunctionArgs,
};

/// Validated sweep request.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub modes: Vec<(u32, u32)>,
    pub eta_min: f64,
    pub eta_max: f64,
    pub steps: usize,
}

impl SweepSpec {
    pub fn new(modes: Vec<(u32, u32)>, eta_min: f64, eta_max: f64, steps: usize) -> Result<Self> {
        ensure!(!modes.is_empty(), "at least one mode is required");
        for &(n, m) in &modes {
            ModePair::new(n, m).with_context(|| format!("mode {n}:{m}"))?;
        }
        ensure!(eta_min.is_finite() && eta_max.is_finite(), "eta bounds must be finite");
        ensure!(eta_min < eta_max, "eta-min ({eta_min}) must be below eta-max ({eta_max})");
        ensure!(steps >= 2, "steps must be at least 2, got {steps}");
        Ok(Self { modes, eta_min, eta_max, steps })
    }

    pub fn grid(&self) -> Vec<f64> {
        grid(self.eta_min, self.eta_max, self.steps)
    }
}

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { hi } else { lo + (hi - lo) * i as f64 / last })
        .collect()
}

pub fn parse_modes(s: &str) -> Result<Vec<(u32, u32)>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|pair| {
            let (n, m) = pair
                .trim()
                .split_once(':')
                .with_context(|| format!("mode '{pair}' is not of the form n:m"))?;
            Ok((
                n.trim().parse().with_context(|| format!("bad n in mode '{pair}'"))?,
                m.trim().parse().with_context(|| format!("bad m in mode '{pair}'"))?,
            ))
        })
        .collect()
}

#[derive(Serialize)]
struct SweepRow {
    eta: f64,
    n: u32,
    m: u32,
    f: f64,
    entangled: bool,
}

pub fn sweep(args: &SweepArgs) -> Result<ExitCode> {
    let spec = SweepSpec::new(parse_modes(&args.modes)?, args.eta_min, args.eta_max, args.steps)?;
    let etas = spec.grid();
    let mut rows = Vec::with_capacity(spec.modes.len() * etas.len());
    for &(n, m) in &spec.modes {
        for &eta in &etas {
            let r = criterion_f(n, m, eta)?;
            rows.push(SweepRow { eta, n, m, f: r.f, entangled: r.entangled });
        }
    }

    let body = match args.format {
        Format::Csv => {
            let mut s = String::from("eta,n,m,f,entangled\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{},{},{}", sig12(r.eta), r.n, r.m, sig12(r.f), r.entangled);
            }
            s
        }
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
    };
    let plot = args.svg.as_ref().map(|_| {
        let series: Vec<Series> = spec
            .modes
            .iter()
            .map(|&(n, m)| Series {
                label: format!("n={n}, m={m}"),
                points: rows.iter().filter(|r| r.n == n && r.m == m).map(|r| (r.eta, r.f)).collect(),
            })
            .collect();
        line_plot(&series)
    });

    write_output(args.out.as_deref(), body.as_bytes())?;
    if let (Some(path), Some(plot)) = (&args.svg, plot) {
        write_output(Some(path), plot.as_bytes())?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ThresholdRow {
    n: u32,
    m: u32,
    eta0: f64,
}

pub fn threshold(args: &ThresholdArgs) -> Result<ExitCode> {
    for (name, v) in [("n-max", args.n_max), ("m-max", args.m_max)] {
        ensure!(v <= MAX_QUANTUM_NUMBER, "{name} must be at most {MAX_QUANTUM_NUMBER}, got {v}");
    }
    let mut rows = Vec::new();
    for n in 0..=args.n_max {
        for m in 0..=args.m_max {
            rows.push(ThresholdRow { n, m, eta0: threshold_eta0(n, m)? });
        }
    }
    let body = match args.format {
        Format::Csv => {
            let mut s = String::from("n,m,eta0\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{}", r.n, r.m, sig12(r.eta0));
            }
            s
        }
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
    };
    write_output(args.out.as_deref(), body.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

pub fn criterion(args: &CriterionArgs) -> Result<ExitCode> {
    ensure!(args.eta.is_finite(), "eta must be finite");
    let report = criterion_f(args.n, args.m, args.eta)?;
    let body = serde_json::to_string_pretty(&report)? + "\n";
    write_output(args.out.as_deref(), body.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct DiagonalizeReport {
    M: f64,
    K: f64,
    omega: f64,
    eta: f64,
    alpha_deg: f64,
    degenerate_branch: bool,
    roundtrip_error: f64,
}

pub fn diagonalize(args: &DiagonalizeArgs) -> Result<ExitCode> {
    let h = CoupledHamiltonian::new(args.m1, args.m2, args.a, args.b, args.c)?;
    let d = diagonalize_core(&h)?;
    let report = DiagonalizeReport {
        M: d.mass,
        K: d.stiffness,
        omega: d.omega,
        eta: d.eta,
        alpha_deg: d.alpha_deg(),
        degenerate_branch: d.degenerate,
        roundtrip_error: reconstruct(&d).relative_error(&h.couplings()),
    };
    let body = serde_json::to_string_pretty(&report)? + "\n";
    write_output(args.out.as_deref(), body.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

pub fn wavefunction(args: &WavefunctionArgs) -> Result<ExitCode> {
    let mode = ModePair::new(args.n, args.m)?;
    ensure!(args.eta.is_finite(), "eta must be finite");
    ensure!(args.u_min.is_finite() && args.u_max.is_finite(), "grid bounds must be finite");
    if args.u_min >= args.u_max {
        bail!("u-min ({}) must be below u-max ({})", args.u_min, args.u_max);
    }
    ensure!(args.steps >= 2, "steps must be at least 2, got {}", args.steps);
    let space = match args.space {
        SpaceArg::Position => Space::Position,
        SpaceArg::Momentum => Space::Momentum,
    };
    let axis = grid(args.u_min, args.u_max, args.steps);
    let mut s = String::from("u_plus,u_minus,value\n");
    for &up in &axis {
        for &um in &axis {
            let v = psi(&mode, args.eta, space, up, um)?;
            let _ = writeln!(s, "{},{},{}", sig12(up), sig12(um), sig12(v));
        }
    }
    write_output(args.out.as_deref(), s.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}
