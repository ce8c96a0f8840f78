//! Spin statistics of teleported rotated states.
//!
//! The input is `|↑⟩` rotated by φ about x; after teleportation the spin is
//! measured along the z axis rotated by φ_m about x. The probability of `+½`
//! is `cos φ cos φ_m / 2 + α sin φ sin φ_m / 2 + 1/2`, and the fidelity is that
//! probability at `φ_m = φ`.

use std::io::{self, Write};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qstate::{rotated_input, rotation_operator, Alpha, BellKind, DensityMatrix, PureState};
use crate::rng::task_stream;
use crate::teleport::{
    teleport_all_outcomes, teleport_channel_analytic, CorrectionTable, TeleportOutcome,
};

pub const DEFAULT_PHI_STEPS: usize = 61;
pub const DEFAULT_ALPHA_STEPS: usize = 51;

pub const CSV_HEADER: &str = "phi,phi_m,alpha,probability_up,fidelity,mc_estimate,mc_stderr,mc_shots";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementSetting {
    /// Input rotation angle.
    pub phi: f64,
    /// Measurement-axis rotation angle.
    pub phi_m: f64,
    pub alpha: Alpha,
}

impl MeasurementSetting {
    pub fn new(phi: f64, phi_m: f64, alpha: Alpha) -> Self {
        Self { phi, phi_m, alpha }
    }
}

/// Teleported rotated input; equals the analytic channel applied to `|Ψ_in(φ)⟩⟨Ψ_in(φ)|`.
pub fn output_state(phi: f64, alpha: Alpha) -> DensityMatrix {
    let input = rotated_input(phi).density();
    teleport_channel_analytic(&input, alpha).expect("single-qubit input")
}

/// Closed-form probability of finding spin `+½` along the rotated axis.
pub fn probability_up(setting: &MeasurementSetting) -> f64 {
    let MeasurementSetting { phi, phi_m, alpha } = *setting;
    phi.cos() * phi_m.cos() / 2.0 + alpha.value() * (phi.sin() * phi_m.sin()) / 2.0 + 0.5
}

/// Same probability evaluated as `Tr(ρ_out R(φ_m)|↑⟩⟨↑|R†(φ_m))`.
pub fn probability_up_trace(setting: &MeasurementSetting) -> f64 {
    let rho = output_state(setting.phi, setting.alpha);
    let r = rotation_operator(setting.phi_m);
    let projector = PureState::up()
        .projector()
        .conjugate_by(&r)
        .expect("2x2 operands");
    rho.matrix()
        .multiply(&projector)
        .expect("2x2 operands")
        .trace()
        .re
}

/// `−¼[α(cos 2φ − 1) − cos 2φ − 3]`
pub fn fidelity(phi: f64, alpha: Alpha) -> f64 {
    let c2 = (2.0 * phi).cos();
    -0.25 * (alpha.value() * (c2 - 1.0) - c2 - 3.0)
}

/// How each Monte Carlo shot picks Alice's Bell outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutcomeSampling {
    /// Uniform over the four outcomes; every outcome has probability ¼.
    #[default]
    Uniform,
    /// Drawn from the outcome probabilities computed by the numeric pipeline.
    FromTrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub shots: u64,
}

impl McEstimate {
    /// `(estimate − expected) / stderr`; zero when both the deviation and stderr vanish.
    pub fn z_score(&self, expected: f64) -> f64 {
        let diff = self.estimate - expected;
        if self.stderr > 0.0 {
            diff / self.stderr
        } else if diff == 0.0 {
            0.0
        } else {
            diff.signum() * f64::INFINITY
        }
    }

    /// True when `|estimate − expected| < k·stderr`, or the deviation is exactly zero.
    pub fn within_sigmas(&self, expected: f64, k: f64) -> bool {
        let diff = (self.estimate - expected).abs();
        diff == 0.0 || diff < k * self.stderr
    }
}

pub fn monte_carlo_probability<R: Rng + ?Sized>(
    setting: &MeasurementSetting,
    shots: u64,
    rng: &mut R,
) -> Result<McEstimate> {
    monte_carlo_probability_with(setting, shots, rng, OutcomeSampling::Uniform)
}

/// Simulates `shots` protocol runs followed by a spin measurement along the rotated axis.
///
/// Bob's corrected state is computed once per Bell outcome by the numeric
/// pipeline; each shot draws an outcome, then draws the spin result from the
/// Born probability of that outcome's state.
pub fn monte_carlo_probability_with<R: Rng + ?Sized>(
    setting: &MeasurementSetting,
    shots: u64,
    rng: &mut R,
    sampling: OutcomeSampling,
) -> Result<McEstimate> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let input = rotated_input(setting.phi).density();
    let axis = rotated_input(setting.phi_m);
    let runs: Vec<TeleportOutcome> =
        teleport_all_outcomes(&input, setting.alpha, &CorrectionTable::standard())?;
    let born: Vec<f64> = runs
        .iter()
        .map(|r| r.bob_post_correction.expectation(&axis))
        .collect::<Result<_>>()?;
    let mut cumulative = [0.0; 4];
    let mut acc = 0.0;
    for (slot, run) in cumulative.iter_mut().zip(&runs) {
        acc += run.probability;
        *slot = acc;
    }

    let mut ups: u64 = 0;
    for _ in 0..shots {
        let outcome = match sampling {
            OutcomeSampling::Uniform => rng.gen_range(0..BellKind::ALL.len()),
            OutcomeSampling::FromTrace => {
                let u = rng.gen::<f64>() * acc;
                cumulative.iter().position(|&c| u < c).unwrap_or(3)
            }
        };
        if rng.gen::<f64>() < born[outcome] {
            ups += 1;
        }
    }
    let estimate = ups as f64 / shots as f64;
    Ok(McEstimate {
        estimate,
        stderr: (estimate * (1.0 - estimate) / shots as f64).sqrt(),
        shots,
    })
}

/// `steps` evenly spaced points from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..steps)
            .map(|k| {
                if k == steps - 1 {
                    end
                } else {
                    start + (end - start) * (k as f64 / (steps - 1) as f64)
                }
            })
            .collect(),
    }
}

/// Grid used to reproduce the fidelity surface: φ ∈ [0, π] × α ∈ [0, 1].
pub fn default_grid() -> (Vec<f64>, Vec<Alpha>) {
    let phis = linspace(0.0, std::f64::consts::PI, DEFAULT_PHI_STEPS);
    let alphas = linspace(0.0, 1.0, DEFAULT_ALPHA_STEPS)
        .into_iter()
        .map(|a| Alpha::new(a).expect("grid inside [0, 1]"))
        .collect();
    (phis, alphas)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub shots: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRecord {
    #[serde(flatten)]
    pub setting: MeasurementSetting,
    pub probability_up: f64,
    pub fidelity: f64,
    pub mc_estimate: Option<f64>,
    pub mc_stderr: Option<f64>,
    pub mc_shots: Option<u64>,
}

/// Evaluates every (φ, α) pair with `φ_m = φ`, φ outer and α inner.
///
/// Grid points run in parallel; point `k` draws its Monte Carlo shots from
/// stream `k` of the configured seed.
pub fn sweep(
    phi_grid: &[f64],
    alpha_grid: &[Alpha],
    with_mc: Option<McConfig>,
) -> Result<Vec<SweepRecord>> {
    if phi_grid.is_empty() {
        return Err(Error::EmptyGrid("phi"));
    }
    if alpha_grid.is_empty() {
        return Err(Error::EmptyGrid("alpha"));
    }
    if with_mc.is_some_and(|mc| mc.shots == 0) {
        return Err(Error::ZeroShots);
    }
    let n_alpha = alpha_grid.len();
    (0..phi_grid.len() * n_alpha)
        .into_par_iter()
        .map(|k| {
            let phi = phi_grid[k / n_alpha];
            let alpha = alpha_grid[k % n_alpha];
            let setting = MeasurementSetting::new(phi, phi, alpha);
            let mc = with_mc
                .map(|cfg| {
                    let mut rng = task_stream(cfg.seed, k as u64);
                    monte_carlo_probability(&setting, cfg.shots, &mut rng)
                })
                .transpose()?;
            Ok(SweepRecord {
                setting,
                probability_up: probability_up(&setting),
                fidelity: fidelity(phi, alpha),
                mc_estimate: mc.map(|m| m.estimate),
                mc_stderr: mc.map(|m| m.stderr),
                mc_shots: mc.map(|m| m.shots),
            })
        })
        .collect()
}

/// Float with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(records: &[SweepRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    let opt = |v: Option<f64>| v.map(format_float).unwrap_or_default();
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            format_float(r.setting.phi),
            format_float(r.setting.phi_m),
            format_float(r.setting.alpha.value()),
            format_float(r.probability_up),
            format_float(r.fidelity),
            opt(r.mc_estimate),
            opt(r.mc_stderr),
            r.mc_shots.map(|s| s.to_string()).unwrap_or_default(),
        )?;
    }
    Ok(())
}

pub fn write_json<W: Write>(records: &[SweepRecord], mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)
}
