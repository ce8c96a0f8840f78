use std::io::Write;

use serde::Serialize;

use super::{to_radians, CliError, DataFormat, MonteCarloArgs, OtpArgs, ReportFormat, SweepArgs, TeleportArgs};
use crate::classical_otp::{run_rounds, OtpRun};
use crate::densemat::Complex;
use crate::error::Error;
use crate::experiment::{
    linspace, monte_carlo_probability_with, probability_up, probability_up_trace, sweep,
    write_csv, write_json, McConfig, McEstimate, MeasurementSetting, OutcomeSampling,
};
use crate::qstate::{input_state, qubit_fidelity, Alpha, DensityMatrix};
use crate::rng::seeded;
use crate::teleport::{
    qubit_entries, teleport_all_outcomes, teleport_channel_analytic, CorrectionTable,
    OutcomeSummary,
};

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::AlphaOutOfRange(_)
            | Error::PopulationOutOfRange(_)
            | Error::CoherenceTooLarge { .. }
            | Error::NonFinite(_)
            | Error::EmptyGrid(_)
            | Error::TooFewSamples { .. }
            | Error::ZeroShots => CliError::Invalid(e.to_string()),
            other => CliError::Sim(other),
        }
    }
}

fn fmt_complex(z: Complex) -> String {
    format!("{:+.12}{:+.12}i", z.re, z.im)
}

fn fmt_qubit(rho: &DensityMatrix) -> String {
    let m = rho.matrix();
    format!(
        "[[{}, {}], [{}, {}]]",
        fmt_complex(m[(0, 0)]),
        fmt_complex(m[(0, 1)]),
        fmt_complex(m[(1, 0)]),
        fmt_complex(m[(1, 1)])
    )
}

fn write_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct TeleportReport {
    alpha: Alpha,
    rho_in: [[f64; 2]; 4],
    outcomes: Vec<OutcomeSummary>,
    rho_out_analytic: [[f64; 2]; 4],
    fidelity: f64,
    max_numeric_deviation: f64,
}

pub fn cmd_teleport(args: &TeleportArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rho_in = input_state(args.rho00, Complex::new(args.rho01_re, args.rho01_im))?;
    let runs = teleport_all_outcomes(&rho_in, args.alpha, &CorrectionTable::standard())?;
    let analytic = teleport_channel_analytic(&rho_in, args.alpha)?;
    let max_dev = runs
        .iter()
        .map(|r| r.bob_post_correction.matrix().max_abs_diff(analytic.matrix()))
        .collect::<Result<Vec<f64>, _>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let fidelity = qubit_fidelity(&analytic, &rho_in)?;

    match args.format {
        ReportFormat::Json => write_json_line(
            out,
            &TeleportReport {
                alpha: args.alpha,
                rho_in: qubit_entries(&rho_in),
                outcomes: runs.iter().map(OutcomeSummary::from).collect(),
                rho_out_analytic: qubit_entries(&analytic),
                fidelity,
                max_numeric_deviation: max_dev,
            },
        ),
        ReportFormat::Text => {
            writeln!(out, "alpha            {}", args.alpha)?;
            writeln!(out, "rho_in           {}", fmt_qubit(&rho_in))?;
            for run in &runs {
                writeln!(out, "outcome {:<5}    p = {:.15}", run.outcome.label(), run.probability)?;
                writeln!(out, "  before         {}", fmt_qubit(&run.bob_pre_correction))?;
                writeln!(out, "  after          {}", fmt_qubit(&run.bob_post_correction))?;
            }
            writeln!(out, "rho_out          {}", fmt_qubit(&analytic))?;
            writeln!(out, "fidelity         {fidelity:.15}")?;
            writeln!(out, "max deviation    {max_dev:.3e}")?;
            Ok(())
        }
    }
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let default_max = if args.degrees { 180.0 } else { std::f64::consts::PI };
    let phi_min = to_radians(args.phi_min, args.degrees);
    let phi_max = to_radians(args.phi_max.unwrap_or(default_max), args.degrees);
    let phis = linspace(phi_min, phi_max, args.phi_steps);
    let alphas = linspace(args.alpha_min, args.alpha_max, args.alpha_steps)
        .into_iter()
        .map(Alpha::new)
        .collect::<Result<Vec<_>, _>>()?;
    let mc = args.shots.map(|shots| McConfig {
        shots,
        seed: args.seed,
    });
    let records = sweep(&phis, &alphas, mc)?;
    match args.format {
        DataFormat::Csv => write_csv(&records, &mut *out)?,
        DataFormat::Json => write_json(&records, &mut *out)?,
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct MonteCarloReport {
    #[serde(flatten)]
    setting: MeasurementSetting,
    seed: u64,
    #[serde(flatten)]
    estimate: McEstimate,
    closed_form: f64,
    trace_form: f64,
    z_score: f64,
}

pub fn cmd_montecarlo(args: &MonteCarloArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let setting = MeasurementSetting::new(
        to_radians(args.phi, args.degrees),
        to_radians(args.phi_m, args.degrees),
        args.alpha,
    );
    let sampling = if args.trace_outcomes {
        OutcomeSampling::FromTrace
    } else {
        OutcomeSampling::Uniform
    };
    let estimate =
        monte_carlo_probability_with(&setting, args.shots, &mut seeded(args.seed), sampling)?;
    let closed_form = probability_up(&setting);
    let report = MonteCarloReport {
        setting,
        seed: args.seed,
        estimate,
        closed_form,
        trace_form: probability_up_trace(&setting),
        z_score: estimate.z_score(closed_form),
    };
    match args.format {
        ReportFormat::Json => write_json_line(out, &report),
        ReportFormat::Text => {
            writeln!(out, "phi          {}", setting.phi)?;
            writeln!(out, "phi_m        {}", setting.phi_m)?;
            writeln!(out, "alpha        {}", setting.alpha)?;
            writeln!(out, "shots        {}", estimate.shots)?;
            writeln!(out, "seed         {}", args.seed)?;
            writeln!(out, "estimate     {:.15}", estimate.estimate)?;
            writeln!(out, "stderr       {:.15}", estimate.stderr)?;
            writeln!(out, "closed form  {closed_form:.15}")?;
            writeln!(out, "trace form   {:.15}", report.trace_form)?;
            writeln!(out, "z            {:.6}", report.z_score)?;
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
struct OtpReport {
    seed: u64,
    #[serde(flatten)]
    run: OtpRun,
    success_rate: f64,
    uncorrected_up_fraction: f64,
    uncorrected_z: f64,
}

pub fn cmd_otp(args: &OtpArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rounds = usize::try_from(args.shots)
        .map_err(|_| CliError::Invalid(format!("shot count {} too large", args.shots)))?;
    let run = run_rounds(rounds, &mut seeded(args.seed))?;
    let report = OtpReport {
        seed: args.seed,
        run,
        success_rate: run.success_rate(),
        uncorrected_up_fraction: run.uncorrected.up_fraction(),
        uncorrected_z: run.uncorrected.z_score(0.5),
    };
    match args.format {
        ReportFormat::Json => write_json_line(out, &report),
        ReportFormat::Text => {
            writeln!(out, "rounds                  {}", run.rounds)?;
            writeln!(out, "seed                    {}", args.seed)?;
            writeln!(out, "success rate            {:.6}", report.success_rate)?;
            writeln!(
                out,
                "no-message up fraction  {:.6} (z = {:.3})",
                report.uncorrected_up_fraction, report.uncorrected_z
            )?;
            Ok(())
        }
    }
}
