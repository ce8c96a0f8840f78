//! End-to-end consistency checks run by `teleport-sim verify`.

use std::io::Write;

use rand::Rng;
use serde::Serialize;

use super::{CliError, VerifyArgs};
use crate::classical_otp::{otp_teleport, Bit, CorrelatedPair};
use crate::densemat::{ComplexMatrix, ONE, ZERO};
use crate::error::Result;
use crate::experiment::{probability_up, probability_up_trace, MeasurementSetting};
use crate::qstate::{bell_state, random_qubit, Alpha, BellKind};
use crate::rng::seeded;
use crate::teleport::{
    bell_projector, phase_damp, teleport_all_outcomes, teleport_channel_analytic, CorrectionTable,
};

pub const CHANNEL_TOL: f64 = 1e-12;
pub const COMPOSITION_TOL: f64 = 1e-14;
pub const PROBABILITY_FORM_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Largest observed deviation, where meaningful.
    pub worst: f64,
}

impl CheckResult {
    fn within(name: &'static str, worst: f64, tol: f64) -> Self {
        Self {
            name,
            passed: worst < tol,
            worst,
        }
    }
}

/// Runs every check with `cases` random instances drawn from `seed`.
pub fn run_checks(seed: u64, cases: usize, table: &CorrectionTable) -> Result<Vec<CheckResult>> {
    let mut rng = seeded(seed);
    let mut results = Vec::new();

    let mut gram = 0.0f64;
    for a in BellKind::ALL {
        for b in BellKind::ALL {
            let want = if a == b { ONE } else { ZERO };
            gram = gram.max((bell_state(a).inner(&bell_state(b))? - want).norm());
        }
    }
    results.push(CheckResult::within("bell-orthonormality", gram, CHANNEL_TOL));

    let mut sum = ComplexMatrix::zeros(8);
    for o in BellKind::ALL {
        sum = &sum + &bell_projector(o);
    }
    let completeness = sum.max_abs_diff(&ComplexMatrix::identity(8))?;
    results.push(CheckResult::within("projector-completeness", completeness, CHANNEL_TOL));

    let mut prob_dev = 0.0f64;
    let mut channel_dev = 0.0f64;
    let mut independence_dev = 0.0f64;
    for _ in 0..cases {
        let rho = random_qubit(&mut rng);
        let alpha = Alpha::new(rng.gen())?;
        let analytic = teleport_channel_analytic(&rho, alpha)?;
        let runs = teleport_all_outcomes(&rho, alpha, table)?;
        for run in &runs {
            prob_dev = prob_dev.max((run.probability - 0.25).abs());
            channel_dev = channel_dev.max(
                run.bob_post_correction
                    .matrix()
                    .max_abs_diff(analytic.matrix())?,
            );
            independence_dev = independence_dev.max(
                run.bob_post_correction
                    .matrix()
                    .max_abs_diff(runs[0].bob_post_correction.matrix())?,
            );
        }
    }
    results.push(CheckResult::within("outcome-probability-quarter", prob_dev, CHANNEL_TOL));
    results.push(CheckResult::within("numeric-vs-analytic-channel", channel_dev, CHANNEL_TOL));
    results.push(CheckResult::within("outcome-independence", independence_dev, CHANNEL_TOL));

    let mut composition = 0.0f64;
    for _ in 0..cases {
        let rho = random_qubit(&mut rng);
        let (a1, a2) = (Alpha::new(rng.gen())?, Alpha::new(rng.gen())?);
        let twice = phase_damp(&phase_damp(rho.matrix(), a1)?, a2)?;
        let once = phase_damp(rho.matrix(), Alpha::new(a1.value() * a2.value())?)?;
        composition = composition.max(twice.max_abs_diff(&once)?);
    }
    results.push(CheckResult::within("channel-composition", composition, COMPOSITION_TOL));

    let mut forms = 0.0f64;
    for _ in 0..cases {
        let setting = MeasurementSetting::new(
            rng.gen_range(0.0..std::f64::consts::TAU),
            rng.gen_range(0.0..std::f64::consts::TAU),
            Alpha::new(rng.gen())?,
        );
        forms = forms.max((probability_up(&setting) - probability_up_trace(&setting)).abs());
    }
    results.push(CheckResult::within("probability-closed-vs-trace", forms, PROBABILITY_FORM_TOL));

    let otp_failures = Bit::ALL
        .iter()
        .flat_map(|&b1| Bit::ALL.iter().map(move |&b2| (b1, b2)))
        .filter(|&(b1, b2)| otp_teleport(b1, CorrelatedPair::from_alice_bit(b2)) != b1)
        .count();
    results.push(CheckResult {
        name: "classical-otp-exhaustive",
        passed: otp_failures == 0,
        worst: otp_failures as f64,
    });

    Ok(results)
}

pub fn write_table(results: &[CheckResult], out: &mut dyn Write) -> std::io::Result<()> {
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {:<30} worst = {:.3e}", r.name, r.worst)?;
    }
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> std::result::Result<(), CliError> {
    let cases = usize::try_from(args.cases)
        .map_err(|_| CliError::Invalid(format!("case count {} too large", args.cases)))?;
    let results = run_checks(args.seed, cases, &CorrectionTable::standard())?;
    write_table(&results, out)?;
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    if failed.is_empty() {
        writeln!(out, "all {} checks passed", results.len())?;
        Ok(())
    } else {
        Err(CliError::VerifyFailed(failed.join(", ")))
    }
}
