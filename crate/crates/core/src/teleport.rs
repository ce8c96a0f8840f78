//! Teleportation of one qubit through the shared resource `shared_state(α)`.
//!
//! Particle 1 holds the input, particles 2 and 3 the resource; Alice measures
//! 1 and 2 in the Bell basis, Bob corrects 3. The numeric pipeline works on the
//! full 8×8 joint state. [`teleport_channel_analytic`] is the closed-form map
//! the pipeline must reproduce: populations kept, coherences scaled by α.
//!
//! The measurement update uses bare projectors `Π = |Bell⟩⟨Bell| ⊗ I` and
//! renormalises by `Tr(ΠρΠ)`.

use serde::Serialize;

use crate::densemat::{ComplexMatrix, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::qstate::{bell_state, shared_state, Alpha, BellKind, DensityMatrix};

pub type BellOutcome = BellKind;

/// Outcome probabilities below this leave Bob's state undefined.
pub const UNDEFINED_PROBABILITY: f64 = 1e-14;

const SUBSYSTEMS: [usize; 3] = [2, 2, 2];

/// Bob's unitary for each Bell outcome, indexed by [`BellKind::index`].
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionTable {
    unitaries: [ComplexMatrix; 4],
}

impl CorrectionTable {
    /// Ψ⁻ → I, Ψ⁺ → diag(1, −1), Φ⁻ → X, Φ⁺ → [[0, i], [−i, 0]].
    pub fn standard() -> Self {
        Self {
            unitaries: BellKind::ALL.map(correction_unitary),
        }
    }

    pub fn get(&self, outcome: BellOutcome) -> &ComplexMatrix {
        &self.unitaries[outcome.index()]
    }

    /// Replaces one entry; used to build deliberately wrong tables.
    pub fn with_entry(mut self, outcome: BellOutcome, unitary: ComplexMatrix) -> Self {
        self.unitaries[outcome.index()] = unitary;
        self
    }
}

impl Default for CorrectionTable {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BellMeasurement {
    pub probability: f64,
    pub bob_state: DensityMatrix,
}

/// One run of the protocol conditioned on a Bell outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct TeleportOutcome {
    pub outcome: BellOutcome,
    pub probability: f64,
    pub bob_pre_correction: DensityMatrix,
    pub bob_post_correction: DensityMatrix,
}

/// Flattened view of a [`TeleportOutcome`] for reports.
#[derive(Debug, Clone, Serialize)]
pub struct OutcomeSummary {
    pub outcome: BellOutcome,
    pub probability: f64,
    pub bob_pre_correction: [[f64; 2]; 4],
    pub bob_post_correction: [[f64; 2]; 4],
}

/// Row-major `[re, im]` pairs of a 2×2 matrix.
pub fn qubit_entries(rho: &DensityMatrix) -> [[f64; 2]; 4] {
    let m = rho.matrix();
    [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(r, c)| [m[(r, c)].re, m[(r, c)].im])
}

impl From<&TeleportOutcome> for OutcomeSummary {
    fn from(t: &TeleportOutcome) -> Self {
        Self {
            outcome: t.outcome,
            probability: t.probability,
            bob_pre_correction: qubit_entries(&t.bob_pre_correction),
            bob_post_correction: qubit_entries(&t.bob_post_correction),
        }
    }
}

/// `ρ_in ⊗ shared_state(α)` over particles (1, 2, 3).
pub fn joint_state(rho_in: &DensityMatrix, alpha: Alpha) -> Result<DensityMatrix> {
    rho_in.expect_qubits(1)?;
    Ok(rho_in.tensor(&shared_state(alpha)))
}

/// `|Bell⟩⟨Bell| ⊗ I` acting on particles 1 and 2.
pub fn bell_projector(outcome: BellOutcome) -> ComplexMatrix {
    bell_state(outcome)
        .projector()
        .tensor(&ComplexMatrix::identity(2))
}

/// Projects particles 1–2 onto `outcome` and returns the renormalised state of particle 3.
///
/// Accepts any 3-qubit state.
pub fn measure_bell(rho123: &DensityMatrix, outcome: BellOutcome) -> Result<BellMeasurement> {
    rho123.expect_qubits(3)?;
    let projector = bell_projector(outcome);
    let projected = rho123.matrix().conjugate_by(&projector)?;
    let probability = projected.trace().re;
    if probability < UNDEFINED_PROBABILITY {
        return Err(Error::UndefinedOutcome {
            outcome,
            probability,
        });
    }
    let reduced = projected.partial_trace(&[2], &SUBSYSTEMS)?;
    let bob_state = DensityMatrix::new(&reduced * (1.0 / probability))?;
    Ok(BellMeasurement {
        probability,
        bob_state,
    })
}

pub fn correction_unitary(outcome: BellOutcome) -> ComplexMatrix {
    let rows = match outcome {
        BellKind::PsiMinus => [[ONE, ZERO], [ZERO, ONE]],
        BellKind::PsiPlus => [[ONE, ZERO], [ZERO, -ONE]],
        BellKind::PhiMinus => [[ZERO, ONE], [ONE, ZERO]],
        BellKind::PhiPlus => [[ZERO, I], [-I, ZERO]],
    };
    ComplexMatrix::from_rows(rows).expect("finite entries")
}

pub fn teleport_channel_numeric(
    rho_in: &DensityMatrix,
    alpha: Alpha,
    outcome: BellOutcome,
) -> Result<TeleportOutcome> {
    teleport_channel_numeric_with(rho_in, alpha, outcome, &CorrectionTable::standard())
}

/// Full pipeline: joint state, Bell measurement, then Bob's correction from `table`.
pub fn teleport_channel_numeric_with(
    rho_in: &DensityMatrix,
    alpha: Alpha,
    outcome: BellOutcome,
    table: &CorrectionTable,
) -> Result<TeleportOutcome> {
    let joint = joint_state(rho_in, alpha)?;
    let BellMeasurement {
        probability,
        bob_state,
    } = measure_bell(&joint, outcome)?;
    let corrected = bob_state.matrix().conjugate_by(table.get(outcome))?;
    Ok(TeleportOutcome {
        outcome,
        probability,
        bob_pre_correction: bob_state,
        bob_post_correction: DensityMatrix::new(corrected)?,
    })
}

/// Runs the pipeline for each of the four Bell outcomes, in [`BellKind::ALL`] order.
pub fn teleport_all_outcomes(
    rho_in: &DensityMatrix,
    alpha: Alpha,
    table: &CorrectionTable,
) -> Result<Vec<TeleportOutcome>> {
    BellKind::ALL
        .iter()
        .map(|&o| teleport_channel_numeric_with(rho_in, alpha, o, table))
        .collect()
}

/// Outcome-averaged output `Σᵢ pᵢ ρᵢ` of the numeric pipeline.
pub fn averaged_channel(rho_in: &DensityMatrix, alpha: Alpha) -> Result<DensityMatrix> {
    let runs = teleport_all_outcomes(rho_in, alpha, &CorrectionTable::standard())?;
    let mut acc = ComplexMatrix::zeros(2);
    for run in &runs {
        acc = &acc + &(run.bob_post_correction.matrix() * run.probability);
    }
    DensityMatrix::new(acc)
}

/// Phase damping: diagonal kept, off-diagonal entries multiplied by α.
pub fn phase_damp(mat: &ComplexMatrix, alpha: Alpha) -> Result<ComplexMatrix> {
    if mat.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: 2,
            right: mat.dim(),
        });
    }
    let mut out = mat.clone();
    out[(0, 1)] *= alpha.value();
    out[(1, 0)] *= alpha.value();
    Ok(out)
}

pub fn teleport_channel_analytic(rho_in: &DensityMatrix, alpha: Alpha) -> Result<DensityMatrix> {
    rho_in.expect_qubits(1)?;
    DensityMatrix::new(phase_damp(rho_in.matrix(), alpha)?)
}
