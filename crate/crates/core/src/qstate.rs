//! Qubit states used by the protocol: basis kets, Bell states, the input
//! qubit, the shared resource family and the rotated inputs.
//!
//! Angles are radians. The physical range of a rotation angle is `[0, 2π)`,
//! but any real value is accepted.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::densemat::{complex, Complex, ComplexMatrix, EQ_TOL, HERMITIAN_TOL, I, ONE, ZERO};
use crate::error::{Error, Result};

/// Trace tolerance for [`DensityMatrix`].
pub const TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue a [`DensityMatrix`] may have.
pub const POSITIVITY_TOL: f64 = -1e-9;

/// Entanglement parameter of the shared resource, restricted to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Alpha(f64);

impl Alpha {
    pub const ZERO: Alpha = Alpha(0.0);
    pub const ONE: Alpha = Alpha(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Alpha::new(value)
    }
}

impl<'de> Deserialize<'de> for Alpha {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = f64::deserialize(d)?;
        Alpha::new(v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The four Bell states. Also the outcome label of a Bell measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BellKind {
    PsiMinus,
    PsiPlus,
    PhiMinus,
    PhiPlus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PsiMinus,
        BellKind::PsiPlus,
        BellKind::PhiMinus,
        BellKind::PhiPlus,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            BellKind::PsiMinus => "Psi-",
            BellKind::PsiPlus => "Psi+",
            BellKind::PhiMinus => "Phi-",
            BellKind::PhiPlus => "Phi+",
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Unit-norm state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex>,
}

impl PureState {
    pub const NORM_TOL: f64 = 1e-12;

    pub fn new(amplitudes: Vec<Complex>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::NotNormalized(0.0));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("state amplitudes"));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amplitudes })
    }

    pub fn up() -> Self {
        Self {
            amplitudes: vec![ONE, ZERO],
        }
    }

    pub fn down() -> Self {
        Self {
            amplitudes: vec![ZERO, ONE],
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &Self) -> Result<Complex> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self { amplitudes }
    }

    /// `|ψ⟩⟨ψ|`
    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes).expect("same length")
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::new(self.projector()).expect("projector of a unit vector is a valid state")
    }
}

/// Hermitian, unit-trace, positive semidefinite matrix over `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity (1e-10), unit trace (1e-10) and positivity (−1e-9).
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let dim = mat.dim();
        if !dim.is_power_of_two() || dim < 2 {
            return Err(Error::NotQubits(dim));
        }
        let deviation = mat.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let tr = mat.trace();
        if (tr - ONE).norm() > TRACE_TOL {
            return Err(Error::TraceNotOne(tr.re));
        }
        let min = mat.min_eigenvalue_hermitian()?;
        if min < POSITIVITY_TOL {
            return Err(Error::NotPositive(min));
        }
        Ok(Self {
            n_qubits: dim.trailing_zeros() as usize,
            mat,
        })
    }

    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let dim = 1 << n_qubits;
        Self {
            n_qubits,
            mat: &ComplexMatrix::identity(dim) * (1.0 / dim as f64),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex {
        self.mat[(r, c)]
    }

    pub fn expect_qubits(&self, expected: usize) -> Result<()> {
        if self.n_qubits == expected {
            Ok(())
        } else {
            Err(Error::WrongQubitCount {
                expected,
                actual: self.n_qubits,
            })
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            n_qubits: self.n_qubits + other.n_qubits,
            mat: self.mat.tensor(&other.mat),
        }
    }

    /// Convex combination `w·self + (1−w)·other`, `w ∈ [0, 1]`.
    pub fn mix(&self, other: &Self, w: f64) -> Result<Self> {
        if self.mat.dim() != other.mat.dim() {
            return Err(Error::DimensionMismatch {
                left: self.mat.dim(),
                right: other.mat.dim(),
            });
        }
        let w = w.clamp(0.0, 1.0);
        Self::new(&(&self.mat * w) + &(&other.mat * (1.0 - w)))
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.mat
            .eigenvalues_hermitian()
            .expect("validated Hermitian")
    }

    /// `⟨ψ|ρ|ψ⟩`
    pub fn expectation(&self, psi: &PureState) -> Result<f64> {
        let rho_psi = self.mat.apply(psi.amplitudes())?;
        Ok(psi
            .amplitudes()
            .iter()
            .zip(&rho_psi)
            .map(|(a, b)| (a.conj() * b).re)
            .sum())
    }

    /// `Re Tr(ρσ)`; this is the fidelity whenever either state is pure.
    pub fn overlap(&self, other: &Self) -> Result<f64> {
        Ok(self.mat.multiply(&other.mat)?.trace().re)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.mat.approx_eq(&other.mat, tol)
    }
}

/// Uhlmann fidelity of two qubit states, `Tr(ρσ) + 2√(det ρ · det σ)`.
pub fn qubit_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    rho.expect_qubits(1)?;
    sigma.expect_qubits(1)?;
    let det = |m: &ComplexMatrix| (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re.max(0.0);
    let f = rho.overlap(sigma)? + 2.0 * (det(rho.matrix()) * det(sigma.matrix())).sqrt();
    Ok(f.clamp(0.0, 1.0))
}

pub fn bell_state(kind: BellKind) -> PureState {
    let h = Complex::new(FRAC_1_SQRT_2, 0.0);
    // Basis order ↑↑, ↑↓, ↓↑, ↓↓.
    let amplitudes = match kind {
        BellKind::PsiMinus => vec![ZERO, h, -h, ZERO],
        BellKind::PsiPlus => vec![ZERO, h, h, ZERO],
        BellKind::PhiMinus => vec![h, ZERO, ZERO, -h],
        BellKind::PhiPlus => vec![h, ZERO, ZERO, h],
    };
    PureState { amplitudes }
}

/// Single-qubit state with populations `(rho00, 1 − rho00)` and coherence `rho01`.
pub fn input_state(rho00: f64, rho01: Complex) -> Result<DensityMatrix> {
    if !rho00.is_finite() || !(0.0..=1.0).contains(&rho00) {
        return Err(Error::PopulationOutOfRange(rho00));
    }
    let rho01 = complex(rho01.re, rho01.im)?;
    let rho11 = 1.0 - rho00;
    let bound = rho00 * rho11;
    let coherence_sq = rho01.norm_sqr();
    if coherence_sq > bound + EQ_TOL {
        return Err(Error::CoherenceTooLarge {
            coherence_sq,
            bound,
        });
    }
    let mat = ComplexMatrix::from_rows([
        [Complex::new(rho00, 0.0), rho01],
        [rho01.conj(), Complex::new(rho11, 0.0)],
    ])?;
    DensityMatrix::new(mat)
}

/// Two-qubit resource: weight 1/2 on `↑↓` and `↓↑`, coherence `−α/2` between them.
pub fn shared_state(alpha: Alpha) -> DensityMatrix {
    let a = alpha.value();
    let mat = ComplexMatrix::from_real_rows([
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, -a / 2.0, 0.0],
        [0.0, -a / 2.0, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ])
    .expect("finite entries");
    DensityMatrix { n_qubits: 2, mat }
}

/// `R(φ) = exp(iφσx/2) = [[cos(φ/2), i sin(φ/2)], [i sin(φ/2), cos(φ/2)]]`.
pub fn rotation_operator(phi: f64) -> ComplexMatrix {
    let c = Complex::new((phi / 2.0).cos(), 0.0);
    let s = I * (phi / 2.0).sin();
    ComplexMatrix::from_rows([[c, s], [s, c]]).expect("finite angle")
}

/// `R(φ)|↑⟩ = (cos(φ/2), i sin(φ/2))`.
pub fn rotated_input(phi: f64) -> PureState {
    PureState {
        amplitudes: vec![Complex::new((phi / 2.0).cos(), 0.0), I * (phi / 2.0).sin()],
    }
}

/// Von Neumann entropy in nats; zero eigenvalues contribute nothing.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    rho.eigenvalues()
        .into_iter()
        .filter(|&l| l > 0.0)
        .map(|l| -l * l.ln())
        .sum()
}

/// Uniformly distributed point of the Bloch ball.
pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let r = rng.gen::<f64>().cbrt();
    bloch_state(rng, r)
}

/// Uniformly distributed point of the Bloch sphere.
pub fn random_pure_qubit<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    bloch_state(rng, 1.0)
}

fn bloch_state<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> DensityMatrix {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let azimuth = rng.gen_range(0.0..std::f64::consts::TAU);
    let planar = (1.0 - z * z).max(0.0).sqrt();
    let (x, y) = (planar * azimuth.cos(), planar * azimuth.sin());
    let rho00 = (1.0 + radius * z) / 2.0;
    let rho01 = Complex::new(radius * x, -radius * y) / 2.0;
    input_state(rho00, rho01).expect("Bloch ball point is a valid state")
}
