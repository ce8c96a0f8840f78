//! Small dense complex matrices (dimension 2, 4 or 8 in practice).
//!
//! Storage is row-major. For tensor products and partial traces, subsystem 0
//! is the leftmost factor and the most significant digit of a basis index, so
//! two qubits are ordered `↑↑, ↑↓, ↓↑, ↓↓`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

/// Max-entry deviation from Hermiticity accepted by the eigenvalue routines.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Default entrywise equality tolerance.
pub const EQ_TOL: f64 = 1e-12;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// Builds a complex number, rejecting NaN and infinite parts.
pub fn complex(re: f64, im: f64) -> Result<Complex> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex::new(re, im))
    } else {
        Err(Error::NonFinite("complex number"))
    }
}

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Wraps a row-major entry array; its length must be a nonzero perfect square.
    pub fn from_vec(data: Vec<Complex>) -> Result<Self> {
        let len = data.len();
        let dim = (len as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != len {
            return Err(Error::BadShape { dim, len });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows<const N: usize>(rows: [[Complex; N]; N]) -> Result<Self> {
        Self::from_vec(rows.into_iter().flatten().collect())
    }

    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Result<Self> {
        Self::from_vec(
            rows.into_iter()
                .flatten()
                .map(|x| Complex::new(x, 0.0))
                .collect(),
        )
    }

    pub fn diagonal(entries: &[Complex]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    /// `|a⟩⟨b|`
    pub fn outer(a: &[Complex], b: &[Complex]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        let dim = a.len();
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = a[r] * b[c].conj();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                for (o, &b) in out.data[r * n..(r + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Complex]) -> Result<Vec<Complex>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok(self
            .data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`; `self` supplies the high-order index digit.
    pub fn tensor(&self, other: &Self) -> Self {
        let (na, nb) = (self.dim, other.dim);
        let mut out = Self::zeros(na * nb);
        for ra in 0..na {
            for ca in 0..na {
                let a = self[(ra, ca)];
                if a == ZERO {
                    continue;
                }
                for rb in 0..nb {
                    for cb in 0..nb {
                        out[(ra * nb + rb, ca * nb + cb)] = a * other[(rb, cb)];
                    }
                }
            }
        }
        out
    }

    /// `U · self · U†`
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        u.multiply(self)?.multiply(&u.adjoint())
    }

    pub fn trace(&self) -> Complex {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, k: Complex) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * k).collect(),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= tol)
    }

    /// Largest entrywise deviation between `self` and `self†`.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for r in 0..n {
            for c in r..n {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Reduced matrix over the subsystems listed in `keep`.
    ///
    /// `dims` gives the dimension of each subsystem, most significant first.
    /// The kept subsystems appear in the result in ascending index order.
    pub fn partial_trace(&self, keep: &[usize], dims: &[usize]) -> Result<Self> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || total != self.dim || dims.contains(&0) {
            return Err(Error::InvalidSubsystems {
                dims: dims.to_vec(),
                dim: self.dim,
            });
        }
        if keep.is_empty() {
            return Err(Error::EmptyKeep);
        }
        if let Some(&index) = keep.iter().find(|&&k| k >= dims.len()) {
            return Err(Error::SubsystemOutOfRange {
                index,
                count: dims.len(),
            });
        }
        let kept: Vec<bool> = (0..dims.len()).map(|s| keep.contains(&s)).collect();
        let out_dim: usize = dims
            .iter()
            .zip(&kept)
            .filter(|(_, &k)| k)
            .map(|(d, _)| d)
            .product();

        // Split a full index into (kept index, traced index).
        let split = |mut idx: usize| {
            let (mut k_idx, mut k_w, mut t_idx, mut t_w) = (0, 1, 0, 1);
            for s in (0..dims.len()).rev() {
                let digit = idx % dims[s];
                idx /= dims[s];
                if kept[s] {
                    k_idx += digit * k_w;
                    k_w *= dims[s];
                } else {
                    t_idx += digit * t_w;
                    t_w *= dims[s];
                }
            }
            (k_idx, t_idx)
        };
        let parts: Vec<(usize, usize)> = (0..self.dim).map(split).collect();

        let mut out = Self::zeros(out_dim);
        for (r, &(kr, tr)) in parts.iter().enumerate() {
            for (c, &(kc, tc)) in parts.iter().enumerate() {
                if tr == tc {
                    out[(kr, kc)] += self[(r, c)];
                }
            }
        }
        Ok(out)
    }

    /// All eigenvalues of a Hermitian matrix, ascending.
    ///
    /// The n×n Hermitian `A = X + iY` is embedded as the real symmetric
    /// `[[X, -Y], [Y, X]]`, whose spectrum is that of `A` with every eigenvalue
    /// doubled. The embedding is diagonalised by cyclic Jacobi rotations and
    /// every second eigenvalue is kept.
    pub fn eigenvalues_hermitian(&self) -> Result<Vec<f64>> {
        let deviation = self.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let n = self.dim;
        let m = 2 * n;
        let mut a = vec![0.0; m * m];
        for r in 0..n {
            for c in 0..n {
                // Symmetrise so the embedding is exactly symmetric.
                let z = (self[(r, c)] + self[(c, r)].conj()) * 0.5;
                a[r * m + c] = z.re;
                a[(r + n) * m + (c + n)] = z.re;
                a[r * m + (c + n)] = -z.im;
                a[(r + n) * m + c] = z.im;
            }
        }
        let mut eig = jacobi_eigenvalues(&mut a, m);
        eig.sort_by(f64::total_cmp);
        Ok(eig.into_iter().step_by(2).collect())
    }

    /// Smallest eigenvalue of a Hermitian matrix (see [`Self::eigenvalues_hermitian`]).
    pub fn min_eigenvalue_hermitian(&self) -> Result<f64> {
        Ok(self.eigenvalues_hermitian()?[0])
    }
}

/// Cyclic Jacobi on a real symmetric `m×m` row-major matrix; destroys `a`.
fn jacobi_eigenvalues(a: &mut [f64], m: usize) -> Vec<f64> {
    const MAX_SWEEPS: usize = 64;
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..m)
            .flat_map(|p| (0..m).filter(move |&q| q != p).map(move |q| (p, q)))
            .map(|(p, q)| a[p * m + q] * a[p * m + q])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..m {
            for q in (p + 1)..m {
                let apq = a[p * m + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[p * m + p];
                let aqq = a[q * m + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..m).map(|i| a[i * m + i]).collect()
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;

    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        assert!(r < self.dim && c < self.dim, "index ({r}, {c}) out of range");
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        assert!(r < self.dim && c < self.dim, "index ({r}, {c}) out of range");
        &mut self.data[r * self.dim + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in addition");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in subtraction");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, k: f64) -> ComplexMatrix {
        self.scale(Complex::new(k, 0.0))
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for row in self.data.chunks_exact(self.dim) {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.6}{:+.6}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Pauli X.
pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows([[0.0, 1.0], [1.0, 0.0]]).expect("finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
        let data = (0..dim * dim)
            .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        ComplexMatrix::from_vec(data).unwrap()
    }

    fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
        let a = random_matrix(rng, dim);
        &(&a + &a.adjoint()) * 0.5
    }

    #[allow(clippy::needless_range_loop)]
    fn naive_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Vec<Vec<Complex>> {
        let n = a.dim();
        let mut out = vec![vec![ZERO; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += a.as_slice()[i * n + k] * b.as_slice()[k * n + j];
                }
                out[i][j] = acc;
            }
        }
        out
    }

    fn phi_psi_minus() -> ComplexMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = [ZERO, Complex::new(h, 0.0), Complex::new(-h, 0.0), ZERO];
        ComplexMatrix::outer(&v, &v).unwrap()
    }

    #[test]
    fn complex_rejects_non_finite() {
        assert!(complex(f64::NAN, 0.0).is_err());
        assert!(complex(0.0, f64::INFINITY).is_err());
        assert_eq!(complex(1.0, -2.0).unwrap(), Complex::new(1.0, -2.0));
    }

    #[test]
    fn from_vec_rejects_bad_input() {
        assert!(matches!(
            ComplexMatrix::from_vec(vec![ZERO; 3]),
            Err(Error::BadShape { .. })
        ));
        assert!(ComplexMatrix::from_vec(vec![]).is_err());
        assert!(matches!(
            ComplexMatrix::from_vec(vec![Complex::new(f64::NAN, 0.0); 4]),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn multiply_identity_and_pauli() {
        let x = sigma_x();
        assert_eq!(ComplexMatrix::identity(2).multiply(&x).unwrap(), x);
        assert_eq!(x.multiply(&x).unwrap(), ComplexMatrix::identity(2));
    }

    #[test]
    fn multiply_rejects_mismatch() {
        let err = ComplexMatrix::identity(2)
            .multiply(&ComplexMatrix::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 4 });
    }

    #[test]
    fn multiply_matches_naive_loops() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for dim in [4, 8] {
            let a = random_matrix(&mut rng, dim);
            let b = random_matrix(&mut rng, dim);
            let got = a.multiply(&b).unwrap();
            let want = naive_product(&a, &b);
            for r in 0..dim {
                for c in 0..dim {
                    assert!((got[(r, c)] - want[r][c]).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn adjoint_examples() {
        let d = ComplexMatrix::from_real_rows([[1.0, 0.0], [0.0, -1.0]]).unwrap();
        assert_eq!(d.adjoint(), d);
        let y = ComplexMatrix::from_rows([[ZERO, I], [-I, ZERO]]).unwrap();
        assert_eq!(y.adjoint(), y);

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(&mut rng, 4);
        let adj = a.adjoint();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(adj[(r, c)], a[(c, r)].conj());
            }
        }
        assert_eq!(adj.adjoint(), a);
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            ComplexMatrix::identity(2).tensor(&ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4)
        );
        let up = ComplexMatrix::diagonal(&[ONE, ZERO]);
        let down = ComplexMatrix::diagonal(&[ZERO, ONE]);
        assert_eq!(
            up.tensor(&down),
            ComplexMatrix::diagonal(&[ZERO, ONE, ZERO, ZERO])
        );
    }

    #[test]
    fn tensor_matches_four_index_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 2);
        let b = random_matrix(&mut rng, 4);
        let k = a.tensor(&b);
        assert_eq!(k.dim(), 8);
        for ra in 0..2 {
            for ca in 0..2 {
                for rb in 0..4 {
                    for cb in 0..4 {
                        let want = a.as_slice()[ra * 2 + ca] * b.as_slice()[rb * 4 + cb];
                        let got = k.as_slice()[(ra * 4 + rb) * 8 + (ca * 4 + cb)];
                        assert_eq!(got, want);
                    }
                }
            }
        }
    }

    #[test]
    fn partial_trace_of_product_recovers_factor() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let rho = random_hermitian(&mut rng, 2);
        let sigma = ComplexMatrix::diagonal(&[Complex::new(0.3, 0.0), Complex::new(0.7, 0.0)]);
        let reduced = rho.tensor(&sigma).partial_trace(&[0], &[2, 2]).unwrap();
        assert!(reduced.approx_eq(&rho, 1e-14));
    }

    #[test]
    fn partial_trace_of_singlet_is_maximally_mixed() {
        let reduced = phi_psi_minus().partial_trace(&[1], &[2, 2]).unwrap();
        assert!(reduced.approx_eq(&(&ComplexMatrix::identity(2) * 0.5), 1e-15));
    }

    #[test]
    fn partial_trace_matches_index_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = random_matrix(&mut rng, 8);
        let got = a.partial_trace(&[2], &[2, 2, 2]).unwrap();
        // Direct sum over the traced digits of subsystems 0 and 1.
        for r in 0..2 {
            for c in 0..2 {
                let mut acc = ZERO;
                for i in 0..2 {
                    for j in 0..2 {
                        let row = i * 4 + j * 2 + r;
                        let col = i * 4 + j * 2 + c;
                        acc += a.as_slice()[row * 8 + col];
                    }
                }
                assert!((got[(r, c)] - acc).norm() < 1e-15);
            }
        }
        // Keeping subsystem 1 alone: traced digits are 0 and 2.
        let mid = a.partial_trace(&[1], &[2, 2, 2]).unwrap();
        for r in 0..2 {
            for c in 0..2 {
                let mut acc = ZERO;
                for i in 0..2 {
                    for k in 0..2 {
                        acc += a.as_slice()[(i * 4 + r * 2 + k) * 8 + (i * 4 + c * 2 + k)];
                    }
                }
                assert!((mid[(r, c)] - acc).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn partial_trace_errors() {
        let a = ComplexMatrix::identity(8);
        assert_eq!(a.partial_trace(&[], &[2, 2, 2]).unwrap_err(), Error::EmptyKeep);
        assert!(matches!(
            a.partial_trace(&[0], &[2, 2]),
            Err(Error::InvalidSubsystems { .. })
        ));
        assert!(matches!(
            a.partial_trace(&[3], &[2, 2, 2]),
            Err(Error::SubsystemOutOfRange { index: 3, count: 3 })
        ));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(ComplexMatrix::identity(4).trace(), Complex::new(4.0, 0.0));
        assert!((phi_psi_minus().trace() - ONE).norm() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_matrix(&mut rng, 4);
        let b = random_matrix(&mut rng, 4);
        let ab = a.multiply(&b).unwrap().trace();
        let ba = b.multiply(&a).unwrap().trace();
        assert!((ab - ba).norm() < 1e-13);
    }

    #[test]
    fn min_eigenvalue_examples() {
        let half = &ComplexMatrix::identity(2) * 0.5;
        assert!((half.min_eigenvalue_hermitian().unwrap() - 0.5).abs() < 1e-12);
        assert!(phi_psi_minus().min_eigenvalue_hermitian().unwrap().abs() < 1e-12);
    }

    /// Power iteration on `cI − A` converges to `c − λ_min`.
    fn power_iteration_min(a: &ComplexMatrix) -> f64 {
        let n = a.dim();
        // Gershgorin bound keeps cI − A positive semidefinite.
        let shift = a
            .as_slice()
            .chunks_exact(n)
            .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max);
        let b = &(&ComplexMatrix::identity(n) * shift) - a;
        let mut v: Vec<Complex> = (0..n).map(|i| Complex::new(1.0 + i as f64 * 0.1, 0.3)).collect();
        let mut lambda = 0.0;
        for _ in 0..20000 {
            let w = b.apply(&v).unwrap();
            let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            lambda = v.iter().zip(&w).map(|(x, y)| (x.conj() * y).re).sum::<f64>()
                / v.iter().map(|z| z.norm_sqr()).sum::<f64>();
            v = w.into_iter().map(|z| z / norm).collect();
        }
        shift - lambda
    }

    #[test]
    fn min_eigenvalue_of_half_dephased_singlet() {
        let alpha = 0.5;
        let shared = ComplexMatrix::from_real_rows([
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.5, -alpha / 2.0, 0.0],
            [0.0, -alpha / 2.0, 0.5, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        let oracle = power_iteration_min(&shared);
        assert!(oracle.abs() < 1e-9);
        let got = shared.min_eigenvalue_hermitian().unwrap();
        assert!((got - oracle).abs() < 1e-9);
        let all = shared.eigenvalues_hermitian().unwrap();
        let want = [0.0, 0.0, 0.25, 0.75];
        for (g, w) in all.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "{all:?}");
        }
    }

    #[test]
    fn eigenvalues_of_complex_hermitian_match_power_iteration() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for dim in [2, 4, 8] {
            let a = random_hermitian(&mut rng, dim);
            let got = a.min_eigenvalue_hermitian().unwrap();
            assert!((got - power_iteration_min(&a)).abs() < 1e-9, "dim {dim}");
            let sum: f64 = a.eigenvalues_hermitian().unwrap().iter().sum();
            assert!((sum - a.trace().re).abs() < 1e-12);
        }
    }

    #[test]
    fn min_eigenvalue_rejects_non_hermitian() {
        let a = ComplexMatrix::from_real_rows([[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(matches!(
            a.min_eigenvalue_hermitian(),
            Err(Error::NotHermitian { .. })
        ));
    }
}
