//! Dense complex linear algebra used by every other module: matrix storage,
//! Hermitian eigendecomposition, QR with the Haar phase convention, and the
//! partial trace over the second factor of a bipartite state.

mod eig;
mod qr;

pub use eig::eig_hermitian;
pub use qr::qr_unitary_factor;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense complex matrix, row-major.
///
/// Row-major layout is also the documented convention for vectorising
/// bipartite states: the basis ket |i>|j> maps to index `i * n + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimMismatch { expected: rows * cols, got: data.len() });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidArgument { what: "non-finite matrix entry".into() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Real diagonal matrix.
    pub fn from_real_diag(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = Complex::new(d, T::zero());
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    #[inline]
    pub(crate) fn data_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j].conj();
            }
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = Self::zeros(m, n);
        for i in 0..m {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for p in 0..k {
                let a = self.data[i * k + p];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                let b_row = &other.data[p * n..(p + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o = *o + a * b;
                }
            }
        }
        out
    }

    /// Gram matrix `self * self^dagger` (Hermitian by construction; the
    /// diagonal is forced exactly real).
    pub fn gram(&self) -> Self {
        let (m, k) = (self.rows, self.cols);
        let mut out = Self::zeros(m, m);
        for i in 0..m {
            let row_i = &self.data[i * k..(i + 1) * k];
            for j in i..m {
                let row_j = &self.data[j * k..(j + 1) * k];
                let mut acc = Complex::new(T::zero(), T::zero());
                for (&a, &b) in row_i.iter().zip(row_j) {
                    acc = acc + a * b.conj();
                }
                if i == j {
                    acc.im = T::zero();
                }
                out.data[i * m + j] = acc;
                out.data[j * m + i] = acc.conj();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, factor: T) -> Self {
        let data = self.data.iter().map(|&a| a * factor).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Complex<T> {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.data[i * self.cols + i]).fold(
            Complex::new(T::zero(), T::zero()),
            |acc, z| acc + z,
        )
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn max_abs_entry(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Largest entrywise deviation from Hermiticity, max |M[i][j] - conj(M[j][i])|.
    pub fn hermiticity_deviation(&self) -> T {
        debug_assert!(self.is_square());
        let n = self.rows;
        let mut dev = T::zero();
        for i in 0..n {
            for j in i..n {
                let d = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// Conjugation `U * self * U^dagger`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.adjoint())
    }

    /// Largest entrywise |self - other|.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }
}

/// Hermiticity tolerance used for validation: `1e-10 * (1 + max entry magnitude)`.
fn hermitian_tolerance<T: Scalar>(m: &ComplexMatrix<T>) -> T {
    T::val(1e-10) * (T::one() + m.max_abs_entry())
}

/// Positive, unit-trace Hermitian matrix: a quantum state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validating constructor: checks Hermiticity, unit trace, and that the
    /// spectrum sits above the -1e-10 clamping window.
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        let dev = matrix.hermiticity_deviation();
        if dev > hermitian_tolerance(&matrix) {
            return Err(Error::NonHermitian { deviation: dev.as_f64() });
        }
        let tr = matrix.trace();
        if (tr.re - T::one()).abs() > T::val(1e-12) || tr.im.abs() > T::val(1e-12) {
            return Err(Error::InvalidTrace { trace: tr.re.as_f64() });
        }
        let state = Self { matrix };
        // Positivity check rides on the clamping rule in `spectrum`.
        state.spectrum(false)?;
        Ok(state)
    }

    /// Constructor for matrices that are positive by construction
    /// (normalised Gram matrices from the samplers). Skips the
    /// eigendecomposition; the cheap invariants are still debug-asserted.
    pub(crate) fn from_normalized_gram(matrix: ComplexMatrix<T>) -> Self {
        debug_assert!(matrix.is_square());
        debug_assert!(
            (matrix.trace().re - T::one()).abs() <= T::val(1e-10),
            "trace must be 1 after normalisation"
        );
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    /// Eigendecomposition of the state.
    ///
    /// Eigenvalues in `[-1e-10, 0)` are floating-point noise and are clamped
    /// to 0, then the spectrum is renormalised to sum 1; anything more
    /// negative is a genuine bug and raises `NegativeEigenvalue`.
    pub fn spectrum(&self, want_vectors: bool) -> Result<Spectrum<T>> {
        let raw = eig_hermitian(&self.matrix, want_vectors)?;
        let clamp = T::val(-1e-10);
        let mut values = raw.values;
        for v in &mut values {
            if *v < T::zero() {
                if *v < clamp {
                    return Err(Error::NegativeEigenvalue { value: v.as_f64() });
                }
                *v = T::zero();
            }
        }
        let sum: T = values.iter().copied().sum();
        if sum <= T::zero() {
            return Err(Error::InvalidTrace { trace: sum.as_f64() });
        }
        for v in &mut values {
            *v = *v / sum;
        }
        Ok(Spectrum { values, vectors: raw.vectors })
    }

    /// Conjugated state `u * rho * u^dagger`.
    pub fn conjugate_by(&self, u: &ComplexMatrix<T>) -> Self {
        Self { matrix: self.matrix.conjugate_by(u) }
    }
}

/// Sorted real eigenvalues, with the eigenvector unitary when requested.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    vectors: Option<ComplexMatrix<T>>,
}

impl<T: Scalar> Spectrum<T> {
    pub(crate) fn from_parts(values: Vec<T>, vectors: Option<ComplexMatrix<T>>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]), "eigenvalues must be ascending");
        Self { values, vectors }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Eigenvalues, ascending.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Column `k` of the eigenvector matrix pairs with `values()[k]`.
    pub fn vectors(&self) -> Option<&ComplexMatrix<T>> {
        self.vectors.as_ref()
    }

    pub fn min(&self) -> T {
        self.values[0]
    }

    pub fn max(&self) -> T {
        *self.values.last().expect("non-empty spectrum")
    }

    /// Rebuild `V diag(lambda) V^dagger`; requires eigenvectors.
    pub fn reconstruct(&self) -> Option<ComplexMatrix<T>> {
        let v = self.vectors.as_ref()?;
        let d = ComplexMatrix::from_real_diag(&self.values);
        Some(v.mul(&d).mul(&v.adjoint()))
    }
}

/// Partial trace over the second factor of a bipartite pure state.
///
/// `psi` lives on H (x) H with the row-major convention |i>|j> -> `i*n + j`;
/// the result is `rho[i][j] = sum_k psi[i*n+k] conj(psi[j*n+k])`, the reduced
/// state on the first factor. `psi` must be normalised (then the output has
/// unit trace) and of length `dim_a^2`.
pub fn partial_trace_second<T: Scalar>(
    psi: &[Complex<T>],
    dim_a: usize,
) -> Result<DensityMatrix<T>> {
    if psi.len() != dim_a * dim_a {
        return Err(Error::BadLength { len: psi.len(), expected: dim_a * dim_a });
    }
    let n = dim_a;
    let mut rho = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        let row_i = &psi[i * n..(i + 1) * n];
        for j in i..n {
            let row_j = &psi[j * n..(j + 1) * n];
            let mut acc = Complex::new(T::zero(), T::zero());
            for (&a, &b) in row_i.iter().zip(row_j) {
                acc = acc + a * b.conj();
            }
            if i == j {
                acc.im = T::zero();
            }
            rho.set(i, j, acc);
            rho.set(j, i, acc.conj());
        }
    }
    Ok(DensityMatrix::from_normalized_gram(rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn product_state_reduces_to_pure() {
        // |0>|0> at n = 2
        let psi = vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let rho = partial_trace_second(&psi, 2).unwrap();
        assert_eq!(rho.matrix().get(0, 0), c(1.0, 0.0));
        assert_eq!(rho.matrix().get(1, 1), c(0.0, 0.0));
        assert_eq!(rho.matrix().get(0, 1), c(0.0, 0.0));
    }

    #[test]
    fn bell_state_reduces_to_maximally_mixed() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)];
        let rho = partial_trace_second(&psi, 2).unwrap();
        assert!((rho.matrix().get(0, 0).re - 0.5).abs() < 1e-15);
        assert!((rho.matrix().get(1, 1).re - 0.5).abs() < 1e-15);
        assert!(rho.matrix().get(0, 1).norm() < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_bad_length() {
        let psi = vec![c(1.0, 0.0); 5];
        assert!(matches!(
            partial_trace_second(&psi, 2),
            Err(Error::BadLength { len: 5, expected: 4 })
        ));
    }

    #[test]
    fn partial_trace_matches_row_gram() {
        // psi = vec(X) for a normalised lower-triangular X gives XX^dag / tr.
        let x = ComplexMatrix::new(
            3,
            3,
            vec![
                c(0.5, 0.1),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(-0.3, 0.2),
                c(0.4, -0.6),
                c(0.0, 0.0),
                c(0.1, 0.0),
                c(0.2, 0.3),
                c(0.25, -0.15),
            ],
        )
        .unwrap();
        let norm = x.frobenius_norm();
        let psi: Vec<Complex64> = x.data().iter().map(|&z| z / norm).collect();
        let rho = partial_trace_second(&psi, 3).unwrap();
        let gram = x.gram().scale(1.0 / (norm * norm));
        assert!(rho.matrix().max_abs_diff(&gram) < 1e-14);
    }

    #[test]
    fn density_matrix_validation_catches_bad_trace() {
        let m = ComplexMatrix::from_real_diag(&[0.7, 0.7]);
        assert!(matches!(DensityMatrix::new(m), Err(Error::InvalidTrace { .. })));
    }

    #[test]
    fn density_matrix_clamps_fp_noise() {
        let m = ComplexMatrix::from_real_diag(&[1.0 + 5e-11, -5e-11]);
        let rho = DensityMatrix::new(m).unwrap();
        let spec = rho.spectrum(false).unwrap();
        assert_eq!(spec.values()[0], 0.0);
        assert!((spec.values()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn density_matrix_rejects_genuinely_negative() {
        let m = ComplexMatrix::from_real_diag(&[1.001, -0.001]);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NegativeEigenvalue { .. })));
    }
}
