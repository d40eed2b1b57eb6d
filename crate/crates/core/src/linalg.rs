//! Dense complex linear algebra: Hermitian eigendecomposition, spectral
//! matrix functions, norms, entropy and tensor-product structure.
//!
//! Composite systems use the A-major flattening convention throughout: for a
//! product space `H_A ⊗ H_B` the basis index is `i_A * dim_B + i_B`, so the
//! first tensor factor varies slowest. [`kron`] and [`partial_trace`] agree
//! on this convention.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quantum::DensityOperator;

/// Entrywise tolerance used when checking Hermiticity.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigenvalues in `[-PSD_TOL, 0)` are treated as roundoff and clipped to zero.
pub const PSD_TOL: f64 = 1e-10;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// A dense complex matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMatrix{:?}", self.0)
    }
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting non-finite values.
    pub fn new(rows: usize, cols: usize, entries: &[Complex64]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!("matrix dimensions must be positive, got {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(k) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite(k / cols, k % cols));
        }
        Ok(Self(DMatrix::from_row_slice(rows, cols, entries)))
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        let c: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(rows, cols, &c)
    }

    pub fn from_inner(m: DMatrix<Complex64>) -> Self {
        Self(m)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { Complex64::new(diag[i], 0.0) } else { C_ZERO })
    }

    /// Rank-one projector `|v⟩⟨v|` (no normalization is applied).
    pub fn outer(v: &[Complex64]) -> Self {
        let n = v.len();
        Self::from_fn(n, n, |i, j| v[i] * v[j].conj())
    }

    /// Matrix unit `|i⟩⟨j|`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.0[(i, j)] = C_ONE;
        m
    }

    pub fn inner(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn nrows(&self) -> usize {
        self.0.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.0.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.0[(i, j)] = z;
    }

    /// Entries in row-major order.
    pub fn to_row_major(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.nrows() * self.ncols());
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                out.push(self.0[(i, j)]);
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn scale(&self, a: f64) -> Self {
        Self(&self.0 * Complex64::new(a, 0.0))
    }

    pub fn scale_c(&self, a: Complex64) -> Self {
        Self(&self.0 * a)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `⟨A, B⟩ = tr(A† B)`.
    pub fn hs_inner(&self, other: &Self) -> Complex64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0 - &other.0 * &self.0)
    }

    /// Largest entrywise deviation `|H - H†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.nrows();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.0[(i, j)] - self.0[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermiticity_defect() <= tol * self.max_abs().max(1.0)
    }

    /// Largest entrywise deviation of `U†U` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let p = self.0.adjoint() * &self.0;
        let n = self.nrows();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { C_ONE } else { C_ZERO };
                worst = worst.max((p[(i, j)] - target).norm());
            }
        }
        worst
    }

    /// `(H + H†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self((&self.0 + self.0.adjoint()) * Complex64::new(0.5, 0.0))
    }

    /// `U X U†`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        Self(&u.0 * &self.0 * u.0.adjoint())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self - other).frobenius_norm()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{what} requires a square matrix, got {}x{}",
                self.nrows(),
                self.ncols()
            )))
        }
    }

    fn require_hermitian(&self, what: &str) -> Result<()> {
        self.require_square(what)?;
        if self.is_hermitian(HERMITIAN_TOL) {
            Ok(())
        } else {
            Err(Error::NotHermitian(self.hermiticity_defect()))
        }
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

impl<'a> Add<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

/// Spectral decomposition `H = V diag(λ) V†` with ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    /// `V diag(f(λ)) V†`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        self.map_complex(|x| Complex64::new(f(x), 0.0))
    }

    pub fn map_complex(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let v = self.eigenvectors.inner();
        let n = v.nrows();
        let mut scaled = v.clone();
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let fk = f(lambda);
            for i in 0..n {
                scaled[(i, k)] *= fk;
            }
        }
        ComplexMatrix(scaled * v.adjoint())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|x| x)
    }

    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.inner().column(k).iter().copied().collect()
    }
}

/// Eigendecomposition of a Hermitian matrix.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEig> {
    h.require_hermitian("hermitian_eig")?;
    Ok(hermitian_eig_unchecked(&h.hermitian_part()))
}

pub(crate) fn hermitian_eig_unchecked(h: &ComplexMatrix) -> HermitianEig {
    let eig = h.0.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let n = h.nrows();
    let eigenvectors = DMatrix::from_fn(n, n, |i, k| eig.eigenvectors[(i, order[k])]);
    HermitianEig { eigenvalues, eigenvectors: ComplexMatrix(eigenvectors) }
}

/// Eigendecomposition of a positive semidefinite matrix, with eigenvalues in
/// `[-PSD_TOL, 0)` clipped to zero.
pub fn psd_eig(h: &ComplexMatrix) -> Result<HermitianEig> {
    let mut eig = hermitian_eig(h)?;
    if let Some(&min) = eig.eigenvalues.first() {
        if min < -PSD_TOL {
            return Err(Error::NotPsd(min));
        }
    }
    for x in eig.eigenvalues.iter_mut() {
        if *x < 0.0 {
            *x = 0.0;
        }
    }
    Ok(eig)
}

/// `H^s` for positive semidefinite `H` and `s > 0`; zero eigenvalues stay zero.
pub fn matrix_power(h: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    if s.is_nan() || s <= 0.0 || !s.is_finite() {
        return Err(Error::InvalidOrder(s));
    }
    let eig = psd_eig(h)?;
    Ok(eig.map(|x| if x > 0.0 { x.powf(s) } else { 0.0 }))
}

/// `H^s` restricted to the support of `H`: eigenvalues at or below `kernel_tol`
/// map to zero for any real `s` (a pseudo-inverse power for `s < 0`).
pub fn support_power(eig: &HermitianEig, s: f64, kernel_tol: f64) -> ComplexMatrix {
    eig.map(|x| if x > kernel_tol { x.powf(s) } else { 0.0 })
}

/// Sum of singular values.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    m.require_square("trace_norm")?;
    Ok(m.0.clone().singular_values().iter().sum())
}

/// Shannon entropy in bits of a probability vector, with `0 log 0 = 0`.
pub fn shannon_entropy_bits(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum::<f64>().max(0.0)
}

/// Von Neumann entropy `-tr(ρ log₂ ρ)` in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> Result<f64> {
    let eig = psd_eig(rho.matrix()).map_err(|e| Error::InvalidState(e.to_string()))?;
    Ok(shannon_entropy_bits(&eig.eigenvalues))
}

/// Tensor product with the A-major index convention.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix(a.0.kronecker(&b.0))
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    let mut iter = factors.iter();
    let first = iter.next().map(|m| (*m).clone()).unwrap_or_else(|| ComplexMatrix::identity(1));
    iter.fold(first, |acc, m| kron(&acc, m))
}

/// Traces out every subsystem not listed in `keep`. Kept subsystems stay in
/// their original order.
pub fn partial_trace(m: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    m.require_square("partial_trace")?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::DimensionMismatch("subsystem dimensions must be positive".into()));
    }
    let total: usize = dims.iter().product();
    if total != m.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dimensions {dims:?} multiply to {total}, matrix is {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let mut keep_sorted: Vec<usize> = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.iter().any(|&k| k >= dims.len()) {
        return Err(Error::DimensionMismatch(format!(
            "keep indices {keep:?} out of range for {} subsystems",
            dims.len()
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep_sorted.contains(k)).collect();
    let kept_dims: Vec<usize> = keep_sorted.iter().map(|&k| dims[k]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&k| dims[k]).collect();
    let out_dim: usize = kept_dims.iter().product();
    let env_dim: usize = traced_dims.iter().product();

    // Row-major strides for the full index.
    let mut strides = vec![1usize; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * dims[k + 1];
    }
    let compose = |kept_idx: usize, env_idx: usize| -> usize {
        let mut full = 0;
        let mut rem = kept_idx;
        for (pos, &k) in keep_sorted.iter().enumerate().rev() {
            let d = kept_dims[pos];
            full += (rem % d) * strides[k];
            rem /= d;
        }
        let mut rem = env_idx;
        for (pos, &k) in traced.iter().enumerate().rev() {
            let d = traced_dims[pos];
            full += (rem % d) * strides[k];
            rem /= d;
        }
        full
    };

    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for i in 0..out_dim {
        for j in 0..out_dim {
            let mut acc = C_ZERO;
            for e in 0..env_dim {
                acc += m.0[(compose(i, e), compose(j, e))];
            }
            out.0[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// `exp(-iθL)` for Hermitian `L`.
pub fn unitary_from_generator(l: &ComplexMatrix, theta: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(l)?;
    Ok(eig.map_complex(|x| Complex64::from_polar(1.0, -theta * x)))
}
