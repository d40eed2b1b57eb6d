//! Reference computations written directly against nalgebra, independent of
//! the library's kernels.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use asymmetry::linalg::ComplexMatrix;

pub type M = DMatrix<Complex64>;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn na(m: &ComplexMatrix) -> M {
    m.inner().clone()
}

pub fn lib(m: &M) -> ComplexMatrix {
    ComplexMatrix::from_inner(m.clone())
}

/// `f(H)` for Hermitian `H`.
pub fn herm_fn(h: &M, f: impl Fn(f64) -> Complex64) -> M {
    let e = h.clone().symmetric_eigen();
    let d = M::from_diagonal(&DVector::from_iterator(e.eigenvalues.len(), e.eigenvalues.iter().map(|&x| f(x))));
    &e.eigenvectors * d * e.eigenvectors.adjoint()
}

/// `ρ^s` on the support, eigenvalues below 1e-12 treated as zero.
pub fn power(rho: &M, s: f64) -> M {
    herm_fn(rho, |x| if x > 1e-12 { c(x.powf(s)) } else { c(0.0) })
}

/// `e^{-iθL}`.
pub fn rotation(l: &M, theta: f64) -> M {
    herm_fn(l, |x| Complex64::from_polar(1.0, -theta * x))
}

/// Trace norm of a Hermitian matrix as the sum of |eigenvalues|.
pub fn trace_norm_herm(h: &M) -> f64 {
    h.clone().symmetric_eigen().eigenvalues.iter().map(|x| x.abs()).sum()
}

/// Trace norm of an arbitrary matrix from its singular values.
pub fn trace_norm(m: &M) -> f64 {
    m.clone().singular_values().iter().sum()
}

pub fn entropy_bits(rho: &M) -> f64 {
    rho.clone().symmetric_eigen().eigenvalues.iter().filter(|&&p| p > 1e-15).map(|&p| -p * p.log2()).sum()
}

/// `⟨ψ|L²|ψ⟩ − ⟨ψ|L|ψ⟩²` from the vector.
pub fn pure_variance(psi: &[Complex64], l: &M) -> f64 {
    let v = DVector::from_column_slice(psi);
    let lv = l * &v;
    let m1 = v.dotc(&lv).re;
    let m2 = lv.dotc(&lv).re;
    m2 - m1 * m1
}

pub fn random_vector<R: Rng>(d: usize, rng: &mut R) -> Vec<Complex64> {
    let v: Vec<Complex64> =
        (0..d).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect();
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / n).collect()
}

/// Normalized `G G†` for a d×k complex Gaussian `G`.
pub fn random_density<R: Rng>(d: usize, k: usize, rng: &mut R) -> M {
    let g = M::from_fn(d, k, |_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    let w = &g * g.adjoint();
    let t = w.trace();
    w / t
}

/// Hermitian `Σ_m m |f_m⟩⟨f_m|` in the Fourier basis `f_m(k) = e^{2πi mk/n}/√n`.
/// The cyclic shift `|k⟩ → |k+1⟩` equals `e^{-2πi L/n}`.
pub fn fourier_generator(n: usize) -> M {
    let f = M::from_fn(n, n, |k, m| {
        Complex64::from_polar(1.0 / (n as f64).sqrt(), 2.0 * std::f64::consts::PI * (m * k) as f64 / n as f64)
    });
    let d = M::from_diagonal(&DVector::from_iterator(n, (0..n).map(|m| c(m as f64))));
    &f * d * f.adjoint()
}

pub fn shift(n: usize) -> M {
    M::from_fn(n, n, |i, j| if i == (j + 1) % n { c(1.0) } else { c(0.0) })
}

pub fn max_abs_diff(a: &M, b: &M) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
