//! Seeded random ensembles of matrices, states and unitaries.
//!
//! Pure states are drawn from the unitarily invariant measure (normalized
//! complex Gaussian vectors). Mixed states are reduced states of random
//! bipartite pure states; choosing an ancilla smaller than the system yields
//! rank-deficient states.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{partial_trace, ComplexMatrix};
use crate::quantum::DensityOperator;

/// Fraction of [`random_state`] draws that are rank deficient.
pub const RANK_DEFICIENT_FRACTION: f64 = 0.1;

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Matrix with i.i.d. standard complex Gaussian entries.
pub fn random_ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    let entries: Vec<Complex64> = (0..rows * cols).map(|_| gaussian(rng)).collect();
    ComplexMatrix::new(rows, cols, &entries).expect("gaussian entries are finite")
}

/// Hermitian part of a Ginibre matrix.
pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    random_ginibre(d, d, rng).hermitian_part()
}

/// Haar-random unitary via phase-corrected QR.
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let qr = random_ginibre(d, d, rng).into_inner().qr();
    let (mut q, r) = qr.unpack();
    for k in 0..d {
        let rkk = r[(k, k)];
        let phase = if rkk.norm() > 0.0 { rkk / rkk.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..d {
            q[(i, k)] *= phase;
        }
    }
    ComplexMatrix::from_inner(q)
}

/// Normalized complex Gaussian vector.
pub fn random_pure_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..d).map(|_| gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_pure_state<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DensityOperator {
    DensityOperator::pure(&random_pure_vector(d, rng)).expect("normalized vector")
}

/// Reduced state of a random pure state on `d ⊗ ancilla`; rank ≤ `ancilla`.
pub fn random_mixed_state<R: Rng + ?Sized>(d: usize, ancilla: usize, rng: &mut R) -> DensityOperator {
    let psi = random_pure_vector(d * ancilla, rng);
    let joint = ComplexMatrix::outer(&psi);
    let reduced = partial_trace(&joint, &[d, ancilla], &[0]).expect("dims are consistent");
    DensityOperator::new(reduced.hermitian_part()).expect("reduced states are valid")
}

/// Mixed state with an equal-dimension ancilla, except that a
/// [`RANK_DEFICIENT_FRACTION`] of draws use a smaller ancilla.
pub fn random_state<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DensityOperator {
    if d > 1 && rng.random::<f64>() < RANK_DEFICIENT_FRACTION {
        let rank = rng.random_range(1..d);
        random_mixed_state(d, rank, rng)
    } else {
        random_mixed_state(d, d, rng)
    }
}
