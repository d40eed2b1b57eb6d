//! Asymmetry measures: Noether moments, characteristic functions, the Holevo
//! asymmetry, the commutator and trace-distance measures, relative Rényi
//! divergences and Wigner–Yanase–Dyson skew information.
//!
//! Logarithms are base 2 throughout.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::groups::{GroupDensity, GroupElement, Representation};
use crate::linalg::{self, ComplexMatrix};
use crate::quantum::{DensityOperator, Twirl};

/// Values down to this are treated as roundoff and reported as zero.
pub const NEGATIVITY_GUARD: f64 = 1e-9;

/// Eigenvalues below this are exact zeros in fractional powers.
pub const KERNEL_TOL: f64 = 1e-12;

/// Moments are real up to this imaginary residue.
pub const MOMENT_IMAG_TOL: f64 = 1e-10;

pub const MAX_MOMENT_ORDER: usize = 12;

/// Below this skew information the phase is unobservable.
pub const ZERO_ASYMMETRY_TOL: f64 = 1e-12;

/// Value of a measure: a scalar, a real sequence or a complex sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MeasureValue {
    Scalar(#[serde(with = "crate::real")] f64),
    Real(#[serde(with = "crate::real::vec")] Vec<f64>),
    Complex(#[serde(with = "crate::real::complex_vec")] Vec<Complex64>),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MeasureParameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::real::option")]
    pub s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
}

/// A computed measure with the digests of its matrix inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureResult {
    pub name: String,
    pub value: MeasureValue,
    pub inputs_digest: String,
    pub parameters: MeasureParameters,
    #[serde(with = "crate::real")]
    pub tolerance: f64,
}

impl MeasureResult {
    pub fn new(
        name: impl Into<String>,
        value: MeasureValue,
        inputs: &[&ComplexMatrix],
        parameters: MeasureParameters,
    ) -> Self {
        Self { name: name.into(), value, inputs_digest: digest(inputs), parameters, tolerance: NEGATIVITY_GUARD }
    }
}

/// SHA-256 over the shapes and little-endian row-major entries.
pub fn digest(inputs: &[&ComplexMatrix]) -> String {
    let mut h = Sha256::new();
    for m in inputs {
        h.update((m.nrows() as u64).to_le_bytes());
        h.update((m.ncols() as u64).to_le_bytes());
        for z in m.to_row_major() {
            h.update(z.re.to_le_bytes());
            h.update(z.im.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

fn require_generator(rho: &DensityOperator, l: &ComplexMatrix) -> Result<()> {
    if !l.is_square() || l.nrows() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "generator is {}x{}, state dimension {}",
            l.nrows(),
            l.ncols(),
            rho.dim()
        )));
    }
    let defect = l.hermiticity_defect();
    if !l.is_hermitian(linalg::HERMITIAN_TOL) {
        return Err(Error::NotHermitian(defect));
    }
    Ok(())
}

fn require_rep(rho: &DensityOperator, rep: &Representation) -> Result<()> {
    if rep.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "representation dimension {}, state dimension {}",
            rep.dim(),
            rho.dim()
        )));
    }
    Ok(())
}

fn guard_nonnegative(v: f64, what: &str) -> Result<f64> {
    if v < -NEGATIVITY_GUARD {
        Err(Error::Numerical(format!("{what} came out negative ({v:e})")))
    } else {
        Ok(v.max(0.0))
    }
}

/// `tr(ρ U(g))` for each element.
pub fn characteristic_function(
    rho: &DensityOperator,
    rep: &Representation,
    elements: &[GroupElement],
) -> Result<Vec<Complex64>> {
    require_rep(rho, rep)?;
    elements.iter().map(|g| Ok(rho.matrix().hs_inner(&rep.unitary(g)?))).collect()
}

/// `tr(ρ L^k)` for `k = 1..=k_max`.
pub fn noether_moments(rho: &DensityOperator, l: &ComplexMatrix, k_max: usize) -> Result<Vec<f64>> {
    require_generator(rho, l)?;
    if k_max == 0 || k_max > MAX_MOMENT_ORDER {
        return Err(Error::InvalidArgument(format!("moment order must be in 1..={MAX_MOMENT_ORDER}, got {k_max}")));
    }
    let mut out = Vec::with_capacity(k_max);
    let mut acc = rho.matrix().clone();
    for k in 1..=k_max {
        acc = &acc * l;
        let t = acc.trace();
        if t.im.abs() > MOMENT_IMAG_TOL * t.re.abs().max(1.0) {
            return Err(Error::Numerical(format!("moment {k} has imaginary part {:e}", t.im)));
        }
        out.push(t.re);
    }
    Ok(out)
}

/// `Var_ρ(L) = tr(ρL²) − tr(ρL)²`.
pub fn variance(rho: &DensityOperator, l: &ComplexMatrix) -> Result<f64> {
    let m = noether_moments(rho, l, 2)?;
    Ok(m[1] - m[0] * m[0])
}

/// `Γ_p(ρ) = S(𝒢_p(ρ)) − S(ρ)` in bits.
pub fn holevo_asymmetry(rho: &DensityOperator, rep: &Representation, density: &GroupDensity) -> Result<f64> {
    require_rep(rho, rep)?;
    holevo_asymmetry_with(rho, &Twirl::new(rep, density)?)
}

/// [`holevo_asymmetry`] with a prepared twirl.
pub fn holevo_asymmetry_with(rho: &DensityOperator, twirl: &Twirl) -> Result<f64> {
    let twirled = twirl.apply(rho)?;
    let v = linalg::von_neumann_entropy(&twirled)? - linalg::von_neumann_entropy(rho)?;
    guard_nonnegative(v, "Holevo asymmetry")
}

/// `F_L(ρ) = ‖[ρ, L]‖₁`.
pub fn commutator_asymmetry(rho: &DensityOperator, l: &ComplexMatrix) -> Result<f64> {
    require_generator(rho, l)?;
    let v = linalg::trace_norm(&rho.matrix().commutator(l))?;
    guard_nonnegative(v, "commutator asymmetry")
}

/// `F_g(ρ) = ‖ρ − U(g) ρ U(g)†‖₁`.
pub fn trace_distance_asymmetry(rho: &DensityOperator, rep: &Representation, g: &GroupElement) -> Result<f64> {
    require_rep(rho, rep)?;
    trace_distance_asymmetry_unitary(rho, &rep.unitary(g)?)
}

pub fn trace_distance_asymmetry_unitary(rho: &DensityOperator, u: &ComplexMatrix) -> Result<f64> {
    let diff = rho.matrix() - &rho.matrix().conjugate_by(u);
    guard_nonnegative(linalg::trace_norm(&diff)?, "trace-distance asymmetry")
}

fn check_order(s: f64) -> Result<()> {
    if !s.is_finite() || s <= 0.0 || s == 1.0 {
        Err(Error::InvalidOrder(s))
    } else {
        Ok(())
    }
}

/// Relative Rényi divergence `D_s = log₂ tr(ρ₁^s ρ₂^{1−s}) / (s − 1)`.
///
/// Returns `+∞` when `s > 1` and the support of `ρ₁` leaves that of `ρ₂`,
/// or when the supports are orthogonal.
pub fn renyi_divergence(rho1: &DensityOperator, rho2: &DensityOperator, s: f64) -> Result<f64> {
    check_order(s)?;
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch(format!("states of dimension {} and {}", rho1.dim(), rho2.dim())));
    }
    let e1 = rho1.eig();
    let e2 = rho2.eig();
    let a = e1.map(|x| if x > KERNEL_TOL { x.powf(s) } else { 0.0 });
    let b = if s < 1.0 {
        e2.map(|x| if x > KERNEL_TOL { x.powf(1.0 - s) } else { 0.0 })
    } else {
        let kernel = e2.map(|x| if x > KERNEL_TOL { 0.0 } else { 1.0 });
        if rho1.matrix().hs_inner(&kernel).re > KERNEL_TOL {
            return Ok(f64::INFINITY);
        }
        linalg::support_power(&e2, 1.0 - s, KERNEL_TOL)
    };
    let q = a.hs_inner(&b).re;
    if q <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(q.log2() / (s - 1.0))
}

/// `D_s(ρ, U(g) ρ U(g)†)`, the finite-group Rényi monotone.
pub fn renyi_asymmetry(rho: &DensityOperator, rep: &Representation, g: &GroupElement, s: f64) -> Result<f64> {
    require_rep(rho, rep)?;
    let moved = rho.conjugate_by(&rep.unitary(g)?)?;
    renyi_divergence(rho, &moved, s)
}

/// `S_{L,s}(ρ) = tr(ρL²) − tr(ρ^s L ρ^{1−s} L)`.
///
/// For `s > 1` the negative power is taken on the support of `ρ`, and the
/// value is not sign-guarded: pairs of eigenvectors inside the support
/// contribute with negative sign, so full-rank states score `≤ 0`.
pub fn skew_information(rho: &DensityOperator, l: &ComplexMatrix, s: f64) -> Result<f64> {
    check_order(s)?;
    require_generator(rho, l)?;
    let eig = rho.eig();
    let a = eig.map(|x| if x > KERNEL_TOL { x.powf(s) } else { 0.0 });
    let b = if s < 1.0 {
        eig.map(|x| if x > KERNEL_TOL { x.powf(1.0 - s) } else { 0.0 })
    } else {
        log::warn!("skew information with s = {s} > 1 uses the inverse on the support and is not sign-definite");
        linalg::support_power(&eig, 1.0 - s, KERNEL_TOL)
    };
    let l2 = l * l;
    let first = rho.matrix().hs_inner(&l2).re;
    let second = (&(&a * l) * &(&b * l)).trace().re;
    let v = first - second;
    if s > 1.0 {
        Ok(v)
    } else {
        guard_nonnegative(v, "skew information")
    }
}

/// The quantity `1/(4·S_{N,1/2}(ρ))`.
pub fn cramer_rao_bound_value(rho: &DensityOperator, n: &ComplexMatrix) -> Result<f64> {
    let skew = skew_information(rho, n, 0.5)?;
    if skew <= ZERO_ASYMMETRY_TOL {
        return Err(Error::ZeroAsymmetry);
    }
    Ok(1.0 / (4.0 * skew))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{
        cyclic_group, left_regular_representation, spin_j_representation, subgroup_density_z_axis,
        u1_number_representation, uniform_density, Rotation,
    };
    use crate::linalg::kron;
    use crate::quantum::{twirl, KrausChannel};
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn plus_x() -> DensityOperator {
        DensityOperator::pure(&[c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]).unwrap()
    }

    fn jz() -> ComplexMatrix {
        ComplexMatrix::from_diagonal(&[0.5, -0.5])
    }

    /// The spin example pair on spin-½ ⊗ Q with Q two-dimensional.
    fn spin_pair() -> (DensityOperator, DensityOperator) {
        let h = FRAC_1_SQRT_2;
        let up = [c(1.0, 0.0), c(0.0, 0.0)];
        let down = [c(0.0, 0.0), c(1.0, 0.0)];
        let px = [c(h, 0.0), c(h, 0.0)];
        let mx = [c(h, 0.0), c(-h, 0.0)];
        let q1 = ComplexMatrix::outer(&up);
        let q2 = ComplexMatrix::outer(&down);
        let mix = |a: &[Complex64], b: &[Complex64]| {
            let m = &kron(&ComplexMatrix::outer(a), &q1) + &kron(&ComplexMatrix::outer(b), &q2);
            DensityOperator::new(m.scale(0.5)).unwrap()
        };
        (mix(&up, &down), mix(&px, &mx))
    }

    #[test]
    fn characteristic_function_basics() {
        let rep = spin_j_representation(1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let rho = random::random_state(3, &mut rng);
        let id = characteristic_function(&rho, &rep, &[GroupElement::Rotation(Rotation::identity())]).unwrap();
        assert!((id[0] - c(1.0, 0.0)).norm() < 1e-14);
        let mm = DensityOperator::maximally_mixed(3);
        let els = rep.check_elements();
        let chi = characteristic_function(&mm, &rep, &els).unwrap();
        for (g, z) in els.iter().zip(&chi) {
            let u = rep.unitary(g).unwrap();
            assert!((z - u.trace() / 3.0).norm() < 1e-14);
        }
    }

    #[test]
    fn characteristic_function_cannot_see_twirl_on_regular_rep() {
        let g = cyclic_group(8).unwrap();
        let rep = left_regular_representation(&g);
        let e = DensityOperator::basis(8, 0);
        let tw = twirl(&e, &rep, &uniform_density(&rep, 1).unwrap()).unwrap();
        let els: Vec<_> = (0..8).map(GroupElement::Finite).collect();
        let a = characteristic_function(&e, &rep, &els).unwrap();
        let b = characteristic_function(&tw, &rep, &els).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-10);
        }
    }

    #[test]
    fn moments_examples() {
        let m = noether_moments(&DensityOperator::maximally_mixed(2), &jz(), 6).unwrap();
        for (k, v) in m.iter().enumerate() {
            let k = k + 1;
            let expected = if k % 2 == 1 { 0.0 } else { 0.25_f64.powi(k as i32 / 2) };
            assert!((v - expected).abs() < 1e-15);
        }
        let l = ComplexMatrix::from_diagonal(&[0.3, -1.7, 2.0]);
        let m = noether_moments(&DensityOperator::basis(3, 2), &l, 5).unwrap();
        for (k, v) in m.iter().enumerate() {
            assert!((v - 2.0_f64.powi(k as i32 + 1)).abs() < 1e-12);
        }
        assert!(noether_moments(&DensityOperator::maximally_mixed(2), &jz(), 13).is_err());
        let bad = ComplexMatrix::new(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(noether_moments(&plus_x(), &bad, 2), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn spin_pair_values() {
        let (rho, sigma) = spin_pair();
        let spin = spin_j_representation(0.5).unwrap();
        for axis in ["x", "y", "z"] {
            let l = kron(spin.generator(axis).unwrap(), &ComplexMatrix::identity(2));
            let a = noether_moments(&rho, &l, 4).unwrap();
            let b = noether_moments(&sigma, &l, 4).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-10);
            }
        }
        let composite = crate::groups::tensor_representation(
            &spin,
            &crate::groups::Representation::trivial(spin.kind().clone(), 2).unwrap(),
        )
        .unwrap();
        let p = subgroup_density_z_axis(&composite, 8).unwrap();
        assert!(holevo_asymmetry(&rho, &composite, &p).unwrap().abs() < 1e-9);
        assert!((holevo_asymmetry(&sigma, &composite, &p).unwrap() - 1.0).abs() < 1e-9);
        let lz = kron(&jz(), &ComplexMatrix::identity(2));
        assert!(commutator_asymmetry(&rho, &lz).unwrap() < 1e-9);
        assert!((commutator_asymmetry(&sigma, &lz).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn holevo_on_regular_rep() {
        for n in 2..=12usize {
            let rep = left_regular_representation(&cyclic_group(n).unwrap());
            let p = uniform_density(&rep, 1).unwrap();
            let v = holevo_asymmetry(&DensityOperator::basis(n, 0), &rep, &p).unwrap();
            assert!((v - (n as f64).log2()).abs() < 1e-9);
        }
    }

    #[test]
    fn commutator_examples() {
        assert!((commutator_asymmetry(&plus_x(), &jz()).unwrap() - 1.0).abs() < 1e-12);
        let diag = DensityOperator::new(ComplexMatrix::from_diagonal(&[0.7, 0.3])).unwrap();
        assert_eq!(commutator_asymmetry(&diag, &jz()).unwrap(), 0.0);
    }

    #[test]
    fn pure_state_reductions() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for d in [2, 3, 5] {
            let l = random::random_hermitian(d, &mut rng);
            for _ in 0..20 {
                let psi = random::random_pure_vector(d, &mut rng);
                let rho = DensityOperator::pure(&psi).unwrap();
                // Expectations straight from the vector.
                let lpsi: Vec<Complex64> = (0..d).map(|i| (0..d).map(|j| l.get(i, j) * psi[j]).sum()).collect();
                let mean: f64 = psi.iter().zip(&lpsi).map(|(a, b)| (a.conj() * b).re).sum();
                let second: f64 = lpsi.iter().map(|z| z.norm_sqr()).sum();
                let var = second - mean * mean;
                let f = commutator_asymmetry(&rho, &l).unwrap();
                assert!((f - 2.0 * var.sqrt()).abs() <= 1e-8 * f.max(1e-300));
                for s in [0.25, 0.5, 0.75] {
                    let skew = skew_information(&rho, &l, s).unwrap();
                    assert!((skew - var).abs() <= 1e-8 * var);
                }
            }
        }
    }

    #[test]
    fn trace_distance_examples() {
        let rep = spin_j_representation(0.5).unwrap();
        let rho = plus_x();
        let e = GroupElement::Rotation(Rotation::identity());
        assert_eq!(trace_distance_asymmetry(&rho, &rep, &e).unwrap(), 0.0);
        let mm = DensityOperator::maximally_mixed(2);
        let g = GroupElement::Rotation(Rotation::axis_angle([0.3, -0.2, 0.9], 1.3).unwrap());
        assert!(trace_distance_asymmetry(&mm, &rep, &g).unwrap() < 1e-12);
        // Pure states: ‖ψ−φ‖₁ = 2√(1−|⟨ψ|φ⟩|²); here the overlap is cos(θ/2).
        let theta = 0.9;
        let v = trace_distance_asymmetry(&rho, &rep, &GroupElement::Rotation(Rotation::about_z(theta))).unwrap();
        assert!((v - 2.0 * (theta / 2.0).sin()).abs() < 1e-12);
    }

    #[test]
    fn trace_distance_small_angle() {
        let rep = spin_j_representation(1.0).unwrap();
        let l = rep.generator("z").unwrap().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let rho = random::random_state(3, &mut rng);
            let fl = commutator_asymmetry(&rho, &l).unwrap();
            let mut errs = Vec::new();
            for theta in [1e-2, 1e-3] {
                let fg =
                    trace_distance_asymmetry(&rho, &rep, &GroupElement::Rotation(Rotation::about_z(theta))).unwrap();
                errs.push((fg / theta - fl).abs() / theta);
            }
            assert!(errs.iter().all(|c| c.is_finite() && *c < 10.0), "{errs:?}");
        }
    }

    #[test]
    fn renyi_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rho = random::random_state(4, &mut rng);
        for s in [0.3, 0.5, 2.0, 3.5] {
            assert!(renyi_divergence(&rho, &rho, s).unwrap().abs() < 1e-10);
        }
        let p = DensityOperator::basis(2, 0);
        let q = DensityOperator::maximally_mixed(2);
        assert!((renyi_divergence(&p, &q, 0.5).unwrap() - 1.0).abs() < 1e-12);
        // Classical formula on a commuting pair.
        let (pp, qq) = ([0.2, 0.5, 0.3], [0.6, 0.1, 0.3]);
        let a = DensityOperator::new(ComplexMatrix::from_diagonal(&pp)).unwrap();
        let b = DensityOperator::new(ComplexMatrix::from_diagonal(&qq)).unwrap();
        for s in [0.25, 0.5, 2.0] {
            let sum: f64 = pp.iter().zip(&qq).map(|(x, y): (&f64, &f64)| x.powf(s) * y.powf(1.0 - s)).sum();
            assert!((renyi_divergence(&a, &b, s).unwrap() - sum.log2() / (s - 1.0)).abs() < 1e-12);
        }
        assert_eq!(renyi_divergence(&q, &p, 2.0).unwrap(), f64::INFINITY);
        assert!(renyi_divergence(&q, &p, 0.5).unwrap().is_finite());
        assert_eq!(renyi_divergence(&DensityOperator::basis(2, 1), &p, 0.5).unwrap(), f64::INFINITY);
        for s in [0.0, 1.0, -0.5, f64::NAN] {
            assert!(matches!(renyi_divergence(&p, &q, s), Err(Error::InvalidOrder(_))));
        }
    }

    fn random_channel(d: usize, n_ops: usize, rng: &mut ChaCha8Rng) -> KrausChannel {
        let u = random::random_unitary(d * n_ops, rng);
        let ops = (0..n_ops).map(|k| ComplexMatrix::from_fn(d, d, |r, col| u.get(r * n_ops + k, col))).collect();
        KrausChannel::new(ops).unwrap()
    }

    #[test]
    fn renyi_data_processing() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..100 {
            let d = 2 + trial % 3;
            let ch = random_channel(d, 2, &mut rng);
            let a = random::random_state(d, &mut rng);
            let b = random::random_state(d, &mut rng);
            let ea = crate::quantum::apply_channel(&ch, &a).unwrap();
            let eb = crate::quantum::apply_channel(&ch, &b).unwrap();
            for s in [0.5, 2.0] {
                let before = renyi_divergence(&a, &b, s).unwrap();
                let after = renyi_divergence(&ea, &eb, s).unwrap();
                assert!(after <= before + 1e-9, "s={s} before={before} after={after}");
            }
        }
    }

    #[test]
    fn skew_examples() {
        for s in [0.1, 0.25, 0.5, 0.75, 0.9] {
            assert!((skew_information(&plus_x(), &jz(), s).unwrap() - 0.25).abs() < 1e-12);
        }
        let diag = DensityOperator::new(ComplexMatrix::from_diagonal(&[0.6, 0.3, 0.1])).unwrap();
        let l = ComplexMatrix::from_diagonal(&[1.0, 2.0, 5.0]);
        assert!(skew_information(&diag, &l, 0.5).unwrap() < 1e-12);
        assert!(matches!(skew_information(&diag, &l, 1.0), Err(Error::InvalidOrder(_))));
    }

    #[test]
    fn skew_above_one_is_nonpositive() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let rho = random::random_mixed_state(3, 3, &mut rng);
        let l = random::random_hermitian(3, &mut rng);
        assert!(skew_information(&rho, &l, 2.0).unwrap() < 0.0);
        // Pure states still reduce to the variance on the support.
        let pure = random::random_pure_state(3, &mut rng);
        let v = variance(&pure, &l).unwrap();
        assert!((skew_information(&pure, &l, 2.0).unwrap() - v).abs() < 1e-9);
    }

    #[test]
    fn skew_second_derivative() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let theta = 1e-3;
        for _ in 0..10 {
            let rho = random::random_mixed_state(3, 3, &mut rng);
            let l = random::random_hermitian(3, &mut rng);
            for s in [0.25, 0.5, 0.75] {
                let eig = rho.eig();
                let a = eig.map(|x| x.powf(s));
                let b = eig.map(|x| x.powf(1.0 - s));
                let g = |t: f64| {
                    let u = linalg::unitary_from_generator(&l, -t).unwrap();
                    (&a * &b.conjugate_by(&u)).trace().re
                };
                let second = (g(theta) - 2.0 * g(0.0) + g(-theta)) / (theta * theta);
                let skew = skew_information(&rho, &l, s).unwrap();
                assert!((second + 2.0 * skew).abs() <= 1e-4 * (2.0 * skew), "s={s}");
            }
        }
    }

    #[test]
    fn cramer_rao_examples() {
        let n = ComplexMatrix::from_diagonal(&[0.0, 1.0]);
        assert!((cramer_rao_bound_value(&plus_x(), &n).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(cramer_rao_bound_value(&DensityOperator::basis(2, 1), &n), Err(Error::ZeroAsymmetry)));
        for k in 1..=5usize {
            let d = k + 1;
            let number = ComplexMatrix::from_diagonal(&(0..d).map(|x| x as f64).collect::<Vec<_>>());
            let mut psi = vec![c(0.0, 0.0); d];
            psi[0] = c(FRAC_1_SQRT_2, 0.0);
            psi[k] = c(FRAC_1_SQRT_2, 0.0);
            let rho = DensityOperator::pure(&psi).unwrap();
            let expected = 1.0 / (k * k) as f64;
            assert!((cramer_rao_bound_value(&rho, &number).unwrap() - expected).abs() < 1e-10);
        }
    }

    #[test]
    fn symmetric_states_score_zero() {
        let rep = u1_number_representation(&[0, 1, 2, 3]).unwrap();
        let l = rep.generators()[0].clone();
        let rho = DensityOperator::new(ComplexMatrix::from_diagonal(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        let p = uniform_density(&rep, 1).unwrap();
        assert!(holevo_asymmetry(&rho, &rep, &p).unwrap() < 1e-9);
        assert!(commutator_asymmetry(&rho, &l).unwrap() < 1e-9);
        assert!(trace_distance_asymmetry(&rho, &rep, &GroupElement::Phase(0.7)).unwrap() < 1e-9);
        assert!(skew_information(&rho, &l, 0.5).unwrap() < 1e-9);
        assert!(renyi_asymmetry(&rho, &rep, &GroupElement::Phase(0.7), 0.5).unwrap().abs() < 1e-9);
    }

    #[test]
    fn digests_distinguish_inputs() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::from_diagonal(&[1.0, 0.5]);
        assert_eq!(digest(&[&a]), digest(&[&a.clone()]));
        assert_ne!(digest(&[&a]), digest(&[&b]));
        assert_eq!(digest(&[&a]).len(), 64);
    }
}
