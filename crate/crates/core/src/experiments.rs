//! Scripted demonstrations with pass/fail reports.
//!
//! Randomized experiments derive one ChaCha8 stream per trial from the seed,
//! so reports do not depend on how trials are scheduled across threads.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{
    cyclic_group, cyclic_phase_representation, left_regular_representation, spin_j_representation,
    subgroup_density_z_axis, tensor_representation, u1_number_representation, uniform_density, GroupElement, GroupKind,
    Representation, Rotation,
};
use crate::linalg::{self, kron, ComplexMatrix};
use crate::measures;
use crate::quantum::{
    apply_channel, encoder_channel, haar_twirl_exact, is_covariant_channel, is_symmetric_channel,
    symmetric_dilation_channel, twirl, Commutant, DensityOperator, KrausChannel, SymmetricDilation, Twirl,
};
use crate::random;

/// Tolerance on monotonicity violations.
pub const MONOTONICITY_TOL: f64 = 1e-8;

/// Rotation angle for the Lie-group trace-distance and Rényi monotones.
pub const MONOTONE_ANGLE: f64 = 0.7;

/// Number of sampled elements used to compare characteristic functions on
/// Lie groups.
pub const LIE_SAMPLE_COUNT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// `|actual − expected| ≤ tolerance`
    Equal,
    /// `actual ≤ expected + tolerance`
    AtMost,
    /// `actual ≥ expected − tolerance`
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub description: String,
    pub comparison: Comparison,
    #[serde(with = "crate::real")]
    pub expected: f64,
    #[serde(with = "crate::real")]
    pub actual: f64,
    #[serde(with = "crate::real")]
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        description: impl Into<String>,
        comparison: Comparison,
        expected: f64,
        actual: f64,
        tolerance: f64,
    ) -> Self {
        let pass = match comparison {
            Comparison::Equal => (actual - expected).abs() <= tolerance || actual == expected,
            Comparison::AtMost => actual <= expected + tolerance,
            Comparison::AtLeast => actual >= expected - tolerance,
        };
        Self { description: description.into(), comparison, expected, actual, tolerance, pass }
    }

    pub fn equal(description: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        Self::new(description, Comparison::Equal, expected, actual, tolerance)
    }

    pub fn at_most(description: impl Into<String>, bound: f64, actual: f64, tolerance: f64) -> Self {
        Self::new(description, Comparison::AtMost, bound, actual, tolerance)
    }

    pub fn at_least(description: impl Into<String>, bound: f64, actual: f64, tolerance: f64) -> Self {
        Self::new(description, Comparison::AtLeast, bound, actual, tolerance)
    }

    /// A yes/no verdict encoded as 1/0.
    pub fn verdict(description: impl Into<String>, expected: bool, actual: bool) -> Self {
        Self::equal(description, f64::from(u8::from(expected)), f64::from(u8::from(actual)), 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub pass: bool,
}

impl ExperimentReport {
    fn new(experiment: impl Into<String>, seed: u64) -> Self {
        Self { experiment: experiment.into(), seed, checks: Vec::new(), notes: Vec::new(), pass: true }
    }

    fn push(&mut self, check: CheckRecord) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Recomputes the overall flag from the checks.
    pub fn recompute_pass(&mut self) {
        self.pass = self.checks.iter().all(|c| c.pass);
    }
}

/// Independent, reproducible stream for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn ket(amps: &[f64]) -> Vec<Complex64> {
    amps.iter().map(|&a| Complex64::new(a, 0.0)).collect()
}

/// Spin-½ ⊗ Q states from the rotation-symmetry counterexample:
/// `ρ = ½|+z⟩⟨+z|⊗|q₁⟩⟨q₁| + ½|−z⟩⟨−z|⊗|q₂⟩⟨q₂|` and its x̂ analogue `σ`.
pub fn spin_example_states() -> (DensityOperator, DensityOperator) {
    let h = FRAC_1_SQRT_2;
    let q1 = ComplexMatrix::outer(&ket(&[1.0, 0.0]));
    let q2 = ComplexMatrix::outer(&ket(&[0.0, 1.0]));
    let mix = |a: &[f64], b: &[f64]| {
        let m = &kron(&ComplexMatrix::outer(&ket(a)), &q1) + &kron(&ComplexMatrix::outer(&ket(b)), &q2);
        DensityOperator::new(m.scale(0.5)).expect("valid by construction")
    };
    (mix(&[1.0, 0.0], &[0.0, 1.0]), mix(&[h, h], &[h, -h]))
}

/// Spin-½ ⊗ Q with rotations acting on the spin only.
pub fn spin_example_representation() -> Result<Representation> {
    let spin = spin_j_representation(0.5)?;
    tensor_representation(&spin, &Representation::trivial(GroupKind::Su2, 2)?)
}

pub fn spin_example_report() -> Result<ExperimentReport> {
    let mut report = ExperimentReport::new("spin-example", 0);
    let (rho, sigma) = spin_example_states();
    let rep = spin_example_representation()?;

    for axis in ["x", "y", "z"] {
        let l = rep.generator(axis)?;
        let a = measures::noether_moments(&rho, l, 4)?;
        let b = measures::noether_moments(&sigma, l, 4)?;
        let diff = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        report.push(CheckRecord::equal(
            format!("max |tr(rho J{axis}^k) - tr(sigma J{axis}^k)|, k = 1..4"),
            0.0,
            diff,
            1e-10,
        ));
    }
    report.note("for spin-1/2 generators L^2 is proportional to the identity, so orders k >= 2 repeat the information of k <= 1");

    let p = subgroup_density_z_axis(&rep, 2)?;
    report.push(CheckRecord::equal(
        format!("Holevo asymmetry of rho, {} density", p.label()),
        0.0,
        measures::holevo_asymmetry(&rho, &rep, &p)?,
        1e-9,
    ));
    report.push(CheckRecord::equal(
        format!("Holevo asymmetry of sigma, {} density", p.label()),
        1.0,
        measures::holevo_asymmetry(&sigma, &rep, &p)?,
        1e-9,
    ));

    let lz = rep.generator("z")?;
    report.push(CheckRecord::equal(
        "commutator asymmetry of rho, L = Jz (x) I",
        0.0,
        measures::commutator_asymmetry(&rho, lz)?,
        1e-9,
    ));
    report.push(CheckRecord::equal(
        "commutator asymmetry of sigma, L = Jz (x) I",
        1.0,
        measures::commutator_asymmetry(&sigma, lz)?,
        1e-9,
    ));

    let u = rep.unitary(&GroupElement::Rotation(Rotation::about_y(FRAC_PI_2)))?;
    let mapped = rho.matrix().conjugate_by(&u);
    report.push(CheckRecord::equal(
        "trace norm of U rho U^dagger - sigma, U = pi/2 rotation about y on the spin",
        0.0,
        linalg::trace_norm(&(&mapped - sigma.matrix()))?,
        1e-10,
    ));
    report.push(CheckRecord::at_least(
        "Frobenius norm of [U, Jz (x) I] (U is not symmetric)",
        0.1,
        u.commutator(lz).frobenius_norm(),
        0.0,
    ));
    Ok(report)
}

pub fn triviality_demo(n: usize, seed: u64) -> Result<ExperimentReport> {
    if !(2..=12).contains(&n) {
        return Err(Error::InvalidArgument(format!("group order must be in 2..=12, got {n}")));
    }
    let mut report = ExperimentReport::new(format!("triviality:{n}"), seed);
    let group = cyclic_group(n)?;
    let regular = left_regular_representation(&group);
    let p = uniform_density(&regular, 1)?;
    let e = DensityOperator::basis(n, group.identity());
    let twirled = twirl(&e, &regular, &p)?;

    let elements: Vec<GroupElement> = (0..n).map(GroupElement::Finite).collect();
    let chi_e = measures::characteristic_function(&e, &regular, &elements)?;
    let chi_t = measures::characteristic_function(&twirled, &regular, &elements)?;
    let diff = chi_e.iter().zip(&chi_t).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    report.push(CheckRecord::equal("max |chi(|e><e|) - chi(G(|e><e|))| over all elements", 0.0, diff, 1e-10));

    let gamma_e = measures::holevo_asymmetry(&e, &regular, &p)?;
    let gamma_t = measures::holevo_asymmetry(&twirled, &regular, &p)?;
    let log_n = (n as f64).log2();
    report.push(CheckRecord::equal("Holevo asymmetry of |e><e|, uniform density", log_n, gamma_e, 1e-9));
    report.push(CheckRecord::equal("Holevo asymmetry of G(|e><e|)", 0.0, gamma_t, 1e-9));

    let charges: Vec<i64> = (0..n as i64).collect();
    let target_rep = cyclic_phase_representation(n, &charges)?;
    let mut rng = trial_rng(seed, 0);
    let target = random::random_state(n, &mut rng);
    let enc = encoder_channel(&group, &regular, &target_rep, &target)?;
    let out = apply_channel(&enc, &e)?;
    report.push(CheckRecord::equal(
        "max entry of |E(|e><e|) - target|",
        0.0,
        out.matrix().max_abs_diff(target.matrix()),
        1e-9,
    ));
    let cov = is_covariant_channel(&enc, &regular, &target_rep, 1e-9)?;
    report.push(CheckRecord::at_most("encoder covariance deviation", 0.0, cov.max_deviation, 1e-9));
    report.note(format!(
        "encoder applied without a 1/|G| prefactor; with it the output trace would be {}",
        1.0 / n as f64
    ));
    Ok(report)
}

pub fn amplifier_bound_check(trials: usize, seed: u64) -> Result<ExperimentReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let mut report = ExperimentReport::new(format!("amplifier:{trials}"), seed);
    let entropy = |r: &DensityOperator| linalg::von_neumann_entropy(r);

    // Worked cases on a qubit with charges {0, 1}.
    let qubit = u1_number_representation(&[0, 1])?;
    let qubit_twirl = Twirl::new(&qubit, &uniform_density(&qubit, 1)?)?;
    let plus = DensityOperator::pure(&ket(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]))?;
    let sides = |ch: &KrausChannel| -> Result<(f64, f64)> {
        let out = apply_channel(ch, &plus)?;
        let lhs = entropy(&out)? - entropy(&plus)?;
        let rhs = entropy(&qubit_twirl.apply(&out)?)? - entropy(&qubit_twirl.apply(&plus)?)?;
        Ok((lhs, rhs))
    };
    let (l, r) = sides(&KrausChannel::identity(2))?;
    report.push(CheckRecord::equal("identity channel on |+x>: entropy change", 0.0, l, 1e-12));
    report.push(CheckRecord::equal("identity channel on |+x>: twirled entropy change", 0.0, r, 1e-12));
    let (l, r) = sides(&KrausChannel::full_dephasing(2))?;
    report.push(CheckRecord::equal("full dephasing on |+x>: entropy change", 1.0, l, 1e-12));
    report.push(CheckRecord::equal("full dephasing on |+x>: twirled entropy change", 0.0, r, 1e-12));

    let system = u1_number_representation(&[0, 1, 2, 3])?;
    let ancilla = u1_number_representation(&[0, 1, 2])?;
    let joint = tensor_representation(&system, &ancilla)?;
    let joint_commutant = Commutant::of(&joint)?;
    let ancilla_commutant = Commutant::of(&ancilla)?;
    let tw = Twirl::new(&system, &uniform_density(&system, 1)?)?;
    let slacks = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<f64> {
            let mut rng = trial_rng(seed, t as u64);
            let dil = SymmetricDilation::random(&system, &ancilla_commutant, &joint_commutant, &mut rng)?;
            let ch = symmetric_dilation_channel(&dil)?;
            let rho = random::random_state(system.dim(), &mut rng);
            let sigma = apply_channel(&ch, &rho)?;
            let lhs = entropy(&sigma)? - entropy(&rho)?;
            let rhs = entropy(&tw.apply(&sigma)?)? - entropy(&tw.apply(&rho)?)?;
            Ok(lhs - rhs)
        })
        .collect::<Result<Vec<f64>>>()?;
    let worst = slacks.iter().copied().fold(f64::INFINITY, f64::min);
    report.push(CheckRecord::at_least(
        format!("min over {trials} random U(1) channels of [S(sigma) - S(rho)] - [S(G(sigma)) - S(G(rho))]"),
        0.0,
        worst,
        MONOTONICITY_TOL,
    ));

    let spin = spin_j_representation(0.5)?;
    let mut worst_spin = 0.0_f64;
    for t in 0..20u64 {
        let mut rng = trial_rng(seed, trials as u64 + t);
        let rho = random::random_state(2, &mut rng);
        let s = entropy(&haar_twirl_exact(&rho, &spin)?)?;
        worst_spin = worst_spin.max((s - 1.0).abs());
    }
    report.push(CheckRecord::equal("max over 20 spin-1/2 states of |S(G_uniform(rho)) - 1|", 0.0, worst_spin, 1e-9));
    Ok(report)
}

/// Group instances registered for monotonicity suites.
pub const MONOTONICITY_INSTANCES: [&str; 3] = ["z8", "u1", "su2x2"];

/// A system representation together with the ancilla used to draw random
/// symmetric dilations, and the elements and generator the monotones use.
pub struct MonotonicityInstance {
    pub id: String,
    pub system: Representation,
    pub ancilla: Representation,
    /// Generator for the commutator and skew measures (Lie groups only).
    pub generator: Option<ComplexMatrix>,
    /// Element for the trace-distance and Rényi monotones.
    pub element: GroupElement,
    /// Element replacing the generator on finite groups.
    pub generator_element: GroupElement,
}

impl MonotonicityInstance {
    pub fn get(id: &str) -> Result<Self> {
        match id {
            "z8" => {
                let system = left_regular_representation(&cyclic_group(8)?);
                Ok(Self {
                    id: id.into(),
                    system,
                    ancilla: cyclic_phase_representation(8, &[0, 1, 5])?,
                    generator: None,
                    element: GroupElement::Finite(3),
                    generator_element: GroupElement::Finite(1),
                })
            }
            "u1" => {
                let system = u1_number_representation(&[0, 1, 2, 3])?;
                let generator = Some(system.generators()[0].clone());
                Ok(Self {
                    id: id.into(),
                    system,
                    ancilla: u1_number_representation(&[0, 1, 2])?,
                    generator,
                    element: GroupElement::Phase(MONOTONE_ANGLE),
                    generator_element: GroupElement::Phase(MONOTONE_ANGLE),
                })
            }
            "su2x2" => {
                let half = spin_j_representation(0.5)?;
                let system = tensor_representation(&half, &half)?;
                let generator = Some(system.generator("z")?.clone());
                let g = GroupElement::Rotation(Rotation::axis_angle([1.0, 2.0, 2.0], MONOTONE_ANGLE)?);
                Ok(Self { id: id.into(), ancilla: system.clone(), system, generator, element: g, generator_element: g })
            }
            other => Err(Error::UnknownInstance(format!(
                "group instance '{other}' (known: {})",
                MONOTONICITY_INSTANCES.join(", ")
            ))),
        }
    }
}

/// Measures accepted by [`monotonicity_suite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MonotoneKind {
    Holevo,
    Commutator,
    TraceDistance,
    Skew(f64),
    Renyi(f64),
}

impl MonotoneKind {
    pub fn parse(id: &str) -> Result<Self> {
        let order = |text: &str| -> Result<f64> {
            text.parse::<f64>().map_err(|_| Error::UnknownInstance(format!("measure '{id}': bad order '{text}'")))
        };
        match id {
            "holevo" => Ok(Self::Holevo),
            "commutator" => Ok(Self::Commutator),
            "trace-distance" => Ok(Self::TraceDistance),
            _ => {
                if let Some(s) = id.strip_prefix("skew-") {
                    let s = order(s)?;
                    if !(s > 0.0 && s < 1.0) {
                        return Err(Error::InvalidOrder(s));
                    }
                    Ok(Self::Skew(s))
                } else if let Some(s) = id.strip_prefix("renyi-") {
                    let s = order(s)?;
                    if !(s > 0.0 && s != 1.0 && s.is_finite()) {
                        return Err(Error::InvalidOrder(s));
                    }
                    Ok(Self::Renyi(s))
                } else {
                    Err(Error::UnknownInstance(format!(
                        "measure '{id}' (known: holevo, commutator, trace-distance, skew-<s>, renyi-<s>)"
                    )))
                }
            }
        }
    }
}

/// Evaluates one monotone on an instance. On finite groups, which have no
/// generators, the commutator measure is replaced by the trace-distance
/// monotone at the group generator and skew information of order `s` by the
/// Rényi monotone of the same order at the group generator.
struct Monotone<'a> {
    kind: MonotoneKind,
    instance: &'a MonotonicityInstance,
    twirl: Option<Twirl>,
    element_unitary: ComplexMatrix,
    generator_unitary: ComplexMatrix,
}

impl<'a> Monotone<'a> {
    fn new(kind: MonotoneKind, instance: &'a MonotonicityInstance) -> Result<Self> {
        let twirl = match kind {
            MonotoneKind::Holevo => Some(Twirl::new(&instance.system, &uniform_density(&instance.system, 1)?)?),
            _ => None,
        };
        Ok(Self {
            kind,
            instance,
            twirl,
            element_unitary: instance.system.unitary(&instance.element)?,
            generator_unitary: instance.system.unitary(&instance.generator_element)?,
        })
    }

    fn describe(&self) -> String {
        let g = &self.instance.generator_element;
        let finite = self.instance.generator.is_none();
        match self.kind {
            MonotoneKind::Holevo => "Holevo asymmetry, uniform density".into(),
            MonotoneKind::Commutator if finite => format!("trace-distance monotone at generator element {g}"),
            MonotoneKind::Commutator => "commutator trace norm".into(),
            MonotoneKind::TraceDistance => format!("trace-distance monotone at {}", self.instance.element),
            MonotoneKind::Skew(s) if finite => format!("Renyi monotone of order {s} at generator element {g}"),
            MonotoneKind::Skew(s) => format!("skew information of order {s}"),
            MonotoneKind::Renyi(s) => format!("Renyi monotone of order {s} at {}", self.instance.element),
        }
    }

    fn eval(&self, rho: &DensityOperator) -> Result<f64> {
        let l = self.instance.generator.as_ref();
        match (self.kind, l) {
            (MonotoneKind::Holevo, _) => {
                measures::holevo_asymmetry_with(rho, self.twirl.as_ref().expect("holevo twirl"))
            }
            (MonotoneKind::Commutator, Some(l)) => measures::commutator_asymmetry(rho, l),
            (MonotoneKind::Commutator, None) => {
                measures::trace_distance_asymmetry_unitary(rho, &self.generator_unitary)
            }
            (MonotoneKind::TraceDistance, _) => measures::trace_distance_asymmetry_unitary(rho, &self.element_unitary),
            (MonotoneKind::Skew(s), Some(l)) => measures::skew_information(rho, l, s),
            (MonotoneKind::Skew(s), None) => {
                measures::renyi_divergence(rho, &rho.conjugate_by(&self.generator_unitary)?, s)
            }
            (MonotoneKind::Renyi(s), _) => {
                measures::renyi_divergence(rho, &rho.conjugate_by(&self.element_unitary)?, s)
            }
        }
    }
}

/// `after − before`, with `∞ → ∞` counted as no violation.
fn violation(before: f64, after: f64) -> f64 {
    if before == f64::INFINITY {
        f64::NEG_INFINITY
    } else {
        after - before
    }
}

pub fn monotonicity_suite(instance_id: &str, measure_id: &str, trials: usize, seed: u64) -> Result<ExperimentReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let instance = MonotonicityInstance::get(instance_id)?;
    let kind = MonotoneKind::parse(measure_id)?;
    let monotone = Monotone::new(kind, &instance)?;
    let mut report = ExperimentReport::new(format!("monotonicity:{instance_id}:{measure_id}:{trials}"), seed);
    report.note(format!("measure: {}", monotone.describe()));

    let joint = tensor_representation(&instance.system, &instance.ancilla)?;
    let joint_commutant = Commutant::of(&joint)?;
    let ancilla_commutant = Commutant::of(&instance.ancilla)?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<(f64, f64, f64)> {
            let mut rng = trial_rng(seed, t as u64);
            let dil = SymmetricDilation::random(&instance.system, &ancilla_commutant, &joint_commutant, &mut rng)?;
            let ch = symmetric_dilation_channel(&dil)?;
            let cov = is_symmetric_channel(&ch, &instance.system, MONOTONICITY_TOL)?;
            let rho = random::random_state(instance.system.dim(), &mut rng);
            let before = monotone.eval(&rho)?;
            let after = monotone.eval(&apply_channel(&ch, &rho)?)?;
            Ok((violation(before, after), cov.max_deviation, before))
        })
        .collect::<Result<Vec<_>>>()?;

    let worst = outcomes.iter().map(|o| o.0).fold(f64::NEG_INFINITY, f64::max);
    let violations = outcomes.iter().filter(|o| o.0 > MONOTONICITY_TOL).count();
    let worst_cov = outcomes.iter().map(|o| o.1).fold(0.0, f64::max);
    let mean_before = outcomes.iter().map(|o| o.2).filter(|v| v.is_finite()).sum::<f64>() / trials as f64;
    report.push(CheckRecord::at_most(
        format!("max over {trials} trials of m(E(rho)) - m(rho)"),
        0.0,
        worst,
        MONOTONICITY_TOL,
    ));
    report.push(CheckRecord::equal("number of trials violating monotonicity", 0.0, violations as f64, 0.0));
    report.push(CheckRecord::at_most(
        "max covariance deviation of the sampled channels",
        0.0,
        worst_cov,
        MONOTONICITY_TOL,
    ));
    report.note(format!("mean m(rho) over finite trials: {}", crate::real::round_sig(mean_before)));
    Ok(report)
}

/// Characteristic-function comparison of two pure states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interconversion {
    /// `tr(ψ₁ U(g)) = tr(ψ₂ U(g))` for all compared elements.
    pub equal: bool,
    #[serde(with = "crate::real")]
    pub max_deviation: f64,
    /// `|tr(ψ₁ U(g))| = |tr(ψ₂ U(g))|` for all compared elements.
    pub equal_up_to_phase: bool,
    #[serde(with = "crate::real")]
    pub max_modulus_deviation: f64,
}

/// Compares characteristic functions on every element of a finite group or
/// on [`LIE_SAMPLE_COUNT`] sampled elements of a Lie group.
pub fn pure_state_interconversion(
    psi1: &DensityOperator,
    psi2: &DensityOperator,
    rep: &Representation,
    tol: f64,
) -> Result<Interconversion> {
    for psi in [psi1, psi2] {
        let top = psi.max_eigenvalue();
        if top < 1.0 - 1e-9 {
            return Err(Error::NotPure(top));
        }
    }
    let elements = rep.sample_elements(LIE_SAMPLE_COUNT);
    let a = measures::characteristic_function(psi1, rep, &elements)?;
    let b = measures::characteristic_function(psi2, rep, &elements)?;
    let max_deviation = a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    let max_modulus_deviation = a.iter().zip(&b).map(|(x, y)| (x.norm() - y.norm()).abs()).fold(0.0, f64::max);
    Ok(Interconversion {
        equal: max_deviation <= tol,
        max_deviation,
        equal_up_to_phase: max_modulus_deviation <= tol,
        max_modulus_deviation,
    })
}

pub fn interconversion_report(seed: u64) -> Result<ExperimentReport> {
    let mut report = ExperimentReport::new("interconversion", seed);
    let tol = 1e-10;
    let h = FRAC_1_SQRT_2;
    let u1 = u1_number_representation(&[0, 1, 2])?;
    let s01 = DensityOperator::pure(&ket(&[h, h, 0.0]))?;
    let s02 = DensityOperator::pure(&ket(&[h, 0.0, h]))?;
    let s12 = DensityOperator::pure(&ket(&[0.0, h, h]))?;

    let mut rng = trial_rng(seed, 0);
    let psi = random::random_pure_vector(3, &mut rng);
    let phase = Complex64::from_polar(1.0, 0.83);
    let a = DensityOperator::pure(&psi)?;
    let b = DensityOperator::pure(&psi.iter().map(|z| z * phase).collect::<Vec<_>>())?;
    let r = pure_state_interconversion(&a, &b, &u1, tol)?;
    report.push(CheckRecord::verdict("random psi vs e^{i alpha} psi under U(1) {0,1,2}: equal", true, r.equal));
    report.push(CheckRecord::equal("random psi vs e^{i alpha} psi: max |delta chi|", 0.0, r.max_deviation, tol));

    let r = pure_state_interconversion(&s01, &s02, &u1, tol)?;
    report.push(CheckRecord::verdict("(|0>+|1>) vs (|0>+|2>): equal", false, r.equal));
    report.push(CheckRecord::verdict("(|0>+|1>) vs (|0>+|2>): equal up to phase", false, r.equal_up_to_phase));
    report.push(CheckRecord::at_least("(|0>+|1>) vs (|0>+|2>): max |delta chi|", 0.5, r.max_deviation, 0.0));

    let r = pure_state_interconversion(&s01, &s12, &u1, tol)?;
    report.push(CheckRecord::verdict("(|0>+|1>) vs (|1>+|2>): equal", false, r.equal));
    report.push(CheckRecord::verdict("(|0>+|1>) vs (|1>+|2>): equal up to phase", true, r.equal_up_to_phase));
    report.note("(|0>+|1>) and (|1>+|2>) have characteristic functions differing by the factor exp(-i phi) of a one-dimensional representation");

    let v = Commutant::of(&u1)?.random_unitary(&mut rng);
    let moved: Vec<Complex64> = (0..3).map(|i| (0..3).map(|j| v.get(i, j) * psi[j]).sum()).collect();
    let r = pure_state_interconversion(&a, &DensityOperator::pure(&moved)?, &u1, tol)?;
    report.push(CheckRecord::verdict("random psi vs V psi, V a random symmetric unitary: equal", true, r.equal));
    Ok(report)
}

/// Runs a named experiment:
/// `spin-example`, `triviality:N`, `amplifier:T`, `interconversion`,
/// `monotonicity:<instance>:<measure>:<T>`.
pub fn run_by_id(id: &str, seed: u64) -> Result<ExperimentReport> {
    let parts: Vec<&str> = id.split(':').collect();
    let number = |text: &str| -> Result<usize> {
        text.parse().map_err(|_| Error::UnknownInstance(format!("experiment '{id}': '{text}' is not a count")))
    };
    match parts.as_slice() {
        ["spin-example"] => spin_example_report(),
        ["triviality", n] => triviality_demo(number(n)?, seed),
        ["amplifier", t] => amplifier_bound_check(number(t)?, seed),
        ["interconversion"] => interconversion_report(seed),
        ["monotonicity", instance, measure, t] => monotonicity_suite(instance, measure, number(t)?, seed),
        _ => Err(Error::UnknownInstance(format!("experiment '{id}'"))),
    }
}
