//! Density operators, channels in Kraus form, twirling, and construction
//! and verification of symmetric (covariant) channels.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::groups::{
    left_regular_representation, uniform_density, FiniteGroup, GroupDensity, GroupElement, GroupKind, Representation,
};
use crate::linalg::{self, kron, ComplexMatrix, HermitianEig, C_ZERO, HERMITIAN_TOL, PSD_TOL};

/// Trace of a density operator must be one within this tolerance.
pub const TRACE_TOL: f64 = 1e-10;

/// Kraus completeness `Σ K†K = I` tolerance.
pub const COMPLETENESS_TOL: f64 = 1e-9;

/// Invariance tolerance for dilation ingredients.
pub const DILATION_TOL: f64 = 1e-9;

/// Eigenvalues of a generator within this fraction of its spectral range are
/// treated as one eigenspace by [`dephasing_twirl`].
pub const DEGENERACY_TOL: f64 = 1e-9;

/// A Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
}

impl DensityOperator {
    /// Validates `m` as a state. Eigenvalues in `[-1e-10, 0)` are clipped.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(format!("state must be square, got {}x{}", m.nrows(), m.ncols())));
        }
        let defect = m.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian(defect));
        }
        let h = m.hermitian_part();
        let eig = linalg::hermitian_eig(&h)?;
        let min = eig.eigenvalues[0];
        if min < -PSD_TOL {
            return Err(Error::NotPsd(min));
        }
        let tr = h.trace().re;
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotOne(tr));
        }
        let matrix = if min < 0.0 { eig.map(|x| x.max(0.0)) } else { h };
        Ok(Self { matrix })
    }

    /// `|ψ⟩⟨ψ|` for a unit vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        if psi.is_empty() {
            return Err(Error::InvalidState("empty state vector".into()));
        }
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotOne(norm));
        }
        Self::new(ComplexMatrix::outer(psi))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self { matrix: ComplexMatrix::identity(d).scale(1.0 / d as f64) }
    }

    /// Basis projector `|k⟩⟨k|` in dimension `d`.
    pub fn basis(d: usize, k: usize) -> Self {
        Self { matrix: ComplexMatrix::unit(d, d, k, k) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn eig(&self) -> HermitianEig {
        linalg::psd_eig(&self.matrix).expect("validated state")
    }

    /// Largest eigenvalue; one for pure states.
    pub fn max_eigenvalue(&self) -> f64 {
        *self.eig().eigenvalues.last().expect("nonempty")
    }

    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Result<Self> {
        Self::new(self.matrix.conjugate_by(u))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self { matrix: kron(&self.matrix, &other.matrix) }
    }
}

/// Validates a matrix as a density operator.
pub fn validate_state(m: ComplexMatrix) -> Result<DensityOperator> {
    DensityOperator::new(m)
}

/// A completely positive trace-preserving map `X ↦ Σ K X K†`.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    input_dim: usize,
    output_dim: usize,
    kraus: Vec<ComplexMatrix>,
}

impl KrausChannel {
    /// Checks shapes and the completeness relation `Σ K†K = I`.
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let first =
            kraus.first().ok_or_else(|| Error::InvalidArgument("channel needs at least one Kraus operator".into()))?;
        let (output_dim, input_dim) = (first.nrows(), first.ncols());
        for (k, op) in kraus.iter().enumerate() {
            if op.nrows() != output_dim || op.ncols() != input_dim {
                return Err(Error::DimensionMismatch(format!(
                    "Kraus operator {k} is {}x{}, expected {output_dim}x{input_dim}",
                    op.nrows(),
                    op.ncols()
                )));
            }
        }
        let mut sum = ComplexMatrix::zeros(input_dim, input_dim);
        for op in &kraus {
            sum = &sum + &(&op.adjoint() * op);
        }
        let defect = sum.max_abs_diff(&ComplexMatrix::identity(input_dim));
        if defect > COMPLETENESS_TOL {
            return Err(Error::NotTracePreserving(defect));
        }
        Ok(Self { input_dim, output_dim, kraus })
    }

    pub fn identity(d: usize) -> Self {
        Self { input_dim: d, output_dim: d, kraus: vec![ComplexMatrix::identity(d)] }
    }

    pub fn unitary(u: ComplexMatrix) -> Result<Self> {
        Self::new(vec![u])
    }

    /// Complete dephasing in the computational basis.
    pub fn full_dephasing(d: usize) -> Self {
        Self { input_dim: d, output_dim: d, kraus: (0..d).map(|k| ComplexMatrix::unit(d, d, k, k)).collect() }
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn kraus_ops(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// `Σ K X K†` for an arbitrary operator `X`.
    pub fn apply_operator(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.nrows() != self.input_dim || x.ncols() != self.input_dim {
            return Err(Error::DimensionMismatch(format!(
                "channel input is {0}x{0}, operator is {1}x{2}",
                self.input_dim,
                x.nrows(),
                x.ncols()
            )));
        }
        let mut out = ComplexMatrix::zeros(self.output_dim, self.output_dim);
        for k in &self.kraus {
            out = &out + &x.conjugate_by(k);
        }
        Ok(out)
    }

    /// Column-major superoperator `Σ conj(K) ⊗ K`, so that
    /// `vec(ℰ(X)) = S vec(X)`.
    pub fn superoperator(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.output_dim * self.output_dim, self.input_dim * self.input_dim);
        for k in &self.kraus {
            out = &out + &kron(&ComplexMatrix::from_inner(k.inner().conjugate()), k);
        }
        out
    }

    /// Sequential composition: `other` after `self`.
    pub fn then(&self, other: &KrausChannel) -> Result<KrausChannel> {
        if other.input_dim != self.output_dim {
            return Err(Error::DimensionMismatch("channel composition dims".into()));
        }
        let mut ops = Vec::with_capacity(self.kraus.len() * other.kraus.len());
        for b in &other.kraus {
            for a in &self.kraus {
                ops.push(b * a);
            }
        }
        Ok(KrausChannel { input_dim: self.input_dim, output_dim: other.output_dim, kraus: ops })
    }
}

/// `ℰ(ρ) = Σ K ρ K†`.
pub fn apply_channel(channel: &KrausChannel, rho: &DensityOperator) -> Result<DensityOperator> {
    DensityOperator::new(channel.apply_operator(rho.matrix())?)
}

fn require_dim(rep: &Representation, d: usize, what: &str) -> Result<()> {
    if rep.dim() == d {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "{what}: representation dimension {} vs operator dimension {d}",
            rep.dim()
        )))
    }
}

/// The weighted group average `𝒢_p(X) = Σ p(g) U(g) X U(g)†`, with the
/// representing unitaries computed once.
#[derive(Debug, Clone)]
pub struct Twirl {
    dim: usize,
    terms: Vec<(ComplexMatrix, f64)>,
}

impl Twirl {
    pub fn new(rep: &Representation, density: &GroupDensity) -> Result<Self> {
        let terms = density
            .nodes()
            .iter()
            .filter(|(_, w)| *w > 0.0)
            .map(|(g, w)| Ok((rep.unitary(g)?, *w)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim: rep.dim(), terms })
    }

    pub fn apply_operator(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.nrows() != self.dim || x.ncols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "twirl acts on dimension {}, got {}x{}",
                self.dim,
                x.nrows(),
                x.ncols()
            )));
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for (u, w) in &self.terms {
            out = &out + &x.conjugate_by(u).scale(*w);
        }
        Ok(out)
    }

    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        DensityOperator::new(self.apply_operator(rho.matrix())?)
    }
}

/// `𝒢_p(ρ)`.
pub fn twirl(rho: &DensityOperator, rep: &Representation, density: &GroupDensity) -> Result<DensityOperator> {
    require_dim(rep, rho.dim(), "twirl")?;
    Twirl::new(rep, density)?.apply(rho)
}

/// Spectral projectors of a Hermitian generator; eigenvalues closer than
/// `DEGENERACY_TOL` times the spectral range share a projector.
pub fn eigenspace_projectors(l: &ComplexMatrix) -> Result<Vec<(f64, ComplexMatrix)>> {
    let eig = linalg::hermitian_eig(l)?;
    let ev = &eig.eigenvalues;
    let n = ev.len();
    let range = (ev[n - 1] - ev[0]).max(1.0);
    let mut out: Vec<(f64, ComplexMatrix)> = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && ev[end] - ev[end - 1] <= DEGENERACY_TOL * range {
            end += 1;
        }
        let mut p = ComplexMatrix::zeros(n, n);
        for k in start..end {
            p = &p + &ComplexMatrix::outer(&eig.vector(k));
        }
        out.push((ev[start..end].iter().sum::<f64>() / (end - start) as f64, p));
        start = end;
    }
    Ok(out)
}

/// Removes all coherence between distinct eigenspaces of `l`; the exact
/// twirl over the one-parameter group `exp(-iθL)`.
pub fn dephasing_twirl(rho: &DensityOperator, l: &ComplexMatrix) -> Result<DensityOperator> {
    if l.nrows() != rho.dim() || !l.is_square() {
        return Err(Error::DimensionMismatch("generator and state dimensions differ".into()));
    }
    let projectors = eigenspace_projectors(l)?;
    let mut out = ComplexMatrix::zeros(rho.dim(), rho.dim());
    for (_, p) in &projectors {
        out = &out + &(&(p * rho.matrix()) * p);
    }
    DensityOperator::new(out)
}

/// Outcome of a covariance check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceCheck {
    pub symmetric: bool,
    /// Largest Frobenius deviation `‖ℰ(U X U†) − U' ℰ(X) U'†‖` over matrix
    /// units `X` and checked elements.
    pub max_deviation: f64,
}

/// Checks `ℰ(U_in(g) X U_in(g)†) = U_out(g) ℰ(X) U_out(g)†` over all matrix
/// units `X`. Finite groups are checked on every element; Lie groups on the
/// representation's check elements.
pub fn is_covariant_channel(
    channel: &KrausChannel,
    rep_in: &Representation,
    rep_out: &Representation,
    tol: f64,
) -> Result<CovarianceCheck> {
    require_dim(rep_in, channel.input_dim(), "channel input")?;
    require_dim(rep_out, channel.output_dim(), "channel output")?;
    if !rep_in.kind().same_group(rep_out.kind()) {
        return Err(Error::GroupMismatch("input and output representations are of different groups".into()));
    }
    // Column i + j·d of S(Ū⊗U) − (Ū'⊗U')S is vec of the deviation on the
    // matrix unit |i⟩⟨j|.
    let sup = channel.superoperator();
    let lift = |u: &ComplexMatrix| kron(&ComplexMatrix::from_inner(u.inner().conjugate()), u);
    let mut worst = 0.0_f64;
    for g in rep_in.check_elements() {
        let diff = &(&sup * &lift(&rep_in.unitary(&g)?)) - &(&lift(&rep_out.unitary(&g)?) * &sup);
        for col in diff.inner().column_iter() {
            worst = worst.max(col.norm());
        }
    }
    Ok(CovarianceCheck { symmetric: worst <= tol, max_deviation: worst })
}

/// [`is_covariant_channel`] with the same representation on both sides.
pub fn is_symmetric_channel(channel: &KrausChannel, rep: &Representation, tol: f64) -> Result<CovarianceCheck> {
    is_covariant_channel(channel, rep, rep, tol)
}

/// Largest `‖[X, U(g)]‖_F` over check elements (and generators, for Lie
/// representations).
pub fn invariance_defect(x: &ComplexMatrix, rep: &Representation) -> Result<f64> {
    require_dim(rep, x.nrows(), "invariance check")?;
    let mut worst = 0.0_f64;
    for g in rep.check_elements() {
        worst = worst.max(x.commutator(&rep.unitary(&g)?).frobenius_norm());
    }
    for l in rep.generators() {
        worst = worst.max(x.commutator(l).frobenius_norm());
    }
    Ok(worst)
}

/// Hilbert–Schmidt orthonormal basis of the commutant
/// `{X : [X, U(g)] = 0 ∀g}`.
///
/// Solves the joint linear system `[X, C_k] = 0` over a generating set `C_k`
/// (group generators for finite groups, Lie-algebra generators otherwise) as
/// the null space of `Σ A_k† A_k`, where `A_k` is the commutator
/// superoperator. Costs a `d² × d²` eigendecomposition.
pub fn commutant_basis(rep: &Representation) -> Result<Vec<ComplexMatrix>> {
    let d = rep.dim();
    let constraints: Vec<ComplexMatrix> = match rep.kind() {
        GroupKind::Finite(g) => {
            g.generating_set().into_iter().map(|k| rep.unitary(&GroupElement::Finite(k))).collect::<Result<_>>()?
        }
        _ => rep.generators().to_vec(),
    };
    let id = ComplexMatrix::identity(d);
    let dd = d * d;
    let mut gram = ComplexMatrix::zeros(dd, dd);
    for c in &constraints {
        // Column-major vec: vec(XC - CX) = (Cᵀ ⊗ I - I ⊗ C) vec(X).
        let ct = ComplexMatrix::from_inner(c.inner().transpose());
        let a = &kron(&ct, &id) - &kron(&id, c);
        gram = &gram + &(&a.adjoint() * &a);
    }
    let eig = linalg::hermitian_eig(&gram.hermitian_part())?;
    let scale = eig.eigenvalues.last().copied().unwrap_or(0.0).max(1.0);
    Ok((0..dd)
        .filter(|&k| eig.eigenvalues[k] <= 1e-9 * scale)
        .map(|k| {
            let v = eig.vector(k);
            ComplexMatrix::from_fn(d, d, |i, j| v[i + j * d])
        })
        .collect())
}

/// Orthogonal projection onto the commutant, realized as the uniform twirl
/// with an exact quadrature; sampling from it needs no explicit basis.
#[derive(Debug, Clone)]
pub struct Commutant {
    rep: Representation,
    average: Twirl,
}

impl Commutant {
    pub fn of(rep: &Representation) -> Result<Self> {
        let average = Twirl::new(rep, &uniform_density(rep, 1)?)?;
        Ok(Self { rep: rep.clone(), average })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// `Σ p(g) |tr U(g)|²`, the trace of the projection superoperator.
    pub fn dimension(&self) -> usize {
        self.average.terms.iter().map(|(u, w)| w * u.trace().norm_sqr()).sum::<f64>().round() as usize
    }

    pub fn basis(&self) -> Result<Vec<ComplexMatrix>> {
        commutant_basis(&self.rep)
    }

    pub fn project(&self, x: &ComplexMatrix) -> ComplexMatrix {
        self.average.apply_operator(x).expect("dimension fixed at construction")
    }

    /// Projection of a Gaussian Hermitian matrix, which is Gaussian and
    /// isotropic on the Hermitian part of the commutant.
    pub fn random_hermitian<R: Rng + ?Sized>(&self, rng: &mut R) -> ComplexMatrix {
        self.project(&crate::random::random_hermitian(self.dim(), rng)).hermitian_part()
    }

    /// `exp(iH)` for a random Hermitian commutant element `H`.
    pub fn random_unitary<R: Rng + ?Sized>(&self, rng: &mut R) -> ComplexMatrix {
        self.random_unitary_scaled(rng, 1.0)
    }

    /// `exp(i·scale·H)`; small scales give unitaries near the identity.
    pub fn random_unitary_scaled<R: Rng + ?Sized>(&self, rng: &mut R, scale: f64) -> ComplexMatrix {
        let h = self.random_hermitian(rng);
        linalg::unitary_from_generator(&h, -scale).expect("Hermitian by construction")
    }

    /// Twirl of a random state.
    pub fn random_state<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<DensityOperator> {
        let rho = crate::random::random_state(self.dim(), rng);
        DensityOperator::new(self.project(rho.matrix()))
    }
}

/// A random unitary `V` with `[V, U(g)] = 0` for every `g`.
pub fn random_symmetric_unitary<R: Rng + ?Sized>(rep: &Representation, rng: &mut R) -> Result<ComplexMatrix> {
    Ok(Commutant::of(rep)?.random_unitary(rng))
}

/// Exact uniform (Haar) twirl: the orthogonal projection onto an explicit
/// commutant basis, with no quadrature involved.
pub fn haar_twirl_exact(rho: &DensityOperator, rep: &Representation) -> Result<DensityOperator> {
    require_dim(rep, rho.dim(), "haar twirl")?;
    let mut out = ComplexMatrix::zeros(rho.dim(), rho.dim());
    for b in commutant_basis(rep)? {
        out = &out + &b.scale_c(b.hs_inner(rho.matrix()));
    }
    DensityOperator::new(out)
}

/// A symmetric ancilla state and a symmetric joint unitary.
#[derive(Debug, Clone)]
pub struct SymmetricDilation {
    system_rep: Representation,
    ancilla_rep: Representation,
    ancilla_state: DensityOperator,
    unitary: ComplexMatrix,
}

impl SymmetricDilation {
    /// Checks `[σ, U_anc(g)] = 0` and `[V, U_sys(g) ⊗ U_anc(g)] = 0`.
    pub fn new(
        system_rep: Representation,
        ancilla_rep: Representation,
        ancilla_state: DensityOperator,
        unitary: ComplexMatrix,
    ) -> Result<Self> {
        if !system_rep.kind().same_group(ancilla_rep.kind()) {
            return Err(Error::GroupMismatch("system and ancilla representations differ in group".into()));
        }
        require_dim(&ancilla_rep, ancilla_state.dim(), "ancilla state")?;
        let joint_dim = system_rep.dim() * ancilla_rep.dim();
        if unitary.nrows() != joint_dim || unitary.ncols() != joint_dim {
            return Err(Error::DimensionMismatch(format!("joint unitary must be {joint_dim}x{joint_dim}")));
        }
        let u_defect = unitary.unitarity_defect();
        if u_defect > DILATION_TOL {
            return Err(Error::InvalidDilation(format!("V is not unitary (defect {u_defect:e})")));
        }
        let sigma_defect = invariance_defect(ancilla_state.matrix(), &ancilla_rep)?;
        if sigma_defect > DILATION_TOL {
            return Err(Error::InvalidDilation(format!("ancilla state is not symmetric (defect {sigma_defect:e})")));
        }
        let joint = crate::groups::tensor_representation(&system_rep, &ancilla_rep)?;
        Self::validate_with_joint(system_rep, ancilla_rep, &joint, ancilla_state, unitary)
    }

    fn validate_with_joint(
        system_rep: Representation,
        ancilla_rep: Representation,
        joint: &Representation,
        ancilla_state: DensityOperator,
        unitary: ComplexMatrix,
    ) -> Result<Self> {
        let v_defect = invariance_defect(&unitary, joint)?;
        if v_defect > DILATION_TOL {
            return Err(Error::InvalidDilation(format!("V is not symmetric (defect {v_defect:e})")));
        }
        Ok(Self { system_rep, ancilla_rep, ancilla_state, unitary })
    }

    /// A random dilation: `σ` a twirled random ancilla state and `V` the
    /// exponential of a random Hermitian element of the joint commutant,
    /// where `joint` is built on the system ⊗ ancilla representation. The
    /// strength of `V` is log-uniform in `[0.01, 1]` so that near-identity
    /// channels are sampled too.
    pub fn random<R: Rng + ?Sized>(
        system_rep: &Representation,
        ancilla: &Commutant,
        joint: &Commutant,
        rng: &mut R,
    ) -> Result<Self> {
        let ancilla_rep = ancilla.representation();
        if joint.dim() != system_rep.dim() * ancilla_rep.dim() {
            return Err(Error::DimensionMismatch("joint commutant does not match system and ancilla".into()));
        }
        let sigma = ancilla.random_state(rng)?;
        let scale = 10f64.powf(-2.0 * rng.random::<f64>());
        let v = joint.random_unitary_scaled(rng, scale);
        require_dim(ancilla_rep, sigma.dim(), "ancilla state")?;
        let sigma_defect = invariance_defect(sigma.matrix(), ancilla_rep)?;
        if sigma_defect > DILATION_TOL {
            return Err(Error::Numerical(format!("twirled ancilla state is not symmetric (defect {sigma_defect:e})")));
        }
        Self::validate_with_joint(system_rep.clone(), ancilla_rep.clone(), joint.representation(), sigma, v)
    }

    pub fn system_rep(&self) -> &Representation {
        &self.system_rep
    }

    pub fn ancilla_rep(&self) -> &Representation {
        &self.ancilla_rep
    }

    pub fn ancilla_state(&self) -> &DensityOperator {
        &self.ancilla_state
    }

    pub fn unitary(&self) -> &ComplexMatrix {
        &self.unitary
    }
}

/// The channel `ρ ↦ tr_a[V (ρ ⊗ σ) V†]` with Kraus operators
/// `K_ij = √μ_j (I ⊗ ⟨a_i|) V (I ⊗ |b_j⟩)`, where `σ = Σ μ_j |b_j⟩⟨b_j|`.
pub fn symmetric_dilation_channel(dilation: &SymmetricDilation) -> Result<KrausChannel> {
    let ds = dilation.system_rep.dim();
    let da = dilation.ancilla_rep.dim();
    let eig = dilation.ancilla_state.eig();
    let v = dilation.unitary.inner();
    let mut ops = Vec::new();
    for (j, &mu) in eig.eigenvalues.iter().enumerate() {
        if mu <= 1e-15 {
            continue;
        }
        let b = eig.vector(j);
        let amp = Complex64::new(mu.sqrt(), 0.0);
        for i in 0..da {
            ops.push(ComplexMatrix::from_fn(ds, ds, |r, c| {
                let mut acc = C_ZERO;
                for (k, bk) in b.iter().enumerate() {
                    acc += v[(r * da + i, c * da + k)] * bk;
                }
                acc * amp
            }));
        }
    }
    KrausChannel::new(ops).map_err(|e| match e {
        Error::NotTracePreserving(d) => Error::Numerical(format!("dilation channel lost trace preservation ({d:e})")),
        other => other,
    })
}

/// The measure-and-prepare channel `ℰ_ρ(X) = Σ_g ⟨g|X|g⟩ T(g) ρ T(g)†` from
/// the regular representation space to the space of `target_rep`.
///
/// No `1/|G|` prefactor is applied: with it, `ℰ_ρ(|e⟩⟨e|)` would have trace
/// `1/|G|` instead of being `ρ`.
pub fn encoder_channel(
    group: &FiniteGroup,
    regular: &Representation,
    target_rep: &Representation,
    target: &DensityOperator,
) -> Result<KrausChannel> {
    let expected = left_regular_representation(group);
    if !regular.kind().same_group(expected.kind()) || !target_rep.kind().same_group(expected.kind()) {
        return Err(Error::GroupMismatch("encoder representations must both be of the given group".into()));
    }
    for g in 0..group.order() {
        let e = GroupElement::Finite(g);
        if regular.unitary(&e)?.max_abs_diff(&expected.unitary(&e)?) > 1e-12 {
            return Err(Error::GroupMismatch("input representation is not the left regular representation".into()));
        }
    }
    require_dim(target_rep, target.dim(), "encoder target")?;
    let n = group.order();
    let d = target.dim();
    let eig = target.eig();
    let mut ops = Vec::new();
    for g in 0..n {
        let t = target_rep.unitary(&GroupElement::Finite(g))?;
        for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
            if lambda <= 1e-15 {
                continue;
            }
            let v = eig.vector(k);
            let tv: Vec<Complex64> = (0..d).map(|r| (0..d).map(|c| t.get(r, c) * v[c]).sum()).collect();
            let amp = lambda.sqrt();
            ops.push(ComplexMatrix::from_fn(d, n, |r, c| if c == g { tv[r] * amp } else { C_ZERO }));
        }
    }
    KrausChannel::new(ops)
}
