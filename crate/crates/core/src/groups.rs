//! Symmetry groups and their unitary representations.
//!
//! Three group kinds are supported: finite groups given by a multiplication
//! table, the phase group U(1) and SU(2). Finite representations store one
//! unitary per element; Lie representations store Hermitian generators and
//! exponentiate on demand.
//!
//! Sign conventions: U(1) acts as `φ ↦ exp(iφN)` and SU(2) as
//! `(n̂, θ) ↦ exp(-iθ J·n̂)`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, kron, ComplexMatrix, C_I, C_ONE, C_ZERO};

/// Tolerance for unitarity of representation matrices.
pub const UNITARY_TOL: f64 = 1e-10;

/// Tolerance for `U(g)U(h) = U(gh)`.
pub const HOMOMORPHISM_TOL: f64 = 1e-9;

/// Weights of a [`GroupDensity`] must sum to one within this tolerance.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    #[serde(skip)]
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table: Latin square, two-sided identity, associativity
    /// on every triple.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("group must have at least one element".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidGroup(format!("{} labels for a table of order {n}", labels.len())));
        }
        if identity >= n {
            return Err(Error::InvalidGroup(format!("identity index {identity} out of range")));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has length {}, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} in row {i} out of range")));
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen_row[table[i][j]], true) {
                    return Err(Error::InvalidGroup(format!("row {i} is not a permutation")));
                }
                if std::mem::replace(&mut seen_col[table[j][i]], true) {
                    return Err(Error::InvalidGroup(format!("column {i} is not a permutation")));
                }
            }
        }
        for (g, row) in table.iter().enumerate() {
            if table[identity][g] != g || row[identity] != g {
                return Err(Error::InvalidGroup(format!("index {identity} is not a two-sided identity")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let mut group = Self { labels, table, identity, inverses: Vec::new() };
        group.inverses = (0..n)
            .map(|g| (0..n).find(|&h| group.table[g][h] == identity).expect("Latin square has inverses"))
            .collect();
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Product `gh`.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// A small generating set, built greedily.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        for candidate in 0..n {
            if reached[candidate] {
                continue;
            }
            gens.push(candidate);
            // Closure of the current generators.
            let mut frontier: Vec<usize> = (0..n).filter(|&g| reached[g]).collect();
            while let Some(g) = frontier.pop() {
                for &s in &gens {
                    let gs = self.table[g][s];
                    if !reached[gs] {
                        reached[gs] = true;
                        frontier.push(gs);
                    }
                }
            }
        }
        gens
    }
}

/// The cyclic group `Z_n` (addition mod `n`, identity at index 0).
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group order must be positive".into()));
    }
    let labels = (0..n).map(|k| k.to_string()).collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::new(labels, table, 0)
}

/// An SU(2) element stored as a unit quaternion `(w, x, y, z)`; its
/// spin-½ image is `w I - i (x σ_x + y σ_y + z σ_z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    q: [f64; 4],
}

impl Rotation {
    pub fn identity() -> Self {
        Self { q: [1.0, 0.0, 0.0, 0.0] }
    }

    /// Rotation by `angle` about `axis` (normalized internally).
    pub fn axis_angle(axis: [f64; 3], angle: f64) -> Result<Self> {
        let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        if norm.is_nan() || norm <= 0.0 || !norm.is_finite() || !angle.is_finite() {
            return Err(Error::InvalidArgument(format!("bad rotation axis {axis:?} / angle {angle}")));
        }
        let (s, c) = (angle / 2.0).sin_cos();
        Ok(Self { q: [c, s * axis[0] / norm, s * axis[1] / norm, s * axis[2] / norm] })
    }

    pub fn about_z(angle: f64) -> Self {
        Self::axis_angle([0.0, 0.0, 1.0], angle).expect("finite angle")
    }

    pub fn about_y(angle: f64) -> Self {
        Self::axis_angle([0.0, 1.0, 0.0], angle).expect("finite angle")
    }

    /// `R_z(α) R_y(β) R_z(γ)`.
    pub fn euler_zyz(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::about_z(alpha).compose(&Self::about_y(beta)).compose(&Self::about_z(gamma))
    }

    /// Group product `self · other` (Hamilton product).
    pub fn compose(&self, other: &Self) -> Self {
        let [a0, a1, a2, a3] = self.q;
        let [b0, b1, b2, b3] = other.q;
        Self {
            q: [
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            ],
        }
    }

    pub fn inverse(&self) -> Self {
        let [w, x, y, z] = self.q;
        Self { q: [w, -x, -y, -z] }
    }

    pub fn quaternion(&self) -> [f64; 4] {
        self.q
    }

    /// Axis and angle in `[0, 2π]` with `q = (cos θ/2, sin θ/2 · n̂)`.
    pub fn to_axis_angle(&self) -> ([f64; 3], f64) {
        let [w, x, y, z] = self.q;
        let s = (x * x + y * y + z * z).sqrt();
        let angle = 2.0 * s.atan2(w);
        if s < 1e-300 {
            ([0.0, 0.0, 1.0], angle)
        } else {
            ([x / s, y / s, z / s], angle)
        }
    }
}

/// A group element of any supported kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroupElement {
    /// Index into a finite group's table.
    Finite(usize),
    /// A U(1) phase `φ`.
    Phase(f64),
    Rotation(Rotation),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Finite(g) => write!(f, "#{g}"),
            GroupElement::Phase(phi) => write!(f, "phase({phi})"),
            GroupElement::Rotation(r) => {
                let (axis, angle) = r.to_axis_angle();
                write!(f, "rot([{:.6}, {:.6}, {:.6}], {angle})", axis[0], axis[1], axis[2])
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupKind {
    Finite(FiniteGroup),
    U1,
    Su2,
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::Finite(_) => "finite",
            GroupKind::U1 => "u1",
            GroupKind::Su2 => "su2",
        }
    }

    pub fn same_group(&self, other: &GroupKind) -> bool {
        match (self, other) {
            (GroupKind::Finite(a), GroupKind::Finite(b)) => a.table == b.table && a.identity == b.identity,
            (GroupKind::U1, GroupKind::U1) | (GroupKind::Su2, GroupKind::Su2) => true,
            _ => false,
        }
    }

    /// Group product, for elements of this kind.
    pub fn compose(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        match (self, g, h) {
            (GroupKind::Finite(grp), GroupElement::Finite(a), GroupElement::Finite(b)) => {
                Ok(GroupElement::Finite(grp.mul(*a, *b)))
            }
            (GroupKind::U1, GroupElement::Phase(a), GroupElement::Phase(b)) => Ok(GroupElement::Phase(a + b)),
            (GroupKind::Su2, GroupElement::Rotation(a), GroupElement::Rotation(b)) => {
                Ok(GroupElement::Rotation(a.compose(b)))
            }
            _ => Err(Error::GroupMismatch(format!("cannot compose {g} and {h} in a {} group", self.name()))),
        }
    }

    pub fn identity_element(&self) -> GroupElement {
        match self {
            GroupKind::Finite(g) => GroupElement::Finite(g.identity()),
            GroupKind::U1 => GroupElement::Phase(0.0),
            GroupKind::Su2 => GroupElement::Rotation(Rotation::identity()),
        }
    }
}

#[derive(Debug, Clone)]
enum Action {
    Finite(Vec<ComplexMatrix>),
    Lie(Vec<ComplexMatrix>),
}

/// A unitary representation `g ↦ U(g)` on a `dim`-dimensional space.
#[derive(Debug, Clone)]
pub struct Representation {
    kind: GroupKind,
    dim: usize,
    action: Action,
    label: String,
}

impl Representation {
    /// A finite-group representation from one unitary per element, checked
    /// for unitarity and the homomorphism property on every pair.
    pub fn from_finite(group: FiniteGroup, unitaries: Vec<ComplexMatrix>, label: impl Into<String>) -> Result<Self> {
        let n = group.order();
        if unitaries.len() != n {
            return Err(Error::NotRepresentation(format!("{} matrices for a group of order {n}", unitaries.len())));
        }
        let dim = unitaries[0].nrows();
        for (g, u) in unitaries.iter().enumerate() {
            if u.nrows() != dim || u.ncols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "U({g}) is {}x{}, expected {dim}x{dim}",
                    u.nrows(),
                    u.ncols()
                )));
            }
            let defect = u.unitarity_defect();
            if defect > UNITARY_TOL {
                return Err(Error::NotRepresentation(format!("U({g}) not unitary (defect {defect:e})")));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let err = (&unitaries[g] * &unitaries[h]).max_abs_diff(&unitaries[group.mul(g, h)]);
                if err > HOMOMORPHISM_TOL {
                    return Err(Error::NotRepresentation(format!("U({g})U({h}) != U({g}{h}) (deviation {err:e})")));
                }
            }
        }
        Ok(Self { kind: GroupKind::Finite(group), dim, action: Action::Finite(unitaries), label: label.into() })
    }

    fn from_generators(kind: GroupKind, generators: Vec<ComplexMatrix>, label: String) -> Result<Self> {
        let dim = generators[0].nrows();
        for l in &generators {
            if l.nrows() != dim || !l.is_hermitian(1e-12) {
                return Err(Error::NotHermitian(l.hermiticity_defect()));
            }
        }
        Ok(Self { kind, dim, action: Action::Lie(generators), label })
    }

    /// The representation acting as the identity on a `dim`-dimensional space.
    pub fn trivial(kind: GroupKind, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        match kind {
            GroupKind::Finite(group) => {
                let us = vec![ComplexMatrix::identity(dim); group.order()];
                Self::from_finite(group, us, format!("trivial:{dim}"))
            }
            GroupKind::U1 => {
                Self::from_generators(GroupKind::U1, vec![ComplexMatrix::zeros(dim, dim)], format!("trivial:u1:{dim}"))
            }
            GroupKind::Su2 => Self::from_generators(
                GroupKind::Su2,
                vec![ComplexMatrix::zeros(dim, dim); 3],
                format!("trivial:su2:{dim}"),
            ),
        }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn finite_group(&self) -> Option<&FiniteGroup> {
        match &self.kind {
            GroupKind::Finite(g) => Some(g),
            _ => None,
        }
    }

    /// Hermitian generators: `[N]` for U(1), `[J_x, J_y, J_z]` for SU(2),
    /// empty for finite groups.
    pub fn generators(&self) -> &[ComplexMatrix] {
        match &self.action {
            Action::Finite(_) => &[],
            Action::Lie(gens) => gens,
        }
    }

    /// Generator by name: `x`, `y`, `z` for SU(2); `n` (or `z`) for U(1).
    pub fn generator(&self, name: &str) -> Result<&ComplexMatrix> {
        let idx = match (&self.kind, name) {
            (GroupKind::Su2, "x") => 0,
            (GroupKind::Su2, "y") => 1,
            (GroupKind::Su2, "z") => 2,
            (GroupKind::U1, "n" | "z") => 0,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "no generator '{name}' for a {} representation",
                    self.kind.name()
                )))
            }
        };
        Ok(&self.generators()[idx])
    }

    /// `J·n̂` for SU(2) representations.
    pub fn generator_along(&self, axis: [f64; 3]) -> Result<ComplexMatrix> {
        match (&self.kind, &self.action) {
            (GroupKind::Su2, Action::Lie(j)) => {
                let mut out = ComplexMatrix::zeros(self.dim, self.dim);
                for (k, jk) in j.iter().enumerate() {
                    out = &out + &jk.scale(axis[k]);
                }
                Ok(out)
            }
            _ => Err(Error::GroupMismatch("axis generators exist only for SU(2)".into())),
        }
    }

    /// The representing unitary `U(g)`.
    pub fn unitary(&self, g: &GroupElement) -> Result<ComplexMatrix> {
        match (&self.action, &self.kind, g) {
            (Action::Finite(us), _, GroupElement::Finite(k)) => {
                us.get(*k).cloned().ok_or_else(|| Error::InvalidArgument(format!("element index {k} out of range")))
            }
            (Action::Lie(gens), GroupKind::U1, GroupElement::Phase(phi)) => {
                linalg::unitary_from_generator(&gens[0], -phi)
            }
            (Action::Lie(_), GroupKind::Su2, GroupElement::Rotation(r)) => {
                let (axis, angle) = r.to_axis_angle();
                linalg::unitary_from_generator(&self.generator_along(axis)?, angle)
            }
            _ => Err(Error::GroupMismatch(format!("element {g} does not belong to a {} group", self.kind.name()))),
        }
    }

    /// Elements used to certify covariance: every element of a finite group;
    /// for Lie groups, one-parameter elements along each generator plus a
    /// fixed spread of generic elements.
    pub fn check_elements(&self) -> Vec<GroupElement> {
        match &self.kind {
            GroupKind::Finite(g) => (0..g.order()).map(GroupElement::Finite).collect(),
            GroupKind::U1 => [0.3, 1.1, 2.5, PI, 4.4, 5.9].into_iter().map(GroupElement::Phase).collect(),
            GroupKind::Su2 => {
                let mut out = Vec::new();
                for axis in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] {
                    for angle in [0.3, 1.1, 2.5] {
                        out.push(GroupElement::Rotation(Rotation::axis_angle(axis, angle).expect("unit axis")));
                    }
                }
                out.extend(self.sample_elements(8));
                out
            }
        }
    }

    /// Deterministic sample of `n` elements: all elements for finite groups,
    /// an even phase grid for U(1), a golden-ratio spread of Euler angles
    /// for SU(2).
    pub fn sample_elements(&self, n: usize) -> Vec<GroupElement> {
        match &self.kind {
            GroupKind::Finite(g) => (0..g.order()).map(GroupElement::Finite).collect(),
            GroupKind::U1 => (0..n).map(|k| GroupElement::Phase(2.0 * PI * k as f64 / n as f64)).collect(),
            GroupKind::Su2 => {
                let phi = 0.5 * (1.0 + 5f64.sqrt());
                (0..n)
                    .map(|k| {
                        let t = k as f64 + 0.5;
                        let alpha = 2.0 * PI * (t / phi).fract();
                        let beta = (1.0 - 2.0 * t / n as f64).clamp(-1.0, 1.0).acos();
                        let gamma = 2.0 * PI * (t / (phi * phi)).fract();
                        GroupElement::Rotation(Rotation::euler_zyz(alpha, beta, gamma))
                    })
                    .collect()
            }
        }
    }

    /// Restriction of a Lie representation to the cyclic subgroup
    /// generated by a rotation of `2π/n` about the named generator; the
    /// result is a representation of `Z_n`.
    pub fn restrict_to_cyclic(&self, generator: &str, n: usize) -> Result<Self> {
        let group = cyclic_group(n)?;
        let step = 2.0 * PI / n as f64;
        let element = |k: usize| -> Result<GroupElement> {
            let angle = step * k as f64;
            Ok(match (&self.kind, generator) {
                (GroupKind::U1, _) => GroupElement::Phase(angle),
                (GroupKind::Su2, "x") => GroupElement::Rotation(Rotation::axis_angle([1.0, 0.0, 0.0], angle)?),
                (GroupKind::Su2, "y") => GroupElement::Rotation(Rotation::axis_angle([0.0, 1.0, 0.0], angle)?),
                (GroupKind::Su2, "z") => GroupElement::Rotation(Rotation::about_z(angle)),
                _ => {
                    return Err(Error::GroupMismatch(format!(
                        "cannot restrict a {} representation along '{generator}'",
                        self.kind.name()
                    )))
                }
            })
        };
        let us = (0..n).map(|k| self.unitary(&element(k)?)).collect::<Result<Vec<_>>>()?;
        Self::from_finite(group, us, format!("{}|z{n}", self.label))
    }
}

/// Left regular representation: `U(g)|h⟩ = |gh⟩`.
pub fn left_regular_representation(group: &FiniteGroup) -> Representation {
    let n = group.order();
    let us = (0..n)
        .map(|g| ComplexMatrix::from_fn(n, n, |row, h| if row == group.mul(g, h) { C_ONE } else { C_ZERO }))
        .collect();
    Representation {
        kind: GroupKind::Finite(group.clone()),
        dim: n,
        action: Action::Finite(us),
        label: format!("regular:{n}"),
    }
}

/// Right regular representation: `V_R(g)|h⟩ = |hg⁻¹⟩`.
pub fn right_regular_representation(group: &FiniteGroup) -> Representation {
    let n = group.order();
    let us = (0..n)
        .map(|g| {
            let ginv = group.inverse(g);
            ComplexMatrix::from_fn(n, n, |row, h| if row == group.mul(h, ginv) { C_ONE } else { C_ZERO })
        })
        .collect();
    Representation {
        kind: GroupKind::Finite(group.clone()),
        dim: n,
        action: Action::Finite(us),
        label: format!("right-regular:{n}"),
    }
}

/// Phase representation of `Z_n`: `T(k) = diag(exp(2πi k c / n))` over the
/// given integer charges `c`.
pub fn cyclic_phase_representation(n: usize, charges: &[i64]) -> Result<Representation> {
    if charges.is_empty() {
        return Err(Error::InvalidArgument("charge list must be nonempty".into()));
    }
    let group = cyclic_group(n)?;
    let us = (0..n)
        .map(|k| {
            let phases: Vec<Complex64> = charges
                .iter()
                .map(|&c| Complex64::from_polar(1.0, 2.0 * PI * (k as f64) * (c as f64) / n as f64))
                .collect();
            ComplexMatrix::from_fn(charges.len(), charges.len(), |i, j| if i == j { phases[i] } else { C_ZERO })
        })
        .collect();
    let spec: Vec<String> = charges.iter().map(|c| c.to_string()).collect();
    Representation::from_finite(group, us, format!("z_n:{n}:{}", spec.join(",")))
}

/// Angular momentum operators `(J_x, J_y, J_z)` for spin `j` in the basis
/// `|j, j⟩, |j, j-1⟩, …, |j, -j⟩` (ħ = 1).
pub fn spin_operators(j: f64) -> Result<[ComplexMatrix; 3]> {
    let two_j = 2.0 * j;
    if two_j.is_nan() || two_j < 0.0 || (two_j - two_j.round()).abs() > 1e-12 || two_j > 1000.0 {
        return Err(Error::InvalidSpin(two_j));
    }
    let d = two_j.round() as usize + 1;
    let m = |i: usize| j - i as f64;
    // J+ |j, m⟩ = sqrt(j(j+1) - m(m+1)) |j, m+1⟩; basis index i has m = j - i.
    let jplus = ComplexMatrix::from_fn(d, d, |row, col| {
        if col >= 1 && row == col - 1 {
            let mc = m(col);
            Complex64::new((j * (j + 1.0) - mc * (mc + 1.0)).sqrt(), 0.0)
        } else {
            C_ZERO
        }
    });
    let jminus = jplus.adjoint();
    let jx = (&jplus + &jminus).scale(0.5);
    let jy = (&jplus - &jminus).scale_c(C_I * -0.5);
    let jz = ComplexMatrix::from_diagonal(&(0..d).map(m).collect::<Vec<_>>());
    Ok([jx, jy, jz])
}

/// Spin-`j` representation of SU(2) (of SO(3) for integer `j`).
pub fn spin_j_representation(j: f64) -> Result<Representation> {
    let [jx, jy, jz] = spin_operators(j)?;
    Representation::from_generators(GroupKind::Su2, vec![jx, jy, jz], format!("su2:{j}"))
}

/// U(1) representation `φ ↦ exp(iφN)` with `N = diag(spectrum)`.
pub fn u1_number_representation(spectrum: &[i64]) -> Result<Representation> {
    if spectrum.is_empty() {
        return Err(Error::InvalidArgument("spectrum must be nonempty".into()));
    }
    let n = ComplexMatrix::from_diagonal(&spectrum.iter().map(|&x| x as f64).collect::<Vec<_>>());
    let spec: Vec<String> = spectrum.iter().map(|c| c.to_string()).collect();
    Representation::from_generators(GroupKind::U1, vec![n], format!("u1:{}", spec.join(",")))
}

/// `g ↦ U₁(g) ⊗ U₂(g)`; generators `L₁ ⊗ I + I ⊗ L₂` for Lie groups.
pub fn tensor_representation(r1: &Representation, r2: &Representation) -> Result<Representation> {
    if !r1.kind.same_group(&r2.kind) {
        return Err(Error::GroupMismatch(format!(
            "cannot tensor a {} representation with a {} representation",
            r1.kind.name(),
            r2.kind.name()
        )));
    }
    let label = format!("tensor:{}*{}", r1.label, r2.label);
    let dim = r1.dim * r2.dim;
    let action = match (&r1.action, &r2.action) {
        (Action::Finite(a), Action::Finite(b)) => Action::Finite(a.iter().zip(b).map(|(x, y)| kron(x, y)).collect()),
        (Action::Lie(a), Action::Lie(b)) => {
            let i1 = ComplexMatrix::identity(r1.dim);
            let i2 = ComplexMatrix::identity(r2.dim);
            Action::Lie(a.iter().zip(b).map(|(x, y)| &kron(x, &i2) + &kron(&i1, y)).collect())
        }
        _ => return Err(Error::GroupMismatch("inconsistent representation actions".into())),
    };
    Ok(Representation { kind: r1.kind.clone(), dim, action, label })
}

/// A normalized distribution over group elements (exact weights for finite
/// groups, quadrature nodes for Lie groups).
#[derive(Debug, Clone)]
pub struct GroupDensity {
    nodes: Vec<(GroupElement, f64)>,
    label: String,
}

impl GroupDensity {
    pub fn new(nodes: Vec<(GroupElement, f64)>, label: impl Into<String>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidArgument("density needs at least one node".into()));
        }
        if let Some((_, w)) = nodes.iter().find(|(_, w)| w.is_nan() || *w < 0.0 || !w.is_finite()) {
            return Err(Error::InvalidArgument(format!("negative or non-finite weight {w}")));
        }
        let total: f64 = nodes.iter().map(|(_, w)| w).sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidArgument(format!("weights sum to {total}, expected 1")));
        }
        Ok(Self { nodes, label: label.into() })
    }

    /// Point mass at one element.
    pub fn point(g: GroupElement) -> Self {
        Self { nodes: vec![(g, 1.0)], label: format!("point:{g}") }
    }

    pub fn nodes(&self) -> &[(GroupElement, f64)] {
        &self.nodes
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Largest gap between eigenvalues of `l`, and whether all gaps are integers.
fn spectral_spread(l: &ComplexMatrix) -> Result<(f64, bool)> {
    let eig = linalg::hermitian_eig(l)?;
    let ev = &eig.eigenvalues;
    let spread = ev.last().unwrap_or(&0.0) - ev.first().unwrap_or(&0.0);
    let integral = ev.iter().all(|x| (x - ev[0] - (x - ev[0]).round()).abs() < 1e-9);
    Ok((spread, integral))
}

/// Number of equally spaced points on `[0, 2π)` that averages
/// `exp(iφ(n - m))` to `δ_nm` for every pair of eigenvalues of `l`.
pub fn minimal_exact_grid(l: &ComplexMatrix) -> Result<usize> {
    let (spread, integral) = spectral_spread(l)?;
    if !integral {
        return Err(Error::InvalidArgument("generator eigenvalue gaps are not integers".into()));
    }
    Ok(spread.round() as usize + 1)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` (Golub–Welsch).
pub fn gauss_legendre(k: usize) -> Vec<(f64, f64)> {
    let jacobi = ComplexMatrix::from_fn(k, k, |i, j| {
        let m = i.min(j) + 1;
        if i.abs_diff(j) == 1 {
            let m = m as f64;
            Complex64::new(m / (4.0 * m * m - 1.0).sqrt(), 0.0)
        } else {
            C_ZERO
        }
    });
    let eig = linalg::hermitian_eig_unchecked(&jacobi);
    (0..k).map(|i| (eig.eigenvalues[i], 2.0 * eig.eigenvectors.get(0, i).norm_sqr())).collect()
}

/// Uniform (Haar) density. Finite groups get exact `1/|G|` weights; U(1)
/// gets an even phase grid of at least the minimal exact size; SU(2) gets an
/// Euler-angle product rule (even grids in α, γ; Gauss–Legendre in cos β)
/// sized to be exact for twirling in this representation.
pub fn uniform_density(rep: &Representation, resolution: usize) -> Result<GroupDensity> {
    match rep.kind() {
        GroupKind::Finite(g) => {
            let w = 1.0 / g.order() as f64;
            GroupDensity::new((0..g.order()).map(|k| (GroupElement::Finite(k), w)).collect(), "uniform")
        }
        GroupKind::U1 => {
            let m = resolution.max(minimal_exact_grid(&rep.generators()[0])?);
            let w = 1.0 / m as f64;
            let nodes = (0..m).map(|k| (GroupElement::Phase(2.0 * PI * k as f64 / m as f64), w)).collect();
            GroupDensity::new(nodes, format!("uniform:{m}"))
        }
        GroupKind::Su2 => {
            let jz = &rep.generators()[2];
            let (spread, _) = spectral_spread(jz)?;
            // Highest weight J = spread / 2 for the representations built here.
            let max_j = spread / 2.0;
            let m = resolution.max(spread.round() as usize + 1);
            let k = resolution.max(max_j.ceil() as usize + 1);
            let gl = gauss_legendre(k);
            let mut nodes = Vec::with_capacity(m * m * k);
            for a in 0..m {
                let alpha = 2.0 * PI * a as f64 / m as f64;
                for &(x, wx) in &gl {
                    let beta = x.clamp(-1.0, 1.0).acos();
                    for c in 0..m {
                        let gamma = 2.0 * PI * c as f64 / m as f64;
                        let w = wx / 2.0 / (m * m) as f64;
                        nodes.push((GroupElement::Rotation(Rotation::euler_zyz(alpha, beta, gamma)), w));
                    }
                }
            }
            let total: f64 = nodes.iter().map(|(_, w)| w).sum();
            for node in nodes.iter_mut() {
                node.1 /= total;
            }
            GroupDensity::new(nodes, format!("uniform:euler:{m}x{k}x{m}"))
        }
    }
}

/// Uniform density over rotations about ẑ, vanishing elsewhere.
pub fn subgroup_density_z_axis(rep: &Representation, resolution: usize) -> Result<GroupDensity> {
    if !matches!(rep.kind(), GroupKind::Su2) {
        return Err(Error::GroupMismatch("z-axis density needs an SU(2) representation".into()));
    }
    let m = resolution.max(minimal_exact_grid(rep.generator("z")?)?);
    let w = 1.0 / m as f64;
    let nodes =
        (0..m).map(|k| (GroupElement::Rotation(Rotation::about_z(2.0 * PI * k as f64 / m as f64)), w)).collect();
    GroupDensity::new(nodes, format!("z-axis:{m}"))
}
