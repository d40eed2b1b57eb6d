mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use asymmetry::experiments::run_by_id;
use asymmetry::groups::{
    cyclic_group, cyclic_phase_representation, left_regular_representation, right_regular_representation,
    spin_j_representation, tensor_representation, u1_number_representation, uniform_density, FiniteGroup, GroupElement,
    Representation, Rotation,
};
use asymmetry::linalg::{hermitian_eig, matrix_power, trace_norm, von_neumann_entropy, ComplexMatrix};
use asymmetry::measures;
use asymmetry::quantum::{
    apply_channel, encoder_channel, is_symmetric_channel, symmetric_dilation_channel, Commutant, DensityOperator,
    KrausChannel, SymmetricDilation, Twirl,
};
use asymmetry::random;

use common::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn s3() -> FiniteGroup {
    // Permutations of three points, composed as (gh)(x) = g(h(x)).
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table = perms.iter().map(|g| perms.iter().map(|h| index([g[h[0]], g[h[1]], g[h[2]]])).collect()).collect();
    FiniteGroup::new((0..6).map(|k| format!("p{k}")).collect(), table, 0).unwrap()
}

fn unitary_defect(u: &ComplexMatrix) -> f64 {
    let n = u.nrows();
    (&(&u.adjoint() * u) - &ComplexMatrix::identity(n)).max_abs()
}

/// Kraus operators read off a random isometry `d → d·k`.
fn random_channel(d: usize, k: usize, r: &mut ChaCha8Rng) -> KrausChannel {
    let u = random::random_unitary(d * k, r);
    let ops = (0..k).map(|j| ComplexMatrix::from_fn(d, d, |row, col| u.get(j * d + row, col))).collect();
    KrausChannel::new(ops).unwrap()
}

fn lie_reps() -> Vec<Representation> {
    let half = spin_j_representation(0.5).unwrap();
    vec![
        u1_number_representation(&[0, 1, 3, -2]).unwrap(),
        spin_j_representation(1.0).unwrap(),
        spin_j_representation(2.0).unwrap(),
        tensor_representation(&half, &spin_j_representation(1.5).unwrap()).unwrap(),
    ]
}

fn random_element(rep: &Representation, r: &mut ChaCha8Rng) -> GroupElement {
    use rand::Rng;
    match rep.kind() {
        asymmetry::groups::GroupKind::Finite(g) => GroupElement::Finite(r.random_range(0..g.order())),
        asymmetry::groups::GroupKind::U1 => GroupElement::Phase(r.random_range(-7.0..7.0)),
        asymmetry::groups::GroupKind::Su2 => GroupElement::Rotation(Rotation::euler_zyz(
            r.random_range(0.0..6.3),
            r.random_range(0.0..3.2),
            r.random_range(0.0..6.3),
        )),
    }
}

// linear algebra

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eig_reconstructs(seed: u64, d in 1usize..=64) {
        let h = random::random_hermitian(d, &mut rng(seed));
        let e = hermitian_eig(&h).unwrap();
        let scale = h.frobenius_norm().max(1.0);
        prop_assert!(e.reconstruct().distance(&h) <= 1e-10 * scale);
        prop_assert!(unitary_defect(&e.eigenvectors) <= 1e-10);
        prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn entropy_is_unitarily_invariant(seed: u64, d in 1usize..=12) {
        let mut r = rng(seed);
        let rho = random::random_state(d, &mut r);
        let u = random::random_unitary(d, &mut r);
        let s1 = von_neumann_entropy(&rho).unwrap();
        let s2 = von_neumann_entropy(&rho.conjugate_by(&u).unwrap()).unwrap();
        prop_assert!((s1 - s2).abs() <= 1e-9);
        prop_assert!(s1 >= -1e-12 && s1 <= (d as f64).log2() + 1e-9);
    }

    #[test]
    fn trace_norm_triangle(seed: u64, d in 1usize..=12) {
        let mut r = rng(seed);
        let a = random::random_ginibre(d, d, &mut r);
        let b = random::random_ginibre(d, d, &mut r);
        let sum = trace_norm(&(&a + &b)).unwrap();
        prop_assert!(sum <= trace_norm(&a).unwrap() + trace_norm(&b).unwrap() + 1e-9);
    }

    #[test]
    fn first_power_is_identity_map(seed: u64, d in 1usize..=12) {
        let rho = random::random_state(d, &mut rng(seed));
        let p = matrix_power(rho.matrix(), 1.0).unwrap();
        prop_assert!(p.max_abs_diff(rho.matrix()) <= 1e-10);
    }
}

// representations

#[test]
fn finite_homomorphism_exhaustive() {
    let mut reps = vec![left_regular_representation(&s3()), right_regular_representation(&s3())];
    for n in 1..=16 {
        let g = cyclic_group(n).unwrap();
        reps.push(left_regular_representation(&g));
        reps.push(right_regular_representation(&g));
        let charges: Vec<i64> = (0..n as i64).map(|k| 3 * k - 1).collect();
        reps.push(cyclic_phase_representation(n, &charges).unwrap());
    }
    for rep in &reps {
        let group = rep.finite_group().unwrap();
        let u: Vec<ComplexMatrix> =
            (0..group.order()).map(|g| rep.unitary(&GroupElement::Finite(g)).unwrap()).collect();
        for g in 0..group.order() {
            assert!(unitary_defect(&u[g]) <= 1e-10);
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                assert!((&u[g] * &u[h]).max_abs_diff(&u[gh]) <= 1e-9, "{}: {g}*{h}", rep.label());
                if group.is_abelian() {
                    assert!(u[g].commutator(&u[h]).max_abs() <= 1e-10);
                }
            }
        }
    }
}

#[test]
fn left_and_right_regular_commute() {
    let mut groups = vec![s3()];
    groups.extend((1..=16).map(|n| cyclic_group(n).unwrap()));
    for group in groups {
        let left = left_regular_representation(&group);
        let right = right_regular_representation(&group);
        for g in 0..group.order() {
            for h in 0..group.order() {
                let a = left.unitary(&GroupElement::Finite(g)).unwrap();
                let b = right.unitary(&GroupElement::Finite(h)).unwrap();
                assert!(a.commutator(&b).max_abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn lie_homomorphism_sampled() {
    let mut r = rng(11);
    for rep in lie_reps() {
        for l in rep.generators() {
            assert!(l.hermiticity_defect() <= 1e-12);
        }
        for _ in 0..100 {
            let g = random_element(&rep, &mut r);
            let h = random_element(&rep, &mut r);
            let gh = rep.kind().compose(&g, &h).unwrap();
            let (ug, uh, ugh) = (rep.unitary(&g).unwrap(), rep.unitary(&h).unwrap(), rep.unitary(&gh).unwrap());
            assert!(unitary_defect(&ug) <= 1e-10);
            assert!((&ug * &uh).max_abs_diff(&ugh) <= 1e-9, "{}", rep.label());
        }
    }
}

// channels and twirls

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn channels_preserve_states(seed: u64, d in 1usize..=6, k in 1usize..=4) {
        let mut r = rng(seed);
        let ch = random_channel(d, k, &mut r);
        let rho = random::random_state(d, &mut r);
        let out = apply_channel(&ch, &rho).unwrap();
        prop_assert!((out.matrix().trace().re - 1.0).abs() <= 1e-9);
        let min = hermitian_eig(out.matrix()).unwrap().eigenvalues[0];
        prop_assert!(min >= -1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn uniform_twirl_is_symmetric_projection(seed: u64, which in 0usize..4) {
        let rep = &lie_reps()[which];
        let mut r = rng(seed);
        let tw = Twirl::new(rep, &uniform_density(rep, 1).unwrap()).unwrap();
        let rho = random::random_state(rep.dim(), &mut r);
        let once = tw.apply(&rho).unwrap();
        let twice = tw.apply(&once).unwrap();
        prop_assert!(twice.matrix().max_abs_diff(once.matrix()) <= 1e-9);
        for g in rep.check_elements() {
            let moved = once.conjugate_by(&rep.unitary(&g).unwrap()).unwrap();
            prop_assert!(moved.matrix().max_abs_diff(once.matrix()) <= 1e-9);
        }
    }
}

fn dilation_instances() -> Vec<(Representation, Representation)> {
    let half = spin_j_representation(0.5).unwrap();
    let one = spin_j_representation(1.0).unwrap();
    vec![
        (cyclic_phase_representation(4, &[0, 1, 2, 3]).unwrap(), cyclic_phase_representation(4, &[0, 3]).unwrap()),
        (left_regular_representation(&cyclic_group(3).unwrap()), cyclic_phase_representation(3, &[0, 1, 2]).unwrap()),
        (u1_number_representation(&[0, 1, 2]).unwrap(), u1_number_representation(&[0, 1]).unwrap()),
        (u1_number_representation(&[0, 2, 5]).unwrap(), u1_number_representation(&[0, 3, 1]).unwrap()),
        (tensor_representation(&half, &half).unwrap(), half.clone()),
        (spin_j_representation(1.5).unwrap(), one),
    ]
}

#[test]
fn dilation_channels_are_symmetric() {
    for (k, (system, ancilla)) in dilation_instances().into_iter().enumerate() {
        let joint = Commutant::of(&tensor_representation(&system, &ancilla).unwrap()).unwrap();
        let anc = Commutant::of(&ancilla).unwrap();
        let mut r = rng(100 + k as u64);
        for _ in 0..50 {
            let dil = SymmetricDilation::random(&system, &anc, &joint, &mut r).unwrap();
            let ch = symmetric_dilation_channel(&dil).unwrap();
            let check = is_symmetric_channel(&ch, &system, 1e-8).unwrap();
            assert!(check.symmetric, "instance {k}: deviation {:e}", check.max_deviation);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn encoder_commutes_with_twirls(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let group = cyclic_group(n).unwrap();
        let regular = left_regular_representation(&group);
        let charges: Vec<i64> = (0..n as i64).collect();
        let target_rep = cyclic_phase_representation(n, &charges).unwrap();
        let target = random::random_state(n, &mut r);
        let enc = encoder_channel(&group, &regular, &target_rep, &target).unwrap();
        let tw_in = Twirl::new(&regular, &uniform_density(&regular, 1).unwrap()).unwrap();
        let tw_out = Twirl::new(&target_rep, &uniform_density(&target_rep, 1).unwrap()).unwrap();
        let x = random::random_ginibre(n, n, &mut r);
        let a = enc.apply_operator(&tw_in.apply_operator(&x).unwrap()).unwrap();
        let b = tw_out.apply_operator(&enc.apply_operator(&x).unwrap()).unwrap();
        prop_assert!(a.max_abs_diff(&b) <= 1e-9);
    }
}

// measures

fn u1_instance() -> (Representation, ComplexMatrix) {
    let rep = u1_number_representation(&[0, 1, 2, 3]).unwrap();
    let l = rep.generators()[0].clone();
    (rep, l)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn measures_are_orbit_invariant(seed: u64, phase in -7.0f64..7.0) {
        let (rep, l) = u1_instance();
        let mut r = rng(seed);
        let rho = random::random_state(4, &mut r);
        let moved = rho.conjugate_by(&rep.unitary(&GroupElement::Phase(phase)).unwrap()).unwrap();
        let p = uniform_density(&rep, 1).unwrap();
        let g = GroupElement::Phase(0.7);
        let pairs = [
            (measures::holevo_asymmetry(&rho, &rep, &p).unwrap(), measures::holevo_asymmetry(&moved, &rep, &p).unwrap()),
            (measures::commutator_asymmetry(&rho, &l).unwrap(), measures::commutator_asymmetry(&moved, &l).unwrap()),
            (measures::trace_distance_asymmetry(&rho, &rep, &g).unwrap(), measures::trace_distance_asymmetry(&moved, &rep, &g).unwrap()),
            (measures::skew_information(&rho, &l, 0.3).unwrap(), measures::skew_information(&moved, &l, 0.3).unwrap()),
        ];
        for (a, b) in pairs {
            prop_assert!((a - b).abs() <= 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn holevo_is_rotation_invariant(seed: u64) {
        let rep = tensor_representation(&spin_j_representation(0.5).unwrap(), &spin_j_representation(1.0).unwrap()).unwrap();
        let mut r = rng(seed);
        let rho = random::random_state(rep.dim(), &mut r);
        let u = rep.unitary(&random_element(&rep, &mut r)).unwrap();
        let p = uniform_density(&rep, 1).unwrap();
        let a = measures::holevo_asymmetry(&rho, &rep, &p).unwrap();
        let b = measures::holevo_asymmetry(&rho.conjugate_by(&u).unwrap(), &rep, &p).unwrap();
        prop_assert!((a - b).abs() <= 1e-9);
    }

    #[test]
    fn symmetric_states_score_zero(seed: u64) {
        let (rep, l) = u1_instance();
        let p = uniform_density(&rep, 1).unwrap();
        let sym = Twirl::new(&rep, &p).unwrap().apply(&random::random_state(4, &mut rng(seed))).unwrap();
        let g = GroupElement::Phase(1.3);
        for v in [
            measures::holevo_asymmetry(&sym, &rep, &p).unwrap(),
            measures::commutator_asymmetry(&sym, &l).unwrap(),
            measures::trace_distance_asymmetry(&sym, &rep, &g).unwrap(),
            measures::skew_information(&sym, &l, 0.5).unwrap(),
            measures::renyi_asymmetry(&sym, &rep, &g, 0.5).unwrap(),
        ] {
            prop_assert!(v.abs() <= 1e-9, "{v}");
        }
    }

    #[test]
    fn measures_are_nonnegative(seed: u64, s in 0.01f64..0.99) {
        let (rep, l) = u1_instance();
        let rho = random::random_state(4, &mut rng(seed));
        let p = uniform_density(&rep, 1).unwrap();
        prop_assert!(measures::holevo_asymmetry(&rho, &rep, &p).unwrap() >= -1e-12);
        prop_assert!(measures::skew_information(&rho, &l, s).unwrap() >= -1e-12);
        prop_assert!(measures::renyi_asymmetry(&rho, &rep, &GroupElement::Phase(0.9), s).unwrap() >= -1e-12);
    }

    #[test]
    fn skew_is_at_most_variance(seed: u64, s in 0.01f64..0.99) {
        let (_, l) = u1_instance();
        let rho = random::random_state(4, &mut rng(seed));
        let skew = measures::skew_information(&rho, &l, s).unwrap();
        prop_assert!(skew <= measures::variance(&rho, &l).unwrap() + 1e-10);
    }

    #[test]
    fn characteristic_function_is_bounded(seed: u64) {
        let rep = spin_j_representation(1.5).unwrap();
        let rho = random::random_state(4, &mut rng(seed));
        let elements = rep.sample_elements(16);
        let chi = measures::characteristic_function(&rho, &rep, &elements).unwrap();
        prop_assert!(chi.iter().all(|z| z.norm() <= 1.0 + 1e-12));
        let at_e = measures::characteristic_function(&rho, &rep, &[rep.kind().identity_element()]).unwrap();
        prop_assert!((at_e[0] - Complex64::new(1.0, 0.0)).norm() <= 1e-12);
    }
}

#[test]
fn pure_reductions_match_vector_oracle() {
    let (_, l) = u1_instance();
    let l_na = na(&l);
    let mut r = rng(5);
    for _ in 0..100 {
        let psi = random_vector(4, &mut r);
        let rho = DensityOperator::pure(&psi).unwrap();
        let var = pure_variance(&psi, &l_na);
        let f = measures::commutator_asymmetry(&rho, &l).unwrap();
        assert!((f - 2.0 * var.sqrt()).abs() <= 1e-8 * var.sqrt().max(1e-300));
        let s = measures::skew_information(&rho, &l, 0.4).unwrap();
        assert!((s - var).abs() <= 1e-8 * var);
    }
}

// reports

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn reports_are_reproducible(seed: u64) {
        for id in ["interconversion", "triviality:5", "amplifier:5", "monotonicity:su2x2:skew-0.5:5"] {
            let a = serde_json::to_string(&run_by_id(id, seed).unwrap()).unwrap();
            let b = serde_json::to_string(&run_by_id(id, seed).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
