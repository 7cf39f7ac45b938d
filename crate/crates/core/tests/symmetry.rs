//! Rotor transformation laws, conjugation, and reflections.

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sga_core::blade::BladeBasis;
use sga_core::sga::exact;
use sga_core::symmetry::{
    axis_rotor, bivector_rotor, classify_reflection, conjugate, conjugation_operator, double_conjugation_sign,
    is_real_element, plane_rotor, reverse, rotate, symmetry, Angle, ReflectionClass, Rotor,
};
use sga_core::{
    Bitcode, Element, Exact, ExactMatrix, Field, FloatMatrix, GammaIndex, Matrix, MetricChoice, OddMode, RepConfig,
    Representation, Sga, SgaError, Sign, Signature,
};

fn build(k: usize, m: usize) -> Representation {
    Representation::build(RepConfig::km(k, m).unwrap()).unwrap()
}

fn build_with(k: usize, m: usize, metric: MetricChoice, mode: OddMode) -> Representation {
    Representation::build(RepConfig::km(k, m).unwrap().with_metric(metric).with_odd_mode(mode)).unwrap()
}

fn quarter() -> Angle {
    Angle::QuarterTurns(1)
}

fn float_metric(rep: &Representation) -> FloatMatrix {
    rep.metric().map(Complex64::from_exact)
}

fn sandwich<T: Field>(r: &Rotor<T>, m: &Matrix<T>) -> Matrix<T> {
    &(&r.matrix * m) * &r.reverse
}

#[test]
fn identity_and_quarter_turn_at_n2() {
    let rep = build(2, 0);
    let r0: Rotor<Exact> = plane_rotor(&rep, 1, Angle::QuarterTurns(0)).unwrap();
    assert!(r0.matrix.is_identity());
    let x = exact(&rep).basis_column(&"u".parse().unwrap()).unwrap();
    assert_eq!(rotate(&r0, &x).unwrap(), x);

    let r: Rotor<Exact> = plane_rotor(&rep, 1, quarter()).unwrap();
    let h = &Exact::sqrt2() * &Exact::ratio(1, 2);
    let want = Matrix::diag(vec![&h - &h.mul_i(), &h + &h.mul_i()]);
    assert_eq!(r.matrix, want);
    let g1 = rep.gamma(GammaIndex::Up(1)).unwrap();
    assert_eq!(sandwich(&r, g1), g1.scale(&-Exact::i()));
    assert!((&r.matrix * &r.reverse).is_identity());
    assert_eq!(reverse(&rep, &r.matrix).unwrap(), r.reverse);
}

fn tested_reps() -> Vec<Representation> {
    let mut reps: Vec<_> = [(2, 0), (3, 0), (4, 0), (3, 1), (2, 2), (5, 0), (4, 1), (6, 0), (7, 1)]
        .into_iter()
        .map(|(k, m)| build(k, m))
        .collect();
    reps.push(build_with(4, 0, MetricChoice::Alternative, OddMode::Project));
    reps.push(build_with(3, 1, MetricChoice::Alternative, OddMode::Project));
    reps.push(build_with(3, 0, MetricChoice::Standard, OddMode::EmbedScalarN));
    reps.push(build_with(5, 0, MetricChoice::PrimeAlternative, OddMode::EmbedScalarNPlus1));
    reps
}

#[test]
fn plane_rotors_preserve_the_metric_exactly() {
    for rep in tested_reps() {
        let eps = rep.metric();
        for k in 1..=rep.n_dims() / 2 {
            let Ok(r) = plane_rotor::<Exact>(&rep, k, quarter()) else {
                // boosts are float-only away from zero
                continue;
            };
            assert_eq!(&(&r.matrix.transpose() * eps) * &r.matrix, *eps, "N={} k={k}", rep.n_dims());
        }
    }
}

#[test]
fn quarter_turn_phase_laws() {
    for rep in tested_reps() {
        let sig = rep.signature().clone();
        for k in 1..=rep.n_dims() / 2 {
            if sig.is_timelike(2 * k - 2) != sig.is_timelike(2 * k - 1) {
                continue;
            }
            let r: Rotor<Exact> = plane_rotor(&rep, k, quarter()).unwrap();
            for l in 1..=rep.n_dims() / 2 {
                let up = rep.gamma(GammaIndex::Up(l)).unwrap();
                let down = rep.gamma(GammaIndex::Down(l)).unwrap();
                let (pu, pd) = if l == k { (-Exact::i(), Exact::i()) } else { (Exact::one(), Exact::one()) };
                assert_eq!(sandwich(&r, up), up.scale(&pu), "k={k} l={l}");
                assert_eq!(sandwich(&r, down), down.scale(&pd));
            }
            let h = &Exact::sqrt2() * &Exact::ratio(1, 2);
            let (phase_up, phase_down) = (&h - &h.mul_i(), &h + &h.mul_i());
            for b in Bitcode::all(rep.bits()) {
                let e = rep.basis_spinor(&b).unwrap();
                let ph = match b.bit(k).unwrap() {
                    sga_core::Bit::Up => &phase_up,
                    sga_core::Bit::Down => &phase_down,
                };
                assert_eq!(&r.matrix * &e, e.scale(ph));
            }
        }
    }
}

#[test]
fn float_phase_laws_at_random_angles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for rep in [build(4, 0), build(6, 0), build(5, 0)] {
        for _ in 0..20 {
            let theta: f64 = rng.gen_range(-6.0..6.0);
            for k in 1..=rep.n_dims() / 2 {
                let r: Rotor<Complex64> = plane_rotor(&rep, k, Angle::Radians(theta)).unwrap();
                let eps = float_metric(&rep);
                assert!((&(&r.matrix.transpose() * &eps) * &r.matrix).close(&eps, 1e-12));
                let up = rep.gamma(GammaIndex::Up(k)).unwrap().map(Complex64::from_exact);
                let phase = Complex64::new(0.0, -theta).exp();
                assert!(sandwich(&r, &up).close(&up.scale(&phase), 1e-12));
                let e = Matrix::unit_column(rep.dim(), 0);
                assert!((&r.matrix * &e).close(&e.scale(&Complex64::new(0.0, -theta / 2.0).exp()), 1e-12));
            }
        }
    }
}

#[test]
fn boost_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let rep = build(3, 1);
    // the default timelike axis sits in the first plane
    assert!(rep.signature().is_timelike(1));
    for _ in 0..20 {
        let theta: f64 = rng.gen_range(-2.0..2.0);
        let r: Rotor<Complex64> = plane_rotor(&rep, 1, Angle::Radians(theta)).unwrap();
        let eps = float_metric(&rep);
        assert!((&(&r.matrix.transpose() * &eps) * &r.matrix).close(&eps, 1e-12));
        let up = rep.gamma(GammaIndex::Up(1)).unwrap().map(Complex64::from_exact);
        let down = rep.gamma(GammaIndex::Down(1)).unwrap().map(Complex64::from_exact);
        let e = Complex64::new(theta, 0.0).exp();
        assert!(sandwich(&r, &up).close(&up.scale(&e), 1e-12));
        assert!(sandwich(&r, &down).close(&down.scale(&e.inv()), 1e-12));
        for b in Bitcode::all(2) {
            let v = Matrix::unit_column(4, b.index());
            let f = match b.bit(1).unwrap() {
                sga_core::Bit::Up => Complex64::new(theta / 2.0, 0.0).exp(),
                sga_core::Bit::Down => Complex64::new(-theta / 2.0, 0.0).exp(),
            };
            assert!((&r.matrix * &v).close(&v.scale(&f), 1e-12));
        }
    }
    assert!(matches!(plane_rotor::<Exact>(&rep, 1, quarter()), Err(SgaError::NotRepresentable(_))));
    assert!(plane_rotor::<Exact>(&rep, 1, Angle::QuarterTurns(0)).unwrap().matrix.is_identity());

    // a boost in the second plane when its axis is the timelike one
    let sig = Signature::with_timelike(3, 1, vec![2]).unwrap();
    let rep = Representation::build(RepConfig::new(sig)).unwrap();
    let r: Rotor<Complex64> = plane_rotor(&rep, 2, Angle::Radians(0.7)).unwrap();
    let up = rep.gamma(GammaIndex::Up(2)).unwrap().map(Complex64::from_exact);
    assert!(sandwich(&r, &up).close(&up.scale(&Complex64::new(0.7f64.exp(), 0.0)), 1e-12));
}

#[test]
fn reversal_signs_on_blades() {
    for rep in [build(4, 0), build(3, 1), build(2, 2), build_with(3, 0, MetricChoice::Standard, OddMode::EmbedScalarNPlus1)] {
        for blade in rep.blade_basis(BladeBasis::Orthonormal) {
            let g = rep.blade_matrix(&blade).unwrap();
            let want = match blade.reverse_sign() {
                Sign::Plus => g.clone(),
                Sign::Minus => -&g,
            };
            assert_eq!(rep.reverse(&g), want, "{blade}");
        }
    }
    // with κ identified with 1 only the even part has a well-defined reverse
    for rep in [build(3, 0), build(5, 0), build(4, 1)] {
        let g = rep.gammas_orthonormal();
        for a in 0..g.len() {
            for b in 0..g.len() {
                assert_eq!(rep.reverse(&(&g[a] * &g[b])), &g[b] * &g[a]);
            }
        }
        let r: Rotor<Exact> = axis_rotor(&rep, 1, rep.n_dims(), quarter()).unwrap();
        assert_eq!(rep.reverse(&r.matrix), r.reverse);
    }
}

fn random_spinor(rng: &mut ChaCha8Rng, dim: usize) -> ExactMatrix {
    Matrix::column((0..dim).map(|_| Exact::gaussian(rng.gen_range(-5..=5), rng.gen_range(-5..=5))).collect())
}

#[test]
fn rotation_covariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for rep in [build(4, 0), build(3, 1), build(5, 0)] {
        let s: Sga<Exact> = exact(&rep);
        let r: Rotor<Exact> = axis_rotor(&rep, 1, 3, quarter()).unwrap();
        for _ in 0..10 {
            let (psi, chi) = (random_spinor(&mut rng, rep.dim()), random_spinor(&mut rng, rep.dim()));
            let (rpsi, rchi) = (&r.matrix * &psi, &r.matrix * &chi);
            assert_eq!(s.scalar_product(&rpsi, &rchi).unwrap(), s.scalar_product(&psi, &chi).unwrap());
            let rotated_row = rotate(&r, &s.row_of(&psi).unwrap()).unwrap();
            assert_eq!(rotated_row, s.row_of(&rpsi).unwrap());
            let outer = s.outer_product(&chi, &psi).unwrap();
            assert_eq!(s.outer_product(&rchi, &rpsi).unwrap(), sandwich(&r, &outer));
        }
    }
}

#[test]
fn odd_dimension_has_extra_rotations() {
    let rep = build(3, 0);
    let eps = rep.metric();
    let mut count = 0;
    for (a, b) in [(1, 2), (1, 3), (2, 3)] {
        let r: Rotor<Exact> = axis_rotor(&rep, a, b, quarter()).unwrap();
        assert_eq!(&(&r.matrix.transpose() * eps) * &r.matrix, *eps);
        assert!((&r.matrix * &r.reverse).is_identity());
        count += 1;
    }
    assert_eq!(count, 3);
    assert_eq!(rep.n_dims() / 2, 1);
}

#[test]
fn general_bivector_rotor() {
    let rep = build(4, 0);
    let r = bivector_rotor(&rep, &[(1, 2, 0.4), (2, 3, -1.1), (1, 4, 0.25)]).unwrap();
    let eps = float_metric(&rep);
    assert!((&r.matrix * &r.reverse).close(&Matrix::identity(4), 1e-12));
    assert!((&(&r.matrix.transpose() * &eps) * &r.matrix).close(&eps, 1e-12));
    let single = bivector_rotor(&rep, &[(1, 2, 0.9)]).unwrap();
    let closed: Rotor<Complex64> = axis_rotor(&rep, 1, 2, Angle::Radians(0.9)).unwrap();
    assert!(single.matrix.close(&closed.matrix, 1e-12));
}

#[test]
fn conjugation_fixtures() {
    let pauli = build(3, 0);
    let data = conjugation_operator(&pauli);
    assert_eq!(&data.c, pauli.metric());
    assert_eq!(symmetry(&data.c), Some(Sign::Minus));
    assert_eq!(double_conjugation_sign(&pauli).unwrap(), Sign::Minus);

    let dirac = build(3, 1);
    let data = conjugation_operator(&dirac);
    let t = dirac.signature().timelike()[0];
    assert_eq!(data.gamma, dirac.gammas_orthonormal()[t].scale(&-Exact::i()));
    assert_eq!(symmetry(&data.c), Some(Sign::Plus));
    assert_eq!(double_conjugation_sign(&dirac).unwrap(), Sign::Plus);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let psi = Element::Column(random_spinor(&mut rng, 4));
        let twice = conjugate(&dirac, &conjugate(&dirac, &psi).unwrap()).unwrap();
        assert_eq!(twice, psi);
    }
}

#[test]
fn gamma_and_conjugation_invariants() {
    for (k, m) in [(2, 0), (3, 0), (3, 1), (4, 1), (2, 2), (1, 3), (5, 2), (9, 1)] {
        let rep = build(k, m);
        let data = conjugation_operator(&rep);
        assert!((&data.gamma * &data.gamma).is_identity(), "K={k} M={m}");
        assert!((&data.c * &data.c.adjoint()).is_identity());
        if m >= 1 {
            assert!(data.gamma.trace().is_zero());
        }
        let sym = symmetry(&data.c).expect("C is symmetric or antisymmetric");
        assert_eq!(double_conjugation_sign(&rep).unwrap(), sym);
    }
}

#[test]
fn conjugation_commutes_with_rotors() {
    for (k, m) in [(2, 0), (3, 0), (3, 1), (4, 1), (9, 1)] {
        let rep = build(k, m);
        let c = rep.conjugation();
        for a in 1..=rep.n_dims() {
            for b in a + 1..=rep.n_dims() {
                let Ok(r) = axis_rotor::<Exact>(&rep, a, b, quarter()) else { continue };
                assert_eq!(c * &r.matrix.conj(), &r.matrix * c, "K={k} M={m} axes {a},{b}");
            }
        }
    }
}

#[test]
fn conjugate_vectors_and_outer_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (k, m) in [(2, 0), (3, 0), (4, 0), (3, 1), (2, 2), (5, 1), (4, 3)] {
        let rep = build(k, m);
        let s = exact(&rep);
        let sign = rep.commutation_sign() * Sign::from_parity(m % 2 == 1);
        for g in rep.gammas_orthonormal() {
            let conj = conjugate(&rep, &Element::Multivector(g.clone())).unwrap();
            let want = match sign {
                Sign::Plus => g.clone(),
                Sign::Minus => -g,
            };
            assert_eq!(conj, Element::Multivector(want), "K={k} M={m}");
        }
        for _ in 0..5 {
            let (psi, chi) = (random_spinor(&mut rng, rep.dim()), random_spinor(&mut rng, rep.dim()));
            let Element::Column(conj_chi) = conjugate(&rep, &Element::Column(chi.clone())).unwrap() else { panic!() };
            let Element::Column(conj_psi) = conjugate(&rep, &Element::Column(psi.clone())).unwrap() else { panic!() };
            let a = s.outer_product(&psi, &conj_chi).unwrap();
            let lhs = conjugate(&rep, &Element::Multivector(a)).unwrap();
            let rhs = s.outer_product(&conj_psi, &chi).unwrap();
            let rhs = match rep.metric_square() {
                Sign::Plus => rhs,
                Sign::Minus => -&rhs,
            };
            assert_eq!(lhs, Element::Multivector(rhs));

            // ψ̄·Γχ = ψ†χ and ψ̄·ψ is real
            let gamma = rep.gamma_time();
            assert_eq!(s.scalar_product(&conj_psi, &(gamma * &chi)).unwrap(), (&psi.adjoint() * &chi).get(0, 0).clone());
            assert!(s.scalar_product(&conj_psi, &psi).unwrap().is_real());

            // multiplicative over products and covariant under rotors
            let (x, y) = (rep.gammas_orthonormal()[0].clone(), rep.gammas_orthonormal()[1].clone());
            let cx = conjugate(&rep, &Element::Multivector(x.clone())).unwrap().as_matrix();
            let cy = conjugate(&rep, &Element::Multivector(y.clone())).unwrap().as_matrix();
            assert_eq!(conjugate(&rep, &Element::Multivector(&x * &y)).unwrap().as_matrix(), &cx * &cy);
            let spacelike: Vec<usize> = (1..=rep.n_dims()).filter(|&a| !rep.signature().is_timelike(a - 1)).collect();
            let r: Rotor<Exact> = axis_rotor(&rep, spacelike[0], spacelike[1], quarter()).unwrap();
            let cr = conjugate(&rep, &Element::Column(&r.matrix * &psi)).unwrap();
            assert_eq!(cr.as_matrix(), &r.matrix * &conj_psi);
        }
    }
}

#[test]
fn scalar_product_with_conjugate_takes_both_signs_with_time() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let rep = build(3, 1);
    let s = exact(&rep);
    let (mut pos, mut neg) = (false, false);
    for _ in 0..50 {
        let psi = random_spinor(&mut rng, 4);
        let conj_psi = conjugate(&rep, &Element::Column(psi.clone())).unwrap().as_matrix();
        match s.scalar_product(&conj_psi, &psi).unwrap().rational_sign() {
            Some(Sign::Plus) => pos = true,
            Some(Sign::Minus) => neg = true,
            None => {}
        }
    }
    assert!(pos && neg);
}

#[test]
fn reality_condition() {
    let dirac = build(3, 1);
    for blade in dirac.blade_basis(BladeBasis::Orthonormal) {
        let g = dirac.blade_matrix(&blade).unwrap();
        assert!(is_real_element(&dirac, &g.scale(&Exact::int(3)), 0.0).unwrap());
        assert!(!is_real_element(&dirac, &g.scale(&Exact::i()), 0.0).unwrap());
    }
    // (3,0): the vector conjugation sign is −, so i·vectors are real
    let rep = build(3, 0);
    assert_eq!(rep.commutation_sign(), Sign::Minus);
    for g in rep.gammas_orthonormal() {
        assert!(is_real_element(&rep, &g.scale(&Exact::i()), 0.0).unwrap());
        assert!(!is_real_element(&rep, g, 0.0).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let m = Matrix::from_rows(
        (0..4).map(|_| (0..4).map(|_| Complex64::new(rng.gen(), rng.gen())).collect()).collect(),
    )
    .unwrap();
    assert!(!is_real_element(&dirac, &m, 1e-12).unwrap());
}

#[test]
fn reflections() {
    let dirac = build(3, 1);
    let t = dirac.signature().timelike()[0] + 1;
    let space = (1..=4).find(|&a| a != t).unwrap();
    assert_eq!(classify_reflection(&dirac, &[space]).unwrap().class, ReflectionClass::T);
    assert_eq!(classify_reflection(&dirac, &[t]).unwrap().class, ReflectionClass::P);
    let both = classify_reflection(&dirac, &[space, t]).unwrap();
    assert_eq!(both.class, ReflectionClass::PT);
    assert_eq!(both.flipped_spacelike + both.flipped_timelike, 2);

    for mode in [OddMode::EmbedScalarN, OddMode::EmbedScalarNPlus1] {
        let rep = build_with(3, 0, MetricChoice::Standard, mode);
        let r = classify_reflection(&rep, &[4]).unwrap();
        assert_eq!(r.class, ReflectionClass::P);
        assert_eq!(r.flipped_axes, vec![1, 2, 3]);
        // K even: the scalar dimension reverses time
        let rep = build_with(2, 1, MetricChoice::Standard, mode);
        assert_eq!(classify_reflection(&rep, &[4]).unwrap().class, ReflectionClass::T);
    }
    // odd N without embedding: only PT survives
    let rep = build(2, 1);
    for a in 1..=3 {
        let c = classify_reflection(&rep, &[a]).unwrap().class;
        assert!(matches!(c, ReflectionClass::PT | ReflectionClass::Neither));
    }
    assert!(classify_reflection(&build(3, 0), &[4]).is_err());
    assert!(classify_reflection(&dirac, &[1, 1]).is_err());
    assert!(classify_reflection(&dirac, &[]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn float_rotors_preserve_metric_and_commute_with_conjugation(
        theta in -6.0f64..6.0,
        pick in 0usize..6,
        a in 1usize..=12,
        b in 1usize..=12,
    ) {
        let (k, m) = [(2, 0), (3, 0), (3, 1), (4, 1), (9, 1), (11, 1)][pick];
        let rep = build(k, m);
        let n = rep.n_dims();
        let (a, b) = ((a - 1) % n + 1, (b - 1) % n + 1);
        prop_assume!(a != b);
        let r: Rotor<Complex64> = axis_rotor(&rep, a, b, Angle::Radians(theta)).unwrap();
        let eps = float_metric(&rep);
        prop_assert!((&(&r.matrix.transpose() * &eps) * &r.matrix).close(&eps, 1e-12));
        let c = rep.conjugation().map(Complex64::from_exact);
        prop_assert!((&c * &r.matrix.conj()).close(&(&r.matrix * &c), 1e-12));
    }
}
