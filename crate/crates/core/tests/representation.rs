//! The inductive construction checked against an independent Kronecker-product
//! (Jordan-Wigner) build and against the product forms of the metrics.

use sga_core::{
    Exact, ExactMatrix, GammaIndex, Matrix, MetricChoice, OddMode, RepConfig, Representation, SgaError, Sign,
    Signature,
};

fn m2(a: [[Exact; 2]; 2]) -> ExactMatrix {
    Matrix::from_rows(a.into_iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn pauli_x() -> ExactMatrix {
    m2([[Exact::zero(), Exact::one()], [Exact::one(), Exact::zero()]])
}

fn pauli_y() -> ExactMatrix {
    m2([[Exact::zero(), -Exact::i()], [Exact::i(), Exact::zero()]])
}

fn pauli_z() -> ExactMatrix {
    Matrix::diag(vec![Exact::one(), -Exact::one()])
}

/// Z on bits above `k`, `local` on bit `k`, identity below; bit `bits` is the
/// most significant Kronecker factor.
fn jw(bits: usize, k: usize, local: &ExactMatrix) -> ExactMatrix {
    let mut acc = Matrix::identity(1);
    for j in (1..=bits).rev() {
        let f = if j > k {
            pauli_z()
        } else if j == k {
            local.clone()
        } else {
            Matrix::identity(2)
        };
        acc = acc.kron(&f);
    }
    acc
}

fn build(k: usize, m: usize) -> Representation {
    Representation::build(RepConfig::km(k, m).unwrap()).unwrap()
}

fn product(dim: usize, ms: &[ExactMatrix]) -> ExactMatrix {
    ms.iter().fold(Matrix::identity(dim), |acc, x| &acc * x)
}

#[test]
fn vectors_match_kronecker_oracle() {
    let raise = m2([[Exact::zero(), Exact::sqrt2()], [Exact::zero(), Exact::zero()]]);
    let lower = m2([[Exact::zero(), Exact::zero()], [Exact::sqrt2(), Exact::zero()]]);
    for n in 1..=6 {
        let rep = build(2 * n, 0);
        for k in 1..=n {
            assert_eq!(rep.gamma(GammaIndex::Plus(k)).unwrap(), &jw(n, k, &pauli_x()), "plus n={n} k={k}");
            assert_eq!(rep.gamma(GammaIndex::Minus(k)).unwrap(), &jw(n, k, &pauli_y()), "minus n={n} k={k}");
            assert_eq!(rep.gamma(GammaIndex::Up(k)).unwrap(), &jw(n, k, &raise));
            assert_eq!(rep.gamma(GammaIndex::Down(k)).unwrap(), &jw(n, k, &lower));
        }
        let kappa = (0..n).fold(Matrix::identity(1), |acc: ExactMatrix, _| acc.kron(&pauli_z()));
        assert_eq!(rep.chiral_operator(), &kappa);
    }
}

#[test]
fn metrics_match_product_forms() {
    for n in 1..=6 {
        let rep = build(2 * n, 0);
        let dim = rep.dim();
        let plus: Vec<_> = (1..=n).map(|k| rep.gamma(GammaIndex::Plus(k)).unwrap().clone()).collect();
        let i_minus: Vec<_> =
            (1..=n).map(|k| rep.gamma(GammaIndex::Minus(k)).unwrap().scale(&Exact::i())).collect();
        assert_eq!(rep.epsilon(), &product(dim, &plus), "standard n={n}");
        assert_eq!(rep.epsilon_alt(), &product(dim, &i_minus), "alternative n={n}");
    }
}

#[test]
fn odd_projected_metric_puts_unpaired_axis_first() {
    for n in 0..=5 {
        let rep = build(2 * n + 1, 0);
        let dim = rep.dim();
        let plus: Vec<_> = (1..=n).map(|k| rep.gamma(GammaIndex::Plus(k)).unwrap().clone()).collect();
        let i_minus: Vec<_> =
            (1..=n).map(|k| rep.gamma(GammaIndex::Minus(k)).unwrap().scale(&Exact::i())).collect();
        let unpaired = rep.gamma(GammaIndex::Unpaired).unwrap();
        assert_eq!(rep.metric(), &(unpaired * &product(dim, &plus)));
        assert_eq!(rep.metric(), &product(dim, &i_minus));
    }
}

fn assert_clifford(rep: &Representation) {
    let g = rep.gammas_orthonormal();
    let dim = rep.dim();
    for a in 0..g.len() {
        for b in 0..g.len() {
            let anti = &(&g[a] * &g[b]) + &(&g[b] * &g[a]);
            let expected = if a == b {
                Matrix::scalar_identity(dim, &Exact::int(2 * rep.eta(a).as_i64()))
            } else {
                Matrix::zeros(dim, dim)
            };
            assert_eq!(anti, expected, "{:?} axes {a},{b}", rep.signature());
        }
    }
}

#[test]
fn clifford_relation_all_signatures() {
    for n_dims in 1..=12 {
        for m in 0..=n_dims {
            assert_clifford(&build(n_dims - m, m));
        }
    }
    for mode in [OddMode::EmbedScalarN, OddMode::EmbedScalarNPlus1] {
        for (k, m) in [(3, 0), (2, 1), (4, 1), (5, 2)] {
            let cfg = RepConfig::km(k, m).unwrap().with_odd_mode(mode);
            assert_clifford(&Representation::build(cfg).unwrap());
        }
    }
}

#[test]
fn custom_timelike_axes() {
    let sig = Signature::with_timelike(3, 1, vec![0]).unwrap();
    let rep = Representation::build(RepConfig::new(sig)).unwrap();
    let form = rep.gamma(GammaIndex::Plus(1)).unwrap();
    assert_eq!(rep.gamma(GammaIndex::Axis(1)).unwrap(), &form.scale(&Exact::i()));
    assert_clifford(&rep);
}

#[test]
fn pauli_examples() {
    let rep = build(3, 0);
    let g = rep.gammas_orthonormal();
    assert_eq!(g[0], pauli_x());
    assert_eq!(g[1], pauli_y());
    assert_eq!(g[2], pauli_z());
    assert_eq!(
        rep.gamma(GammaIndex::Up(1)).unwrap(),
        &m2([[Exact::zero(), Exact::sqrt2()], [Exact::zero(), Exact::zero()]])
    );
    assert_eq!(rep.metric(), &m2([[Exact::zero(), Exact::one()], [-Exact::one(), Exact::zero()]]));
    assert!(rep.chiral_operator().is_identity());
    assert_eq!(rep.pseudoscalar(), &Matrix::scalar_identity(2, &Exact::i()));
    let up = rep.basis_spinor(&"u".parse().unwrap()).unwrap();
    assert_eq!(up, Matrix::column(vec![Exact::one(), Exact::zero()]));
    assert!(rep.basis_spinor(&"uu".parse().unwrap()).is_err());
}

#[test]
fn small_even_examples() {
    let rep = build(2, 0);
    assert_eq!(rep.metric(), &pauli_x());
    assert_eq!(rep.chiral_operator(), &pauli_z());
    let rep = build(4, 0);
    let b = rep.basis_spinor(&"uu".parse().unwrap()).unwrap();
    assert_eq!(b, Matrix::unit_column(4, 0));
    assert!((rep.chiral_operator() * rep.chiral_operator()).is_identity());
}

#[test]
fn gamma_index_errors() {
    let rep = build(4, 0);
    assert!(matches!(rep.gamma(GammaIndex::Plus(3)), Err(SgaError::IndexOutOfRange(_))));
    assert!(matches!(rep.gamma(GammaIndex::Axis(0)), Err(SgaError::IndexOutOfRange(_))));
    assert!(rep.gamma(GammaIndex::Unpaired).is_err());
    assert!(rep.gamma(GammaIndex::ScalarAxis).is_err());
}

#[test]
fn metric_is_real_orthogonal_and_squares_to_sign() {
    for n_dims in 1..=12 {
        for metric in [MetricChoice::Standard, MetricChoice::Alternative] {
            let cfg = RepConfig::euclidean(n_dims).unwrap().with_metric(metric);
            let rep = Representation::build(cfg).unwrap();
            let e = rep.metric();
            assert!(e.entries().iter().all(|x| x.is_real()));
            assert!((e * &e.transpose()).is_identity());
            let sq = e * e;
            match rep.metric_square() {
                Sign::Plus => assert!(sq.is_identity()),
                Sign::Minus => assert!((-&sq).is_identity()),
            }
        }
    }
}

#[test]
fn chiral_operator_and_pseudoscalar() {
    for n_dims in 1..=12 {
        let rep = build(n_dims, 0);
        let n = n_dims / 2;
        let dim = rep.dim();
        let kappa = rep.chiral_operator();
        assert!((kappa * kappa).is_identity());
        let i_n = (0..n).fold(Exact::one(), |acc, _| &acc * &Exact::i());
        assert_eq!(rep.pseudoscalar(), &kappa.scale(&i_n), "I = i^n κ at N={n_dims}");
        let sq = rep.pseudoscalar() * rep.pseudoscalar();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(sq, Matrix::scalar_identity(dim, &Exact::int(sign)));
        for b in sga_core::Bitcode::all(rep.bits()) {
            let idx = b.index();
            let full = rep.full_chiral_operator();
            assert_eq!(full.get(idx, idx), &Exact::int(b.chirality().as_i64()));
        }
    }
}

fn blade_products(rep: &Representation) -> Vec<(usize, ExactMatrix)> {
    let g = rep.spacelike_forms();
    let n = g.len();
    (0u32..1 << n)
        .map(|mask| {
            let p = mask.count_ones() as usize;
            let m = (0..n).filter(|a| mask >> a & 1 == 1).fold(Matrix::identity(rep.dim()), |acc: ExactMatrix, a| {
                &acc * &g[a]
            });
            (p, m)
        })
        .collect()
}

#[test]
fn spacelike_blades_traceless_unitary_hermitian() {
    for n_dims in [2, 4, 6] {
        let rep = build(n_dims, 0);
        for (p, m) in blade_products(&rep) {
            if p == 0 {
                continue;
            }
            assert!(m.trace().is_zero());
            assert!((&m * &m.adjoint()).is_identity());
            let hermitian = m.adjoint() == m;
            assert_eq!(hermitian, (p / 2) % 2 == 0, "p={p}");
            let det = m.determinant().unwrap();
            let expected = if n_dims == 2 && p == 1 { -1 } else { 1 };
            assert_eq!(det, Exact::int(expected), "N={n_dims} p={p}");
        }
    }
}

#[test]
fn primed_and_embedded_metrics() {
    let cfg = RepConfig::euclidean(3).unwrap().with_odd_mode(OddMode::EmbedScalarN).with_metric(MetricChoice::PrimeStandard);
    let rep = Representation::build(cfg).unwrap();
    // dropping γ_N leaves the two-dimensional metric, lifted to the extra bit
    assert_eq!(rep.metric(), &pauli_z().kron(&pauli_x()));
    let upper: Vec<Vec<Exact>> = (0..2).map(|i| (0..2).map(|j| rep.metric().get(i, j).clone()).collect()).collect();
    assert_eq!(Matrix::from_rows(upper).unwrap(), pauli_x());

    let cfg = RepConfig::euclidean(3)
        .unwrap()
        .with_odd_mode(OddMode::EmbedScalarNPlus1)
        .with_metric(MetricChoice::PrimeAlternative);
    let rep = Representation::build(cfg).unwrap();
    assert_eq!(rep.metric(), Representation::build(RepConfig::euclidean(4).unwrap().with_metric(MetricChoice::Alternative)).unwrap().metric());

    // an alternative metric that ignores the physical N-th axis is not invariant
    let cfg = RepConfig::euclidean(3).unwrap().with_odd_mode(OddMode::EmbedScalarN).with_metric(MetricChoice::Alternative);
    assert!(matches!(Representation::build(cfg), Err(SgaError::InvalidConfig(_))));
    let cfg = RepConfig::euclidean(3)
        .unwrap()
        .with_odd_mode(OddMode::EmbedScalarNPlus1)
        .with_metric(MetricChoice::PrimeStandard);
    assert!(matches!(Representation::build(cfg), Err(SgaError::InvalidConfig(_))));
}

#[test]
fn json_dump_has_named_matrices() {
    let rep = build(4, 0);
    let v = rep.to_json();
    for key in ["epsilon", "epsilon_alt", "kappa", "pseudoscalar", "gamma_plus_1", "gamma_minus_2", "gamma_chiral_1", "gamma_chiral_2bar", "Gamma", "C"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let eps: ExactMatrix = serde_json::from_value(v["epsilon"].clone()).unwrap();
    assert_eq!(&eps, rep.epsilon());
}
