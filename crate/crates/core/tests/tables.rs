//! Sign tables against direct matrix checks and the bit-flip sign laws.

use sga_core::blade::BladeBasis;
use sga_core::tables::{
    conjugation_symmetry, conjugation_symmetry_table, flip_signs, gamma_commutation_table, metric_symmetry_table,
    period8_check, predicted_flip_sign, signature_for_difference, SignRow, SignTable, TableKind,
};
use sga_core::{Bitcode, MetricChoice, OddMode, RepConfig, Representation, Sign};

const CAP: usize = 16;

fn build(n: usize, metric: MetricChoice, mode: OddMode) -> Representation {
    Representation::build(RepConfig::euclidean(n).unwrap().with_metric(metric).with_odd_mode(mode)).unwrap()
}

#[test]
fn anchors() {
    let t1 = metric_symmetry_table(1..=8, CAP).unwrap();
    assert_eq!(t1.get(3).unwrap().standard, Sign::Minus);
    assert_eq!(t1.get(4).unwrap().standard, Sign::Minus);
    assert_eq!(t1.get(2).unwrap().standard, Sign::Plus);
    let t2 = gamma_commutation_table(1..=4, CAP).unwrap();
    assert_eq!(t2.get(2).unwrap().standard, Sign::Plus);
    assert_eq!(t2.get(3).unwrap().standard, Sign::Minus);
    let t3 = conjugation_symmetry_table(-1..=3, CAP).unwrap();
    assert_eq!(t3.get(2).unwrap().standard, Sign::Plus);
    assert_eq!(t3.get(3).unwrap().standard, Sign::Minus);
    assert_eq!(conjugation_symmetry(4, 2, CAP).unwrap(), conjugation_symmetry(2, 0, CAP).unwrap());
}

/// Commutation sign re-derived blade by blade: `γ_Aᵀ ε = s^p (−1)^[p/2] ε γ_A`.
#[test]
fn grade_law_on_every_blade() {
    for n in [2, 3, 4, 5, 6] {
        for metric in [MetricChoice::Standard, MetricChoice::Alternative] {
            let rep = build(n, metric, OddMode::Project);
            let eps = rep.metric();
            let s = rep.commutation_sign();
            for blade in rep.blade_basis(BladeBasis::Orthonormal) {
                let g = rep.blade_matrix(&blade).unwrap();
                let p = blade.grade() as i64;
                let sign = Sign::pow_neg_one(if s == Sign::Minus { p } else { 0 }) * Sign::pow_neg_one(p / 2);
                let lhs = &g.transpose() * eps;
                let rhs = eps * &g;
                let rhs = if sign == Sign::Plus { rhs } else { -&rhs };
                assert_eq!(lhs, rhs, "N={n} {metric:?} {blade}");
            }
        }
    }
}

/// `ε ε_a = σ(a) ε_ā` with the product formulas, over every bitcode.
#[test]
fn flip_sign_laws() {
    for n in 1..=12 {
        let rep = build(n, MetricChoice::Standard, OddMode::Project);
        let std = flip_signs(rep.epsilon(), rep.bits());
        let alt = flip_signs(rep.epsilon_alt(), rep.bits());
        for ((a, s), (_, t)) in std.iter().zip(&alt) {
            if n % 2 == 0 {
                assert_eq!(*s, Some(predicted_flip_sign(a, false)), "N={n} {a}");
            } else {
                // the projected odd metric coincides with the alternative one
                assert_eq!(*s, *t);
            }
            assert_eq!(*t, Some(predicted_flip_sign(a, true)), "N={n} {a}");
        }
        if n % 2 == 1 {
            let embedded = build(n, MetricChoice::Standard, OddMode::EmbedScalarN);
            for (a, s) in flip_signs(embedded.epsilon(), embedded.bits()) {
                assert_eq!(s, Some(predicted_flip_sign(&a, false)), "N={n} embedded {a}");
            }
        }
    }
}

/// `ε² ε_a = σ(a) σ(ā) ε_a`, so the flip law fixes the square.
#[test]
fn square_from_flip_law() {
    let t1 = metric_symmetry_table(1..=12, CAP).unwrap();
    for row in &t1.rows {
        let n = row.key as usize;
        let rep = build(n, MetricChoice::Standard, OddMode::Project);
        for (eps, want, alternative) in
            [(rep.epsilon(), row.standard, n % 2 == 1), (rep.epsilon_alt(), row.alternative, true)]
        {
            for (a, s) in flip_signs(eps, rep.bits()) {
                let a_bar: Bitcode = a.flip();
                let composed = predicted_flip_sign(&a, alternative) * predicted_flip_sign(&a_bar, alternative);
                assert_eq!(s.map(|_| composed), Some(want), "N={n} {a}");
            }
        }
    }
}

#[test]
fn periodicity() {
    for table in [metric_symmetry_table(1..=17, CAP).unwrap(), gamma_commutation_table(1..=17, CAP).unwrap()] {
        let report = period8_check(&table).unwrap();
        assert!(report.passed());
        assert_eq!(report.comparisons, 9);
    }
    let t3 = conjugation_symmetry_table(-4..=12, CAP).unwrap();
    let report = period8_check(&t3).unwrap();
    assert!(report.passed());
    assert_eq!(report.comparisons, 9);
}

#[test]
fn conjugation_follows_metric_table_at_k_minus_m() {
    let t1 = metric_symmetry_table(1..=8, CAP).unwrap();
    for d in -4i64..=12 {
        let n = (d - 1).rem_euclid(8) + 1;
        let row = t1.get(n).unwrap();
        let mut sigs = vec![signature_for_difference(d)];
        // other signatures with the same difference, within the dimension cap
        for m in 1..=4usize {
            let k = d + m as i64;
            if k >= 0 && (k as usize + m) <= 12 && (k as usize + m) >= 1 {
                sigs.push((k as usize, m));
            }
        }
        for (k, m) in sigs {
            let (c, c_alt) = conjugation_symmetry(k, m, CAP).unwrap();
            assert_eq!((c, c_alt), (row.standard, row.alternative), "K={k} M={m}");
        }
    }
}

#[test]
fn output_formats() {
    let t = metric_symmetry_table(1..=9, CAP).unwrap();
    let csv = t.to_csv();
    assert!(csv.starts_with("N,K,M,standard,alternative\n"));
    assert_eq!(csv.lines().count(), 10);
    assert!(csv.contains("\n3,3,0,-,-\n"));
    let md = t.to_markdown();
    assert!(md.contains("| N mod 8 |"));
    let json = serde_json::to_value(&t).unwrap();
    assert_eq!(json["kind"], "metric_square");
    assert_eq!(json["rows"][2]["standard"], "-");
}

#[test]
fn bad_ranges() {
    assert!(metric_symmetry_table(0..=3, CAP).is_err());
    let one = SignTable {
        kind: TableKind::Commutation,
        rows: vec![SignRow { key: 4, k: 4, m: 0, standard: Sign::Plus, alternative: Sign::Minus }],
    };
    assert!(period8_check(&one).is_err());
    assert!(metric_symmetry_table(1..=18, CAP).is_err());
}
