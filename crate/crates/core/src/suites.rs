//! Verification suites shared by the CLI and the acceptance target.
//!
//! Every suite is deterministic for a given seed and returns a report of
//! named checks; a check that errors counts as failed.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitcode::{Bit, Bitcode};
use crate::blade::BladeBasis;
use crate::brauer_weyl::verify_isomorphism;
use crate::error::{Result, SgaError};
use crate::matrix::{ExactMatrix, FloatMatrix, Matrix};
use crate::rep::{GammaIndex, MetricChoice, OddMode, RepConfig, Representation, DEFAULT_MAX_DIM};
use crate::scalar::{Exact, Field, Sign};
use crate::sga::{exact, Element, FormalSum, Sga};
use crate::symmetry::{
    axis_rotor, classify_reflection, conjugate, double_conjugation_sign, plane_rotor, symmetry, Angle,
    ReflectionClass, Rotor,
};
use crate::tables::{
    conjugation_symmetry_table, flip_signs, gamma_commutation_table, metric_symmetry_table, period8_check,
    predicted_flip_sign,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Pauli,
    Dirac,
    BrauerWeyl,
    SignLaws,
    Periodicity,
    Rotors,
    Conjugation,
    Exclusion,
    OddN,
    Trace,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Pauli,
        Suite::Dirac,
        Suite::BrauerWeyl,
        Suite::SignLaws,
        Suite::Periodicity,
        Suite::Rotors,
        Suite::Conjugation,
        Suite::Exclusion,
        Suite::OddN,
        Suite::Trace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pauli => "pauli",
            Suite::Dirac => "dirac",
            Suite::BrauerWeyl => "brauer-weyl",
            Suite::SignLaws => "sign-laws",
            Suite::Periodicity => "periodicity",
            Suite::Rotors => "rotors",
            Suite::Conjugation => "conjugation",
            Suite::Exclusion => "exclusion",
            Suite::OddN => "odd-n",
            Suite::Trace => "trace",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SgaError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| SgaError::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Largest even `N` in the Brauer–Weyl round trip.
    pub max_even_n: usize,
    /// Random cases per randomized law.
    pub cases: usize,
    pub max_dim: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 2024, max_even_n: 12, cases: 100, max_dim: DEFAULT_MAX_DIM }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

const MAX_LISTED_FAILURES: usize = 5;

/// Counts cases and keeps the first few failures.
#[derive(Default)]
pub struct Tally {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(what());
            }
        }
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, f: impl FnOnce(&mut Tally) -> Result<()>) {
        let mut t = Tally::default();
        let outcome = f(&mut t);
        let mut failures = t.failures;
        let passed = match outcome {
            Ok(()) => t.failed == 0 && t.cases > 0,
            Err(e) => {
                failures.push(format!("error: {e}"));
                false
            }
        };
        if t.cases == 0 && failures.is_empty() {
            failures.push("no cases ran".into());
        }
        if t.failed > failures.len() {
            failures.push(format!("{} failures in total", t.failed));
        }
        self.checks.push(Check { name: name.into(), passed, cases: t.cases, failures });
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        let passed = self.checks.iter().all(|c| c.passed);
        SuiteReport { suite, passed, checks: self.checks }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let mut rec = Recorder::new();
    match suite {
        Suite::Pauli => pauli(&mut rec),
        Suite::Dirac => dirac(&mut rec),
        Suite::BrauerWeyl => brauer_weyl(&mut rec, opts),
        Suite::SignLaws => sign_laws(&mut rec, opts),
        Suite::Periodicity => periodicity(&mut rec, opts),
        Suite::Rotors => rotors(&mut rec, opts),
        Suite::Conjugation => conjugation(&mut rec, opts),
        Suite::Exclusion => exclusion(&mut rec, opts),
        Suite::OddN => odd_n(&mut rec),
        Suite::Trace => trace(&mut rec, opts),
    }
    rec.finish(suite)
}

pub fn run_all(opts: &SuiteOptions) -> Vec<SuiteReport> {
    Suite::ALL.into_iter().map(|s| run_suite(s, opts)).collect()
}

fn build(k: usize, m: usize) -> Result<Representation> {
    Representation::build(RepConfig::km(k, m)?)
}

fn bc(s: &str) -> Result<Bitcode> {
    s.parse()
}

fn int_matrix(rows: &[&[(i64, i64)]]) -> Result<ExactMatrix> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(re, im)| Exact::gaussian(re, im)).collect()).collect())
}

fn signed<T: Field>(m: &Matrix<T>, s: Sign) -> Matrix<T> {
    match s {
        Sign::Plus => m.clone(),
        Sign::Minus => -m,
    }
}

fn half() -> Exact {
    Exact::ratio(1, 2)
}

fn inv_sqrt2() -> Exact {
    &Exact::sqrt2() * &half()
}

/// `χψ· ∓ ψχ·` on basis spinors.
fn outer_pair(s: &Sga<Exact>, a: &str, b: &str, anti: bool) -> Result<ExactMatrix> {
    let rep = s.rep();
    let (x, y) = (rep.basis_spinor(&bc(a)?)?, rep.basis_spinor(&bc(b)?)?);
    let ab = s.outer_product(&x, &y)?;
    let ba = s.outer_product(&y, &x)?;
    Ok(if anti { &ab - &ba } else { &ab + &ba })
}

fn pauli(rec: &mut Recorder) {
    let rep = match build(3, 0) {
        Ok(r) => r,
        Err(e) => return rec.check("build (3,0)", |_| Err(e)),
    };
    let s = exact(&rep);
    let i = Exact::i();
    let r2 = Exact::sqrt2();
    let z = Exact::zero();

    rec.check("basis spinors", |t| {
        t.expect(rep.basis_spinor(&bc("u")?)? == Matrix::column(vec![Exact::one(), z.clone()]), || "up".into());
        t.expect(rep.basis_spinor(&bc("d")?)? == Matrix::column(vec![z.clone(), Exact::one()]), || "down".into());
        Ok(())
    });
    rec.check("orthonormal vectors are the sigma matrices", |t| {
        let s1 = int_matrix(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]])?;
        let s2 = int_matrix(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]])?;
        let s3 = int_matrix(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]])?;
        t.expect(*rep.gamma(GammaIndex::Plus(1))? == s1, || "gamma_1^+ != sigma_1".into());
        t.expect(*rep.gamma(GammaIndex::Minus(1))? == s2, || "gamma_1^- != sigma_2".into());
        t.expect(*rep.gamma(GammaIndex::Axis(3))? == s3, || "gamma_3 != sigma_3".into());
        Ok(())
    });
    rec.check("pseudoscalars", |t| {
        let i2 = rep.gamma(GammaIndex::Plus(1))? * rep.gamma(GammaIndex::Minus(1))?;
        let want_i2 = int_matrix(&[&[(0, 1), (0, 0)], &[(0, 0), (0, -1)]])?;
        t.expect(i2 == want_i2, || "I_2".into());
        t.expect(*rep.pseudoscalar() == Matrix::scalar_identity(2, &i), || "I_3 != i".into());
        t.expect(*rep.gamma(GammaIndex::Axis(3))? == i2.scale(&-&i), || "gamma_3 != -i I_2".into());
        Ok(())
    });
    rec.check("chiral vectors carry sqrt 2", |t| {
        let up = Matrix::from_rows(vec![vec![z.clone(), r2.clone()], vec![z.clone(), z.clone()]])?;
        let down = Matrix::from_rows(vec![vec![z.clone(), z.clone()], vec![r2.clone(), z.clone()]])?;
        t.expect(*rep.gamma(GammaIndex::Up(1))? == up, || "gamma_1".into());
        t.expect(*rep.gamma(GammaIndex::Down(1))? == down, || "gamma_1bar".into());
        Ok(())
    });
    rec.check("spinor metric and conjugation operator", |t| {
        let eps = int_matrix(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]])?;
        t.expect(*rep.metric() == eps, || "epsilon".into());
        t.expect(rep.gamma(GammaIndex::Minus(1))?.scale(&i) == eps, || "epsilon != i gamma_1^-".into());
        t.expect(symmetry(rep.metric()) == Some(Sign::Minus), || "epsilon not antisymmetric".into());
        t.expect(*rep.conjugation() == eps, || "C != epsilon".into());
        Ok(())
    });
    rec.check("singlet", |t| {
        t.expect(outer_pair(&s, "d", "u", true)?.is_identity(), || "[e_d, e_u]. != 1".into());
        Ok(())
    });
    rec.check("triplet", |t| {
        let g1 = rep.gamma(GammaIndex::Up(1))?;
        let g1b = rep.gamma(GammaIndex::Down(1))?;
        let g3 = rep.gamma(GammaIndex::Axis(3))?;
        t.expect(outer_pair(&s, "u", "u", false)? == g1.scale(&r2), || "{e_u, e_u}.".into());
        t.expect(outer_pair(&s, "u", "d", false)? == -g3, || "{e_u, e_d}.".into());
        t.expect(outer_pair(&s, "d", "d", false)? == g1b.scale(&-&r2), || "{e_d, e_d}.".into());
        Ok(())
    });
}

/// One outer-product identity of the Dirac algebra.
struct DiracIdentity {
    label: &'static str,
    a: &'static str,
    b: &'static str,
    anti: bool,
    rhs: ExactMatrix,
}

/// The sixteen Dirac outer-product identities.
///
/// Bitcodes are written boost bit first, spin bit second, which is the
/// construction order. The chiral vector labels of the identities run the
/// other way: their `γ_1` (spin plane) is the second constructed pair.
pub fn dirac_identities(rep: &Representation) -> Result<Vec<(String, ExactMatrix, ExactMatrix)>> {
    if rep.n_dims() != 4 || rep.is_projected() {
        return Err(SgaError::InvalidConfig("Dirac identities need N = 4".into()));
    }
    let s = exact(rep);
    let up = |p: usize| rep.gamma(GammaIndex::Up(3 - p)).cloned();
    let dn = |p: usize| rep.gamma(GammaIndex::Down(3 - p)).cloned();
    let kappa = rep.chiral_operator();
    let one = Matrix::identity(4);
    let h = half();
    let r = inv_sqrt2();
    // γ_k ∧ γ_k̄
    let wedge = |p: usize| -> Result<ExactMatrix> {
        let (u, d) = (up(p)?, dn(p)?);
        Ok((&(&u * &d) - &(&d * &u)).scale(&h))
    };
    let (g1, g1b, g2, g2b) = (up(1)?, dn(1)?, up(2)?, dn(2)?);
    let (w1, w2) = (wedge(1)?, wedge(2)?);
    let neg = |m: ExactMatrix| -&m;
    let vectors = [("uu", "du", g1.scale(&r)), ("dd", "ud", g1b.scale(&-&r)), ("uu", "ud", g2.scale(&-&r)), ("dd", "du", g2b.scale(&-&r))];

    let mut ids = vec![
        DiracIdentity { label: "right-handed singlet", a: "dd", b: "uu", anti: true, rhs: (&one + kappa).scale(&h) },
        DiracIdentity { label: "left-handed singlet", a: "ud", b: "du", anti: true, rhs: (&one - kappa).scale(&h) },
        DiracIdentity { label: "right bivector +1", a: "uu", b: "uu", anti: false, rhs: neg(&g1 * &g2) },
        DiracIdentity { label: "right bivector 0", a: "uu", b: "dd", anti: false, rhs: neg((&w1 + &w2).scale(&h)) },
        DiracIdentity { label: "right bivector -1", a: "dd", b: "dd", anti: false, rhs: neg(&g1b * &g2b) },
        DiracIdentity { label: "left bivector +1", a: "du", b: "du", anti: false, rhs: neg(&g1 * &g2b) },
        DiracIdentity { label: "left bivector 0", a: "du", b: "ud", anti: false, rhs: neg((&w1 - &w2).scale(&h)) },
        DiracIdentity { label: "left bivector -1", a: "ud", b: "ud", anti: false, rhs: neg(&g1b * &g2) },
    ];
    for (i, (a, b, v)) in vectors.iter().enumerate() {
        ids.push(DiracIdentity { label: ["vector 1", "vector 1bar", "vector 2", "vector 2bar"][i], a, b, anti: false, rhs: v.clone() });
    }
    for (i, (a, b, v)) in vectors.iter().enumerate() {
        ids.push(DiracIdentity {
            label: ["pseudovector 1", "pseudovector 1bar", "pseudovector 2", "pseudovector 2bar"][i],
            a,
            b,
            anti: true,
            rhs: kappa * v,
        });
    }
    ids.into_iter()
        .map(|id| {
            let lhs = outer_pair(&s, id.a, id.b, id.anti)?;
            let bracket = if id.anti { "[]" } else { "{}" };
            Ok((format!("{}: {}e_{}, e_{}{}.", id.label, &bracket[..1], id.a, id.b, &bracket[1..]), lhs, id.rhs))
        })
        .collect()
}

fn dirac(rec: &mut Recorder) {
    let rep = match build(3, 1) {
        Ok(r) => r,
        Err(e) => return rec.check("build (3,1)", |_| Err(e)),
    };
    rec.check("basis ordering by chirality", |t| {
        for (code, want) in [("uu", Sign::Plus), ("dd", Sign::Plus), ("du", Sign::Minus), ("ud", Sign::Minus)] {
            let b = bc(code)?;
            let e = rep.basis_spinor(&b)?;
            t.expect(b.chirality() == want && rep.chiral_operator() * &e == signed(&e, want), || code.into());
        }
        Ok(())
    });
    match dirac_identities(&rep) {
        Ok(ids) => {
            for (name, lhs, rhs) in ids {
                rec.check(name, |t| {
                    t.expect(lhs == rhs, || "outer product differs".into());
                    Ok(())
                });
            }
        }
        Err(e) => rec.check("outer-product identities", |_| Err(e)),
    }
}

fn brauer_weyl(rec: &mut Recorder, opts: &SuiteOptions) {
    for n in (2..=opts.max_even_n).step_by(2) {
        for metric in [MetricChoice::Standard, MetricChoice::Alternative] {
            rec.check(format!("round trip N={n} {metric:?}"), |t| {
                let rep = Representation::build(RepConfig::euclidean(n)?.with_metric(metric).with_max_dim(opts.max_dim))?;
                let report = verify_isomorphism(&rep, BladeBasis::Orthonormal)?;
                let bits = rep.bits();
                t.expect(report.blades_checked == 1 << n, || format!("{} blades", report.blades_checked));
                t.expect(report.outer_checked == 1 << (2 * bits), || format!("{} outer products", report.outer_checked));
                for f in &report.failures {
                    t.expect(false, || format!("{}: {}", f.direction, f.item));
                }
                t.expect(report.passed(), || "failures".into());
                Ok(())
            });
        }
    }
}

fn sign_laws(rec: &mut Recorder, opts: &SuiteOptions) {
    let table = metric_symmetry_table(1..=12, opts.max_dim);
    rec.check("flip sign laws for every bitcode", |t| {
        for n in 1..=12 {
            let rep = Representation::build(RepConfig::euclidean(n)?.with_max_dim(opts.max_dim))?;
            let std = flip_signs(rep.epsilon(), rep.bits());
            let alt = flip_signs(rep.epsilon_alt(), rep.bits());
            for ((a, s), (_, u)) in std.iter().zip(&alt) {
                // with κ identified with 1 the standard metric follows the alternative law
                let std_law = n % 2 == 1;
                t.expect(*s == Some(predicted_flip_sign(a, std_law)), || format!("N={n} standard {a}"));
                t.expect(*u == Some(predicted_flip_sign(a, true)), || format!("N={n} alternative {a}"));
            }
            if n % 2 == 1 {
                let emb = Representation::build(
                    RepConfig::euclidean(n)?.with_odd_mode(OddMode::EmbedScalarN).with_max_dim(opts.max_dim),
                )?;
                for (a, s) in flip_signs(emb.epsilon(), emb.bits()) {
                    t.expect(s == Some(predicted_flip_sign(&a, false)), || format!("N={n} embedded {a}"));
                }
            }
        }
        Ok(())
    });
    rec.check("square and symmetry agree with the metric table", |t| {
        let table = table.clone()?;
        for n in 1..=12usize {
            let row = table.get(n as i64).ok_or_else(|| SgaError::InvalidConfig(format!("missing row {n}")))?;
            let rep = Representation::build(RepConfig::euclidean(n)?.with_max_dim(opts.max_dim))?;
            for (eps, want, label) in [(rep.epsilon(), row.standard, "standard"), (rep.epsilon_alt(), row.alternative, "alternative")] {
                let id = Matrix::identity(rep.dim());
                t.expect(eps * eps == signed(&id, want), || format!("N={n} {label} square"));
                t.expect(symmetry(eps) == Some(want), || format!("N={n} {label} symmetry"));
                t.expect(eps * &eps.transpose() == id, || format!("N={n} {label} orthogonal"));
            }
        }
        Ok(())
    });
    rec.check("antisymmetric standard metric at N=3 and N=4", |t| {
        let table = table.clone()?;
        for n in [3, 4] {
            t.expect(table.get(n).map(|r| r.standard) == Some(Sign::Minus), || format!("N={n}"));
        }
        Ok(())
    });
}

fn periodicity(rec: &mut Recorder, opts: &SuiteOptions) {
    let tables = [
        ("metric square", metric_symmetry_table(1..=17, opts.max_dim)),
        ("vector commutation", gamma_commutation_table(1..=17, opts.max_dim)),
        ("conjugation symmetry", conjugation_symmetry_table(-4..=12, opts.max_dim)),
    ];
    for (label, table) in tables {
        rec.check(format!("period 8: {label}"), |t| {
            let table = table?;
            let report = period8_check(&table)?;
            t.expect(report.comparisons == 9, || format!("{} comparisons", report.comparisons));
            for v in &report.violations {
                t.expect(false, || format!("{} vs {}", v.key, v.key_plus_8));
            }
            t.expect(report.passed(), || "violations".into());
            Ok(())
        });
    }
}

fn sandwich<T: Field>(r: &Rotor<T>, m: &Matrix<T>) -> Matrix<T> {
    &(&r.matrix * m) * &r.reverse
}

fn is_boost_plane(rep: &Representation, k: usize) -> bool {
    let sig = rep.signature();
    sig.is_timelike(2 * k - 2) != sig.is_timelike(2 * k - 1)
}

fn to_float(m: &ExactMatrix) -> FloatMatrix {
    m.map(Complex64::from_exact)
}

fn rotor_reps() -> Result<Vec<Representation>> {
    let mut reps = Vec::new();
    for (k, m) in [(2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (3, 1), (4, 1), (7, 1)] {
        reps.push(build(k, m)?);
    }
    reps.push(Representation::build(RepConfig::km(4, 0)?.with_metric(MetricChoice::Alternative))?);
    reps.push(Representation::build(RepConfig::km(3, 0)?.with_odd_mode(OddMode::EmbedScalarN))?);
    Ok(reps)
}

fn rep_label(rep: &Representation) -> String {
    let c = rep.config();
    format!("({},{}) {:?} {:?}", rep.signature().k(), rep.signature().m(), c.metric, rep.odd_mode())
}

fn rotors(rec: &mut Recorder, opts: &SuiteOptions) {
    let reps = match rotor_reps() {
        Ok(r) => r,
        Err(e) => return rec.check("build", |_| Err(e)),
    };
    let h = inv_sqrt2();
    let (phase_up, phase_down) = (&h - &h.mul_i(), &h + &h.mul_i());
    rec.check("quarter turns: metric preserved and phase laws exact", |t| {
        for rep in &reps {
            let planes = rep.n_dims() / 2;
            for k in (1..=planes).filter(|&k| !is_boost_plane(rep, k)) {
                let r: Rotor<Exact> = plane_rotor(rep, k, Angle::QuarterTurns(1))?;
                let eps = rep.metric();
                let label = || format!("{} plane {k}", rep_label(rep));
                t.expect(&(&r.matrix.transpose() * eps) * &r.matrix == *eps, || format!("{} metric", label()));
                for l in 1..=planes {
                    let (u, d) = (rep.gamma(GammaIndex::Up(l))?, rep.gamma(GammaIndex::Down(l))?);
                    let (pu, pd) = if l == k { (-Exact::i(), Exact::i()) } else { (Exact::one(), Exact::one()) };
                    t.expect(sandwich(&r, u) == u.scale(&pu), || format!("{} gamma_{l}", label()));
                    t.expect(sandwich(&r, d) == d.scale(&pd), || format!("{} gamma_{l}bar", label()));
                }
                for b in Bitcode::all(rep.bits()) {
                    let e = rep.basis_spinor(&b)?;
                    let ph = if b.bit(k)? == Bit::Up { &phase_up } else { &phase_down };
                    t.expect(&r.matrix * &e == e.scale(ph), || format!("{} spinor {b}", label()));
                }
            }
        }
        Ok(())
    });
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rec.check("random angles: metric preserved and phase laws within 1e-12", |t| {
        for rep in &reps {
            let eps = to_float(rep.metric());
            for k in (1..=rep.n_dims() / 2).filter(|&k| !is_boost_plane(rep, k)) {
                for _ in 0..20 {
                    let theta: f64 = rng.gen_range(-2.0 * std::f64::consts::PI..2.0 * std::f64::consts::PI);
                    let r: Rotor<Complex64> = plane_rotor(rep, k, Angle::Radians(theta))?;
                    let label = || format!("{} plane {k} theta {theta}", rep_label(rep));
                    t.expect((&(&r.matrix.transpose() * &eps) * &r.matrix).close(&eps, 1e-12), || format!("{} metric", label()));
                    let u = to_float(rep.gamma(GammaIndex::Up(k))?);
                    let d = to_float(rep.gamma(GammaIndex::Down(k))?);
                    let ph = Complex64::new(0.0, -theta).exp();
                    t.expect(sandwich(&r, &u).close(&u.scale(&ph), 1e-12), || format!("{} gamma_k", label()));
                    t.expect(sandwich(&r, &d).close(&d.scale(&ph.inv()), 1e-12), || format!("{} gamma_kbar", label()));
                    for b in Bitcode::all(rep.bits()) {
                        let e = Matrix::unit_column(rep.dim(), b.index());
                        let half_phase = Complex64::new(0.0, if b.bit(k)? == Bit::Up { -theta / 2.0 } else { theta / 2.0 }).exp();
                        t.expect((&r.matrix * &e).close(&e.scale(&half_phase), 1e-12), || format!("{} spinor {b}", label()));
                    }
                }
            }
        }
        Ok(())
    });
    rec.check("boosts: metric preserved and boost laws within 1e-12", |t| {
        let rep = build(3, 1)?;
        let k = (1..=2).find(|&k| is_boost_plane(&rep, k)).ok_or_else(|| SgaError::InvalidConfig("no boost plane".into()))?;
        let eps = to_float(rep.metric());
        let u = to_float(rep.gamma(GammaIndex::Up(k))?);
        let d = to_float(rep.gamma(GammaIndex::Down(k))?);
        for _ in 0..20 {
            let theta: f64 = rng.gen_range(-2.0..2.0);
            let r: Rotor<Complex64> = plane_rotor(&rep, k, Angle::Radians(theta))?;
            let e = Complex64::new(theta, 0.0).exp();
            t.expect((&(&r.matrix.transpose() * &eps) * &r.matrix).close(&eps, 1e-12), || format!("metric theta {theta}"));
            t.expect(sandwich(&r, &u).close(&u.scale(&e), 1e-12), || format!("gamma_k theta {theta}"));
            t.expect(sandwich(&r, &d).close(&d.scale(&e.inv()), 1e-12), || format!("gamma_kbar theta {theta}"));
            for b in Bitcode::all(rep.bits()) {
                let v = Matrix::unit_column(rep.dim(), b.index());
                let f = Complex64::new(if b.bit(k)? == Bit::Up { theta / 2.0 } else { -theta / 2.0 }, 0.0).exp();
                t.expect((&r.matrix * &v).close(&v.scale(&f), 1e-12), || format!("spinor {b} theta {theta}"));
            }
        }
        Ok(())
    });
}

/// Gaussian-integer column with entries in `[-5, 5] + i[-5, 5]`, never zero.
pub fn random_spinor(rng: &mut impl Rng, dim: usize) -> ExactMatrix {
    loop {
        let v = Matrix::column((0..dim).map(|_| Exact::gaussian(rng.gen_range(-5..=5), rng.gen_range(-5..=5))).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

pub const CONJUGATION_SIGNATURES: [(usize, usize); 6] = [(2, 0), (3, 0), (3, 1), (4, 1), (9, 1), (11, 1)];

fn conjugation(rec: &mut Recorder, opts: &SuiteOptions) {
    let table = conjugation_symmetry_table(-4..=12, opts.max_dim);
    rec.check("conjugation table anchor: K-M=2 symmetric", |t| {
        let table = table.clone()?;
        t.expect(table.get(2).map(|r| r.standard) == Some(Sign::Plus), || "K-M=2".into());
        Ok(())
    });
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xC0);
    for (k, m) in CONJUGATION_SIGNATURES {
        let rep = match build(k, m) {
            Ok(r) => r,
            Err(e) => {
                rec.check(format!("({k},{m}) build"), |_| Err(e));
                continue;
            }
        };
        let n = rep.n_dims();
        let c = rep.conjugation();
        rec.check(format!("({k},{m}) C R* = R C"), |t| {
            let cf = to_float(c);
            for _ in 0..20 {
                let a = rng.gen_range(1..=n);
                let b = (a + rng.gen_range(1..n) - 1) % n + 1;
                let theta: f64 = rng.gen_range(-3.0..3.0);
                let r: Rotor<Complex64> = axis_rotor(&rep, a, b, Angle::Radians(theta))?;
                t.expect((&cf * &r.matrix.conj()).close(&(&r.matrix * &cf), 1e-12), || format!("axes {a},{b} theta {theta}"));
            }
            for kk in (1..=n / 2).filter(|&kk| !is_boost_plane(&rep, kk)) {
                let r: Rotor<Exact> = plane_rotor(&rep, kk, Angle::QuarterTurns(1))?;
                t.expect(c * &r.matrix.conj() == &r.matrix * c, || format!("exact plane {kk}"));
            }
            Ok(())
        });
        if m >= 1 {
            rec.check(format!("({k},{m}) Gamma squares to 1 and is traceless"), |t| {
                let g = rep.gamma_time();
                t.expect((g * g).is_identity(), || "Gamma^2".into());
                t.expect(g.trace().is_zero(), || "trace".into());
                Ok(())
            });
        }
        rec.check(format!("({k},{m}) double conjugation follows the table at K-M"), |t| {
            let table = table.clone()?;
            let d = k as i64 - m as i64;
            let row = table.get(d).ok_or_else(|| SgaError::InvalidConfig(format!("no row for K-M={d}")))?;
            let sign = double_conjugation_sign(&rep)?;
            t.expect(sign == row.standard, || format!("C C* = {sign}, table {}", row.standard));
            t.expect(symmetry(c) == Some(sign), || "symmetry of C".into());
            Ok(())
        });
        rec.check(format!("({k},{m}) positivity"), |t| {
            let s = exact(&rep);
            let g = rep.gamma_time();
            for _ in 0..opts.cases {
                let psi = random_spinor(&mut rng, rep.dim());
                let bar = conjugate(&rep, &Element::Column(psi.clone()))?.as_matrix();
                let v = s.scalar_product(&bar, &(g * &psi))?;
                let norm = (&psi.adjoint() * &psi).get(0, 0).clone();
                t.expect(v == norm && norm.rational_sign() == Some(Sign::Plus), || format!("{v:?}"));
            }
            Ok(())
        });
        rec.check(format!("({k},{m}) conjugate outer product carries the metric square"), |t| {
            let s = exact(&rep);
            let cases = if rep.dim() > 16 { 2 } else { 10 };
            for _ in 0..cases {
                let (psi, chi) = (random_spinor(&mut rng, rep.dim()), random_spinor(&mut rng, rep.dim()));
                let conj_chi = conjugate(&rep, &Element::Column(chi.clone()))?.as_matrix();
                let conj_psi = conjugate(&rep, &Element::Column(psi.clone()))?.as_matrix();
                let lhs = conjugate(&rep, &Element::Multivector(s.outer_product(&psi, &conj_chi)?))?.as_matrix();
                let rhs = signed(&s.outer_product(&conj_psi, &chi)?, rep.metric_square());
                t.expect(lhs == rhs, || "outer product".into());
            }
            Ok(())
        });
    }
}

fn exclusion(rec: &mut Recorder, opts: &SuiteOptions) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xE5);
    for n in [2, 3, 4] {
        rec.check(format!("N={n} column-column and row-row are forbidden"), |t| {
            let rep = Representation::build(RepConfig::euclidean(n)?)?;
            let strict: Sga<Exact> = Sga::new(&rep);
            let lenient: Sga<Exact> = Sga::new(&rep).forbidden_as_zero(true);
            for _ in 0..opts.cases {
                let (x, y) = (random_spinor(&mut rng, rep.dim()), random_spinor(&mut rng, rep.dim()));
                let (cx, cy) = (strict.column(x.clone())?, strict.column(y.clone())?);
                let (rx, ry) = (strict.row_of(&x)?, strict.row_of(&y)?);
                for (p, q, what) in [(&cx, &cy, "column column"), (&rx, &ry, "row row")] {
                    t.expect(matches!(strict.multiply(p, q), Err(SgaError::ForbiddenProduct(_))), || what.into());
                    let sum = lenient.multiply_sums(&FormalSum::from_element(p.clone()), &FormalSum::from_element(q.clone()))?;
                    t.expect(sum.is_zero(), || format!("{what} as zero"));
                    let chain = lenient.simplify_chain_formal(&[p.clone(), q.clone()])?;
                    t.expect(chain.is_zero(), || format!("{what} chain as zero"));
                }
                t.expect(strict.multiply(&rx, &cy).is_ok(), || "row column".into());
            }
            Ok(())
        });
    }
}

/// `γ_a γ_b + γ_b γ_a = 2 η_ab` over the physical vectors.
pub fn clifford_violations(rep: &Representation) -> Vec<(usize, usize)> {
    let g = rep.gammas_orthonormal();
    let id = Matrix::<Exact>::identity(rep.dim());
    let mut bad = Vec::new();
    for a in 0..g.len() {
        for b in a..g.len() {
            let ac = &(&g[a] * &g[b]) + &(&g[b] * &g[a]);
            let want = if a == b { signed(&id.scale(&Exact::int(2)), rep.eta(a)) } else { Matrix::zeros(rep.dim(), rep.dim()) };
            if ac != want {
                bad.push((a + 1, b + 1));
            }
        }
    }
    bad
}

fn odd_n(rec: &mut Recorder) {
    rec.check("N=3 projected: gamma_3 and the pseudoscalar", |t| {
        let rep = build(3, 0)?;
        let g3 = rep.gamma(GammaIndex::Axis(3))?;
        t.expect(*g3 == Matrix::diag(vec![Exact::one(), -Exact::one()]), || "gamma_3".into());
        t.expect(*rep.pseudoscalar() == Matrix::scalar_identity(2, &Exact::i()), || "I_3".into());
        t.expect(rep.chiral_operator().is_identity(), || "kappa".into());
        Ok(())
    });
    rec.check("N=3 embedded: the scalar-axis reflection is parity", |t| {
        for mode in [OddMode::EmbedScalarN, OddMode::EmbedScalarNPlus1] {
            let rep = Representation::build(RepConfig::km(3, 0)?.with_odd_mode(mode))?;
            let r = classify_reflection(&rep, &[4])?;
            t.expect(r.class == ReflectionClass::P, || format!("{mode:?}: {}", r.class));
            t.expect(r.flipped_axes == vec![1, 2, 3], || format!("{mode:?}: flipped {:?}", r.flipped_axes));
        }
        Ok(())
    });
    rec.check("Clifford relation in both modes", |t| {
        for mode in [OddMode::Project, OddMode::EmbedScalarN, OddMode::EmbedScalarNPlus1] {
            for (k, m) in [(3, 0), (2, 1), (5, 0), (4, 1)] {
                let rep = Representation::build(RepConfig::km(k, m)?.with_odd_mode(mode))?;
                let bad = clifford_violations(&rep);
                t.expect(bad.is_empty(), || format!("({k},{m}) {mode:?}: {bad:?}"));
                if let Ok(s) = rep.gamma(GammaIndex::ScalarAxis) {
                    let anti = rep.gammas_orthonormal().iter().all(|g| (&(g * s) + &(s * g)).is_zero());
                    t.expect(anti && (s * s).is_identity(), || format!("({k},{m}) {mode:?}: scalar axis"));
                }
            }
        }
        Ok(())
    });
}

#[derive(Clone, Copy, Debug)]
enum Pick {
    Scalar,
    Column,
    Row,
    Mv,
}

/// A random chain of `len` elements whose species respect the
/// multiplication grid. Multivectors are sparse Gaussian-integer matrices.
pub fn random_legal_chain(s: &Sga<Exact>, rng: &mut impl Rng, len: usize) -> Result<Vec<Element<Exact>>> {
    let d = s.rep().dim();
    let mut state: Option<Pick> = None;
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let allowed: &[Pick] = match state {
            None => &[Pick::Scalar, Pick::Column, Pick::Row, Pick::Mv],
            Some(Pick::Column) => &[Pick::Scalar, Pick::Row],
            Some(Pick::Row) => &[Pick::Scalar, Pick::Column, Pick::Mv],
            Some(_) => &[Pick::Scalar, Pick::Column, Pick::Mv],
        };
        let p = allowed[rng.gen_range(0..allowed.len())];
        state = match (state, p) {
            (st, Pick::Scalar) => st,
            (None, p) => Some(p),
            (Some(Pick::Column), Pick::Row) => Some(Pick::Mv),
            (Some(Pick::Row), Pick::Column) => None,
            (Some(Pick::Row), Pick::Mv) => Some(Pick::Row),
            (Some(_), p) => Some(p),
        };
        out.push(match p {
            Pick::Scalar => Element::Scalar(Exact::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3))),
            Pick::Column => s.column(random_spinor(rng, d))?,
            Pick::Row => s.row_of(&random_spinor(rng, d))?,
            Pick::Mv => {
                let mut m = Matrix::zeros(d, d);
                for _ in 0..rng.gen_range(1..=2 * d) {
                    let (i, j) = (rng.gen_range(0..d), rng.gen_range(0..d));
                    m.set(i, j, Exact::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3)));
                }
                s.multivector(m)?
            }
        });
    }
    Ok(out)
}

fn trace(rec: &mut Recorder, opts: &SuiteOptions) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7A);
    let sigs = [(2, 0), (3, 0), (4, 0), (3, 1), (5, 0), (6, 0), (8, 0)];
    rec.check("trace of an outer product is the scalar product", |t| {
        for i in 0..opts.cases {
            let (k, m) = sigs[i % sigs.len()];
            let rep = build(k, m)?;
            let s = exact(&rep);
            let (psi, chi) = (random_spinor(&mut rng, rep.dim()), random_spinor(&mut rng, rep.dim()));
            t.expect(s.outer_product(&chi, &psi)?.trace() == s.scalar_product(&psi, &chi)?, || format!("({k},{m})"));
        }
        Ok(())
    });
    rec.check("simplified chains equal direct products", |t| {
        for i in 0..opts.cases {
            let (k, m) = sigs[i % sigs.len()];
            let rep = build(k, m)?;
            let s = exact(&rep);
            let chain = random_legal_chain(&s, &mut rng, 4)?;
            let species: Vec<_> = chain.iter().map(|e| e.species()).collect();
            let simplified = s.simplify_chain(&chain)?.as_matrix();
            t.expect(simplified == s.evaluate_directly(&chain)?, || format!("({k},{m}) {species:?}"));
        }
        Ok(())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_checks_are_reported() {
        let mut rec = Recorder::new();
        rec.check("fails", |t| {
            for i in 0..10 {
                t.expect(i < 3, || format!("case {i}"));
            }
            Ok(())
        });
        rec.check("errors", |_| Err(SgaError::NotInvertible));
        rec.check("empty", |_| Ok(()));
        let r = rec.finish(Suite::Trace);
        assert!(!r.passed);
        assert_eq!(r.checks[0].cases, 10);
        assert_eq!(r.checks[0].failures.len(), MAX_LISTED_FAILURES + 1);
        assert!(r.failed_checks().count() == 3);
    }
}
