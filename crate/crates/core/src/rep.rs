//! Inductive construction of the chiral representation.
//!
//! Each step doubles the spinor dimension: existing vectors `X` become
//! `diag(X, -X)` and the new plane gets
//! `γ⁺ = [[0, 1], [1, 0]]`, `γ⁻ = [[0, -i], [i, 0]]` in block form. The new
//! bit is the most significant index, and "up" selects the upper block.
//! Timelike vectors are `i` times their spacelike form; metrics are always
//! built from the spacelike forms.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::bitcode::Bitcode;
use crate::error::{Result, SgaError};
use crate::matrix::{ExactMatrix, Matrix};
use crate::monomial::Monomial;
use crate::scalar::{Exact, Sign};

/// Cap on the number of constructed generators (twice the spinor bit count).
pub const DEFAULT_MAX_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricChoice {
    Standard,
    Alternative,
    PrimeStandard,
    PrimeAlternative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OddMode {
    /// Identify the chiral operator with 1 and use `γ_N = κ_{N-1}`.
    Project,
    /// Embed in N+1 dimensions; the N-th axis is the scalar dimension.
    EmbedScalarN,
    /// Embed in N+1 dimensions; the extra (N+1)-th axis is the scalar dimension.
    EmbedScalarNPlus1,
}

/// `K` spacelike and `M` timelike axes. Axes are numbered `0..N` internally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    k: usize,
    m: usize,
    timelike: Vec<usize>,
}

impl Signature {
    /// Uses the default timelike axes: the `γ⁻` axes first, then the unpaired
    /// odd axis, then the `γ⁺` axes. For (3,1) this makes `γ₀ = iγ₁⁻`.
    pub fn new(k: usize, m: usize) -> Result<Self> {
        let axes = Self::default_timelike(k + m, m);
        Self::with_timelike(k, m, axes)
    }

    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn with_timelike(k: usize, m: usize, mut axes: Vec<usize>) -> Result<Self> {
        let n = k + m;
        if n == 0 {
            return Err(SgaError::InvalidSignature("N = K + M must be at least 1".into()));
        }
        axes.sort_unstable();
        axes.dedup();
        if axes.len() != m {
            return Err(SgaError::InvalidSignature(format!(
                "expected {m} distinct timelike axes, got {}",
                axes.len()
            )));
        }
        if let Some(a) = axes.iter().find(|&&a| a >= n) {
            return Err(SgaError::InvalidSignature(format!("timelike axis {} exceeds N = {n}", a + 1)));
        }
        Ok(Signature { k, m, timelike: axes })
    }

    pub fn default_timelike(n_dims: usize, m: usize) -> Vec<usize> {
        let half = n_dims / 2;
        let mut order: Vec<usize> = (0..half).map(|k| 2 * k + 1).collect();
        if n_dims % 2 == 1 {
            order.push(n_dims - 1);
        }
        order.extend((0..half).map(|k| 2 * k));
        let mut axes: Vec<usize> = order.into_iter().take(m).collect();
        axes.sort_unstable();
        axes
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `N = K + M`.
    pub fn n_dims(&self) -> usize {
        self.k + self.m
    }

    /// `[N/2]`.
    pub fn half(&self) -> usize {
        self.n_dims() / 2
    }

    pub fn is_odd(&self) -> bool {
        self.n_dims() % 2 == 1
    }

    pub fn timelike(&self) -> &[usize] {
        &self.timelike
    }

    pub fn is_timelike(&self, axis: usize) -> bool {
        self.timelike.binary_search(&axis).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepConfig {
    pub signature: Signature,
    pub metric: MetricChoice,
    pub odd_mode: OddMode,
    /// Build the pseudoscalar from the physical (timelike = i·spacelike)
    /// vectors instead of the spacelike forms.
    pub physics_pseudoscalar: bool,
    /// Residual sign of the time-product `Γ` when `M ≥ 2`.
    pub gamma_sign: Sign,
    pub max_dim: usize,
}

impl RepConfig {
    pub fn new(signature: Signature) -> Self {
        RepConfig {
            signature,
            metric: MetricChoice::Standard,
            odd_mode: OddMode::Project,
            physics_pseudoscalar: false,
            gamma_sign: Sign::Plus,
            max_dim: DEFAULT_MAX_DIM,
        }
    }

    pub fn euclidean(n: usize) -> Result<Self> {
        Ok(Self::new(Signature::euclidean(n)?))
    }

    pub fn km(k: usize, m: usize) -> Result<Self> {
        Ok(Self::new(Signature::new(k, m)?))
    }

    pub fn with_metric(mut self, metric: MetricChoice) -> Self {
        self.metric = metric;
        self
    }

    pub fn with_odd_mode(mut self, mode: OddMode) -> Self {
        self.odd_mode = mode;
        self
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }

    /// Odd mode in effect: always `Project` for even N.
    pub fn effective_odd_mode(&self) -> OddMode {
        if self.signature.is_odd() {
            self.odd_mode
        } else {
            OddMode::Project
        }
    }

    fn embedded(&self) -> bool {
        self.effective_odd_mode() != OddMode::Project
    }

    /// Number of spinor bits, which is one more than `[N/2]` in embed modes.
    pub fn bits(&self) -> usize {
        self.signature.half() + usize::from(self.embedded())
    }
}

/// Which basis vector to fetch. Plane and axis numbers are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaIndex {
    /// Physical orthonormal axis `a`, including the `i` of timelike axes.
    Axis(usize),
    /// Spacelike form `γ_k⁺`.
    Plus(usize),
    /// Spacelike form `γ_k⁻`.
    Minus(usize),
    /// Chiral `γ_k`.
    Up(usize),
    /// Chiral `γ_k̄`.
    Down(usize),
    /// The unpaired odd axis `γ_N` (spacelike form).
    Unpaired,
    /// The scalar dimension of an embedded odd representation.
    ScalarAxis,
}

#[derive(Clone, Debug)]
pub struct Representation {
    config: RepConfig,
    bits: usize,
    plus: Vec<ExactMatrix>,
    minus: Vec<ExactMatrix>,
    up: Vec<ExactMatrix>,
    down: Vec<ExactMatrix>,
    // spacelike form and physical matrix of each axis 0..N
    forms: Vec<ExactMatrix>,
    physical: Vec<ExactMatrix>,
    scalar_form: Option<ExactMatrix>,
    unpaired: Option<ExactMatrix>,
    kappa: ExactMatrix,
    kappa_full: ExactMatrix,
    epsilon: ExactMatrix,
    epsilon_alt: ExactMatrix,
    metric: ExactMatrix,
    metric_square: Sign,
    commutation: Sign,
    reversion_metric: ExactMatrix,
    reversion_metric_inv: ExactMatrix,
    pseudoscalar: ExactMatrix,
    gamma_time: ExactMatrix,
    gamma_phase: Exact,
    conj: ExactMatrix,
    conj_inv: ExactMatrix,
    mono_up: Vec<Monomial<Exact>>,
    mono_down: Vec<Monomial<Exact>>,
    mono_physical: Vec<Monomial<Exact>>,
    mono_scalar: Option<Monomial<Exact>>,
    mono_metric: Monomial<Exact>,
}

/// The spacelike plane matrices and metric recursions for `bits` planes.
struct Tower {
    plus: Vec<ExactMatrix>,
    minus: Vec<ExactMatrix>,
    kappa: ExactMatrix,
    epsilon: ExactMatrix,
    epsilon_alt: ExactMatrix,
}

fn build_tower(bits: usize) -> Tower {
    let one = Matrix::identity(1);
    let mut t = Tower {
        plus: Vec::new(),
        minus: Vec::new(),
        kappa: one.clone(),
        epsilon: one.clone(),
        epsilon_alt: one,
    };
    for j in 1..=bits {
        let d = 1usize << (j - 1);
        let zero = Matrix::zeros(d, d);
        let id = Matrix::identity(d);
        let i_id = Matrix::scalar_identity(d, &Exact::i());
        // vectors are odd, so they lift to diag(X, -X)
        let lift = |x: &ExactMatrix| Matrix::blocks(x, &zero, &zero, &-x);
        t.plus = t.plus.iter().map(lift).collect();
        t.minus = t.minus.iter().map(lift).collect();
        t.plus.push(Matrix::blocks(&zero, &id, &id, &zero));
        t.minus.push(Matrix::blocks(&zero, &-&i_id, &i_id, &zero));
        let s_std = if (j - 1) % 2 == 0 { t.epsilon.clone() } else { -&t.epsilon };
        let s_alt = if j % 2 == 0 { t.epsilon_alt.clone() } else { -&t.epsilon_alt };
        t.epsilon = Matrix::blocks(&zero, &t.epsilon, &s_std, &zero);
        t.epsilon_alt = Matrix::blocks(&zero, &t.epsilon_alt, &s_alt, &zero);
        t.kappa = Matrix::blocks(&t.kappa, &zero, &zero, &-&t.kappa);
    }
    t
}

fn product<'a>(dim: usize, ms: impl IntoIterator<Item = &'a ExactMatrix>) -> ExactMatrix {
    ms.into_iter().fold(Matrix::identity(dim), |acc, m| &acc * m)
}

/// `Some(s)` when `xᵀ ε = s ε x`.
pub(crate) fn transpose_sign(x: &ExactMatrix, eps: &ExactMatrix) -> Option<Sign> {
    let lhs = &x.transpose() * eps;
    let rhs = eps * x;
    if lhs == rhs {
        Some(Sign::Plus)
    } else if lhs == -&rhs {
        Some(Sign::Minus)
    } else {
        None
    }
}

fn square_sign(m: &ExactMatrix) -> Option<Sign> {
    let sq = m * m;
    if sq.is_identity() {
        Some(Sign::Plus)
    } else if (-&sq).is_identity() {
        Some(Sign::Minus)
    } else {
        None
    }
}

impl Representation {
    pub fn build(config: RepConfig) -> Result<Self> {
        let sig = config.signature.clone();
        let n_dims = sig.n_dims();
        let half = sig.half();
        let bits = config.bits();
        let mode = config.effective_odd_mode();
        let needed = 2 * bits;
        if needed > config.max_dim {
            return Err(SgaError::DimensionCap { needed, cap: config.max_dim });
        }
        match config.metric {
            MetricChoice::PrimeStandard | MetricChoice::PrimeAlternative => {
                if !sig.is_odd() || mode == OddMode::Project {
                    return Err(SgaError::InvalidConfig(
                        "primed metrics need odd N and an embed odd mode".into(),
                    ));
                }
            }
            MetricChoice::Standard | MetricChoice::Alternative => {}
        }

        let dim = 1usize << bits;
        let tower = build_tower(bits);
        let Tower { plus, minus, kappa: kappa_full, epsilon: eps_rec, epsilon_alt: alt_rec } = tower;
        let i = Exact::i();
        let r = &Exact::sqrt2() * &Exact::ratio(1, 2);
        let up: Vec<ExactMatrix> =
            plus.iter().zip(&minus).map(|(p, m)| (p + &m.scale(&i)).scale(&r)).collect();
        let down: Vec<ExactMatrix> =
            plus.iter().zip(&minus).map(|(p, m)| (p - &m.scale(&i)).scale(&r)).collect();
        let i_minus: Vec<ExactMatrix> = minus.iter().map(|m| m.scale(&i)).collect();

        let (unpaired, scalar_form) = match mode {
            OddMode::Project if sig.is_odd() => (Some(kappa_full.clone()), None),
            OddMode::Project => (None, None),
            OddMode::EmbedScalarN => (None, Some(plus[half].clone())),
            OddMode::EmbedScalarNPlus1 => (None, Some(minus[half].clone())),
        };

        let forms: Vec<ExactMatrix> = (0..n_dims)
            .map(|a| {
                if a < 2 * half {
                    if a % 2 == 0 {
                        plus[a / 2].clone()
                    } else {
                        minus[a / 2].clone()
                    }
                } else {
                    match mode {
                        OddMode::Project => kappa_full.clone(),
                        OddMode::EmbedScalarN => minus[half].clone(),
                        OddMode::EmbedScalarNPlus1 => plus[half].clone(),
                    }
                }
            })
            .collect();
        let physical: Vec<ExactMatrix> = forms
            .iter()
            .enumerate()
            .map(|(a, f)| if sig.is_timelike(a) { f.scale(&i) } else { f.clone() })
            .collect();

        // standard and alternative metrics of this representation
        let (epsilon, epsilon_alt) = match (mode, sig.is_odd()) {
            (OddMode::Project, true) => {
                // the unpaired factor γ_N = κ goes first; this equals Π iγ_k⁻
                let e = &kappa_full * &eps_rec;
                (e.clone(), e)
            }
            (OddMode::Project, false) => (eps_rec.clone(), alt_rec.clone()),
            _ => (eps_rec.clone(), product(dim, &i_minus[..half])),
        };
        let metric = match config.metric {
            MetricChoice::Standard => epsilon.clone(),
            MetricChoice::Alternative => epsilon_alt.clone(),
            MetricChoice::PrimeStandard => product(dim, &plus[..half]),
            MetricChoice::PrimeAlternative => alt_rec.clone(),
        };

        let mut commutation = None;
        for f in &forms {
            let s = transpose_sign(f, &metric);
            match (s, commutation) {
                (None, _) => {
                    return Err(SgaError::InvalidConfig(format!(
                        "{:?} metric is not rotor invariant in {:?} mode",
                        config.metric, mode
                    )))
                }
                (Some(s), None) => commutation = Some(s),
                (Some(s), Some(c)) if s != c => {
                    return Err(SgaError::InvalidConfig(format!(
                        "{:?} metric is not rotor invariant in {:?} mode",
                        config.metric, mode
                    )))
                }
                _ => {}
            }
        }
        let commutation = commutation.unwrap_or(Sign::Plus);
        let metric_square = square_sign(&metric).expect("metric squares to ±1");

        // metric with γᵀε = +εγ, used for reversion
        let reversion_metric = if sig.is_odd() && mode == OddMode::Project {
            metric.clone()
        } else if bits % 2 == 1 {
            eps_rec.clone()
        } else {
            alt_rec.clone()
        };
        let reversion_metric_inv = reversion_metric.transpose();

        let kappa = if sig.is_odd() && mode == OddMode::Project { Matrix::identity(dim) } else { kappa_full.clone() };
        let pseudoscalar =
            if config.physics_pseudoscalar { product(dim, &physical) } else { product(dim, &forms) };

        let time_product = product(dim, sig.timelike().iter().map(|&a| &physical[a]));
        let gamma_phase = match sig.m() {
            0 => Exact::one(),
            1 => -Exact::i(),
            _ => {
                let base = match square_sign(&time_product) {
                    Some(Sign::Plus) => Exact::one(),
                    _ => Exact::i(),
                };
                match config.gamma_sign {
                    Sign::Plus => base,
                    Sign::Minus => -base,
                }
            }
        };
        let gamma_time = time_product.scale(&gamma_phase);
        let conj = &metric * &gamma_time.transpose();
        // Γ² = 1, so C⁻¹ = Γᵀ ε⁻¹
        let metric_inv = match metric_square {
            Sign::Plus => metric.clone(),
            Sign::Minus => -&metric,
        };
        let conj_inv = &gamma_time.transpose() * &metric_inv;

        let mono = |m: &ExactMatrix| Monomial::from_matrix(m).expect("basis vectors are monomial");
        Ok(Representation {
            mono_up: up.iter().map(mono).collect(),
            mono_down: down.iter().map(mono).collect(),
            mono_physical: physical.iter().map(mono).collect(),
            mono_scalar: scalar_form.as_ref().map(mono),
            mono_metric: mono(&metric),
            config,
            bits,
            plus,
            minus,
            up,
            down,
            forms,
            physical,
            scalar_form,
            unpaired,
            kappa,
            kappa_full,
            epsilon,
            epsilon_alt,
            metric,
            metric_square,
            commutation,
            reversion_metric,
            reversion_metric_inv,
            pseudoscalar,
            gamma_time,
            gamma_phase,
            conj,
            conj_inv,
        })
    }

    pub fn config(&self) -> &RepConfig {
        &self.config
    }

    pub fn signature(&self) -> &Signature {
        &self.config.signature
    }

    /// N.
    pub fn n_dims(&self) -> usize {
        self.config.signature.n_dims()
    }

    /// Number of spinor bits (planes in the constructed even algebra).
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Spinor dimension `2^bits`.
    pub fn dim(&self) -> usize {
        1 << self.bits
    }

    pub fn odd_mode(&self) -> OddMode {
        self.config.effective_odd_mode()
    }

    /// Odd N with the chiral operator identified with 1.
    pub fn is_projected(&self) -> bool {
        self.config.signature.is_odd() && self.odd_mode() == OddMode::Project
    }

    pub fn basis_spinor(&self, b: &Bitcode) -> Result<ExactMatrix> {
        if b.len() != self.bits {
            return Err(SgaError::ShapeMismatch(format!(
                "bitcode {b} has {} bits, representation has {}",
                b.len(),
                self.bits
            )));
        }
        Ok(Matrix::unit_column(self.dim(), b.index()))
    }

    pub fn basis_spinors(&self) -> Vec<ExactMatrix> {
        (0..self.dim()).map(|i| Matrix::unit_column(self.dim(), i)).collect()
    }

    pub fn gamma(&self, index: GammaIndex) -> Result<&ExactMatrix> {
        let plane = |k: usize, v: &'_ [ExactMatrix]| -> Result<usize> {
            if k == 0 || k > v.len() {
                Err(SgaError::IndexOutOfRange(format!("plane {k}, representation has {}", v.len())))
            } else {
                Ok(k - 1)
            }
        };
        match index {
            GammaIndex::Axis(a) => {
                if a == 0 || a > self.physical.len() {
                    return Err(SgaError::IndexOutOfRange(format!("axis {a}, N = {}", self.n_dims())));
                }
                Ok(&self.physical[a - 1])
            }
            GammaIndex::Plus(k) => Ok(&self.plus[plane(k, &self.plus)?]),
            GammaIndex::Minus(k) => Ok(&self.minus[plane(k, &self.minus)?]),
            GammaIndex::Up(k) => Ok(&self.up[plane(k, &self.up)?]),
            GammaIndex::Down(k) => Ok(&self.down[plane(k, &self.down)?]),
            GammaIndex::Unpaired => self
                .unpaired
                .as_ref()
                .ok_or_else(|| SgaError::IndexOutOfRange("no unpaired axis outside odd project mode".into())),
            GammaIndex::ScalarAxis => self
                .scalar_form
                .as_ref()
                .ok_or_else(|| SgaError::IndexOutOfRange("no scalar axis outside embed modes".into())),
        }
    }

    /// Physical orthonormal vectors, axis order `0..N`.
    pub fn gammas_orthonormal(&self) -> &[ExactMatrix] {
        &self.physical
    }

    /// Spacelike forms of the physical axes.
    pub fn spacelike_forms(&self) -> &[ExactMatrix] {
        &self.forms
    }

    pub fn chiral_gammas(&self) -> (&[ExactMatrix], &[ExactMatrix]) {
        (&self.up, &self.down)
    }

    pub fn scalar_axis(&self) -> Option<&ExactMatrix> {
        self.scalar_form.as_ref()
    }

    /// The metric in use for row spinors and products.
    pub fn metric(&self) -> &ExactMatrix {
        &self.metric
    }

    /// The standard metric of this representation.
    pub fn epsilon(&self) -> &ExactMatrix {
        &self.epsilon
    }

    /// The alternative metric of this representation.
    pub fn epsilon_alt(&self) -> &ExactMatrix {
        &self.epsilon_alt
    }

    /// `ε² = sign · 1` for the active metric.
    pub fn metric_square(&self) -> Sign {
        self.metric_square
    }

    /// `γ_aᵀ ε = s ε γ_a` for every physical axis.
    pub fn commutation_sign(&self) -> Sign {
        self.commutation
    }

    /// `ε⁻¹ = sign(ε²) ε`.
    pub fn metric_inverse(&self) -> ExactMatrix {
        match self.metric_square {
            Sign::Plus => self.metric.clone(),
            Sign::Minus => -&self.metric,
        }
    }

    pub fn chiral_operator(&self) -> &ExactMatrix {
        &self.kappa
    }

    /// `Z ⊗ … ⊗ Z` of the constructed even algebra, regardless of odd mode.
    pub fn full_chiral_operator(&self) -> &ExactMatrix {
        &self.kappa_full
    }

    pub fn pseudoscalar(&self) -> &ExactMatrix {
        &self.pseudoscalar
    }

    /// Phase-normalized product `Γ` of the timelike vectors.
    pub fn gamma_time(&self) -> &ExactMatrix {
        &self.gamma_time
    }

    /// Phase `c` in `Γ = c · Π γ_timelike`.
    pub fn gamma_phase(&self) -> &Exact {
        &self.gamma_phase
    }

    /// Conjugation operator `C = ε Γᵀ`.
    pub fn conjugation(&self) -> &ExactMatrix {
        &self.conj
    }

    pub fn conjugation_inverse(&self) -> &ExactMatrix {
        &self.conj_inv
    }

    /// Reversion on the full matrix algebra: `ε₊⁻¹ mᵀ ε₊` with `ε₊` the
    /// metric for which vectors satisfy `γᵀ ε₊ = ε₊ γ`.
    pub fn reverse(&self, m: &ExactMatrix) -> ExactMatrix {
        &(&self.reversion_metric_inv * &m.transpose()) * &self.reversion_metric
    }

    pub(crate) fn reversion_metrics(&self) -> (&ExactMatrix, &ExactMatrix) {
        (&self.reversion_metric, &self.reversion_metric_inv)
    }

    pub(crate) fn mono_up(&self) -> &[Monomial<Exact>] {
        &self.mono_up
    }

    pub(crate) fn mono_down(&self) -> &[Monomial<Exact>] {
        &self.mono_down
    }

    pub(crate) fn mono_physical(&self) -> &[Monomial<Exact>] {
        &self.mono_physical
    }

    pub(crate) fn mono_scalar(&self) -> Option<&Monomial<Exact>> {
        self.mono_scalar.as_ref()
    }

    pub(crate) fn mono_metric(&self) -> &Monomial<Exact> {
        &self.mono_metric
    }

    /// `η_aa` for physical axis `a` (0-based).
    pub fn eta(&self, a: usize) -> Sign {
        if self.signature().is_timelike(a) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Named matrices for the JSON dump.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        let sig = self.signature();
        obj.insert(
            "config".into(),
            json!({
                "K": sig.k(),
                "M": sig.m(),
                "N": sig.n_dims(),
                "timelike_axes": sig.timelike().iter().map(|a| a + 1).collect::<Vec<_>>(),
                "metric": self.config.metric,
                "odd_mode": self.odd_mode(),
                "bits": self.bits,
                "dim": self.dim(),
            }),
        );
        let put = |obj: &mut Map<String, Value>, key: String, m: &ExactMatrix| {
            obj.insert(key, serde_json::to_value(m).expect("matrix serializes"));
        };
        put(&mut obj, "metric".into(), &self.metric);
        put(&mut obj, "epsilon".into(), &self.epsilon);
        put(&mut obj, "epsilon_alt".into(), &self.epsilon_alt);
        put(&mut obj, "kappa".into(), &self.kappa);
        put(&mut obj, "pseudoscalar".into(), &self.pseudoscalar);
        for k in 1..=self.bits {
            put(&mut obj, format!("gamma_plus_{k}"), &self.plus[k - 1]);
            put(&mut obj, format!("gamma_minus_{k}"), &self.minus[k - 1]);
            put(&mut obj, format!("gamma_chiral_{k}"), &self.up[k - 1]);
            put(&mut obj, format!("gamma_chiral_{k}bar"), &self.down[k - 1]);
        }
        if let Some(u) = &self.unpaired {
            put(&mut obj, "gamma_unpaired".into(), u);
        }
        if let Some(s) = &self.scalar_form {
            put(&mut obj, "gamma_scalar_axis".into(), s);
        }
        for (a, g) in self.physical.iter().enumerate() {
            put(&mut obj, format!("gamma_axis_{}", a + 1), g);
        }
        put(&mut obj, "Gamma".into(), &self.gamma_time);
        put(&mut obj, "C".into(), &self.conj);
        Value::Object(obj)
    }
}
