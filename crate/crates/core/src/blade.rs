//! Basis blades: orthonormal and chiral multi-indices and their matrices.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitcode::Bitcode;
use crate::error::{Result, SgaError};
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::rep::{OddMode, Representation};
use crate::scalar::{Exact, Field, Sign};

/// What a chiral blade holds in one plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneFactor {
    None,
    /// `γ_k`
    Up,
    /// `γ_k̄`
    Down,
    /// `γ_k ∧ γ_k̄`
    Both,
}

impl PlaneFactor {
    fn grade(self) -> usize {
        match self {
            PlaneFactor::None => 0,
            PlaneFactor::Up | PlaneFactor::Down => 1,
            PlaneFactor::Both => 2,
        }
    }
}

/// A single chiral vector label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChiralLabel {
    Up(usize),
    Down(usize),
}

/// A canonical basis blade.
///
/// Orthonormal axes are 0-based; in embed modes axis `N` is the scalar
/// dimension. Chiral blades hold one factor per plane, planes ascending and
/// `k` before `k̄` within a plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BladeIndex {
    Ortho(Vec<usize>),
    Chiral(Vec<PlaneFactor>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BladeBasis {
    Orthonormal,
    Chiral,
}

fn permutation_sign<T: Ord>(items: &[T]) -> Sign {
    let mut inversions = 0usize;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i] > items[j] {
                inversions += 1;
            }
        }
    }
    Sign::from_parity(inversions % 2 == 1)
}

impl BladeIndex {
    pub fn unit_ortho() -> Self {
        BladeIndex::Ortho(Vec::new())
    }

    /// Canonicalizes a wedge of orthonormal axes, returning the permutation sign.
    pub fn ortho(axes: &[usize]) -> Result<(Sign, Self)> {
        let sign = permutation_sign(axes);
        let mut sorted = axes.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(SgaError::InvalidConfig(format!("repeated orthonormal axis in {axes:?}")));
        }
        Ok((sign, BladeIndex::Ortho(sorted)))
    }

    /// Canonicalizes a wedge of chiral vectors over `bits` planes.
    pub fn chiral(bits: usize, labels: &[ChiralLabel]) -> Result<(Sign, Self)> {
        let key = |l: &ChiralLabel| match *l {
            ChiralLabel::Up(k) => (k, 0),
            ChiralLabel::Down(k) => (k, 1),
        };
        let keys: Vec<(usize, u8)> = labels.iter().map(key).collect();
        let sign = permutation_sign(&keys);
        let mut factors = vec![PlaneFactor::None; bits];
        for &(k, bar) in &keys {
            if k == 0 || k > bits {
                return Err(SgaError::IndexOutOfRange(format!("plane {k}, representation has {bits}")));
            }
            let f = &mut factors[k - 1];
            *f = match (*f, bar) {
                (PlaneFactor::None, 0) => PlaneFactor::Up,
                (PlaneFactor::None, _) => PlaneFactor::Down,
                (PlaneFactor::Up, 1) | (PlaneFactor::Down, 0) => PlaneFactor::Both,
                _ => return Err(SgaError::InvalidConfig(format!("repeated chiral label in plane {k}"))),
            };
        }
        Ok((sign, BladeIndex::Chiral(factors)))
    }

    pub fn grade(&self) -> usize {
        match self {
            BladeIndex::Ortho(a) => a.len(),
            BladeIndex::Chiral(f) => f.iter().map(|x| x.grade()).sum(),
        }
    }

    /// Count of `k` minus count of `k̄`; orthonormal indices carry none.
    pub fn k_charge(&self, k: usize, bits: usize) -> Result<i64> {
        if k == 0 || k > bits {
            return Err(SgaError::IndexOutOfRange(format!("plane {k}, representation has {bits}")));
        }
        Ok(match self {
            BladeIndex::Ortho(_) => 0,
            BladeIndex::Chiral(f) => match f.get(k - 1) {
                Some(PlaneFactor::Up) => 1,
                Some(PlaneFactor::Down) => -1,
                _ => 0,
            },
        })
    }

    /// Sign taking the blade to its reverse, `(−1)^[p/2]`.
    pub fn reverse_sign(&self) -> Sign {
        Sign::from_parity((self.grade() / 2) % 2 == 1)
    }

    pub fn label(&self, n_dims: usize) -> String {
        match self {
            BladeIndex::Ortho(a) if a.is_empty() => "1".into(),
            BladeIndex::Chiral(f) if f.iter().all(|x| *x == PlaneFactor::None) => "1".into(),
            BladeIndex::Ortho(a) => a
                .iter()
                .map(|&x| if x == n_dims { "γs".to_string() } else { format!("γ{}", x + 1) })
                .collect(),
            BladeIndex::Chiral(f) => f
                .iter()
                .enumerate()
                .filter_map(|(i, x)| {
                    let k = i + 1;
                    match x {
                        PlaneFactor::None => None,
                        PlaneFactor::Up => Some(format!("γ{k}")),
                        PlaneFactor::Down => Some(format!("γ{k}̄")),
                        PlaneFactor::Both => Some(format!("γ{k}γ{k}̄")),
                    }
                })
                .collect(),
        }
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label(usize::MAX))
    }
}

fn chiral_factor(rep: &Representation, k: usize, f: PlaneFactor, reciprocal: bool) -> Option<Monomial<Exact>> {
    let (up, down) = (rep.mono_up(), rep.mono_down());
    match (f, reciprocal) {
        (PlaneFactor::None, _) => None,
        (PlaneFactor::Up, false) | (PlaneFactor::Down, true) => Some(up[k].clone()),
        (PlaneFactor::Down, false) | (PlaneFactor::Up, true) => Some(down[k].clone()),
        // ½[γ_k, γ_k̄] is +1 on bit k up and −1 on bit k down
        (PlaneFactor::Both, _) => Some(Monomial::diag(
            (0..rep.dim()).map(|i| if i >> k & 1 == 0 { Exact::one() } else { -Exact::one() }).collect(),
        )),
    }
}

impl Representation {
    /// Orthonormal axes available to blades: the physical axes plus the
    /// scalar axis in embed modes.
    pub fn blade_axes(&self) -> usize {
        self.n_dims() + usize::from(self.scalar_axis().is_some())
    }

    fn axis_mono(&self, a: usize) -> Result<&Monomial<Exact>> {
        if a < self.n_dims() {
            Ok(&self.mono_physical()[a])
        } else if a == self.n_dims() {
            self.mono_scalar().ok_or_else(|| SgaError::IndexOutOfRange(format!("axis {}", a + 1)))
        } else {
            Err(SgaError::IndexOutOfRange(format!("axis {}", a + 1)))
        }
    }

    fn axis_eta(&self, a: usize) -> Sign {
        if a < self.n_dims() {
            self.eta(a)
        } else {
            Sign::Plus
        }
    }

    fn check_blade(&self, blade: &BladeIndex) -> Result<()> {
        match blade {
            BladeIndex::Ortho(a) => {
                if let Some(&x) = a.iter().find(|&&x| x >= self.blade_axes()) {
                    return Err(SgaError::IndexOutOfRange(format!("axis {}", x + 1)));
                }
            }
            BladeIndex::Chiral(f) => {
                if f.len() != self.bits() {
                    return Err(SgaError::ShapeMismatch(format!(
                        "chiral blade over {} planes, representation has {}",
                        f.len(),
                        self.bits()
                    )));
                }
            }
        }
        Ok(())
    }

    /// `γ_A` as a monomial matrix.
    pub fn blade_monomial(&self, blade: &BladeIndex) -> Result<Monomial<Exact>> {
        self.check_blade(blade)?;
        let mut acc = Monomial::identity(self.dim());
        match blade {
            BladeIndex::Ortho(axes) => {
                for &a in axes {
                    acc = acc.mul(self.axis_mono(a)?);
                }
            }
            BladeIndex::Chiral(f) => {
                for (k, &x) in f.iter().enumerate() {
                    if let Some(m) = chiral_factor(self, k, x, false) {
                        acc = acc.mul(&m);
                    }
                }
            }
        }
        Ok(acc)
    }

    /// The reciprocal blade `γ^A`, normalized by `tr(γ^A γ_B) = 2^bits δ_AB`.
    pub fn reciprocal_monomial(&self, blade: &BladeIndex) -> Result<Monomial<Exact>> {
        self.check_blade(blade)?;
        let mut acc = Monomial::identity(self.dim());
        match blade {
            BladeIndex::Ortho(axes) => {
                for &a in axes.iter().rev() {
                    let m = self.axis_mono(a)?;
                    acc = match self.axis_eta(a) {
                        Sign::Plus => acc.mul(m),
                        Sign::Minus => acc.mul(&m.scale(&-Exact::one())),
                    };
                }
            }
            BladeIndex::Chiral(f) => {
                for (k, &x) in f.iter().enumerate().rev() {
                    if let Some(m) = chiral_factor(self, k, x, true) {
                        acc = acc.mul(&m);
                    }
                }
            }
        }
        Ok(acc)
    }

    pub fn blade_matrix(&self, blade: &BladeIndex) -> Result<Matrix<Exact>> {
        Ok(self.blade_monomial(blade)?.to_matrix())
    }

    pub fn reciprocal_blade_matrix(&self, blade: &BladeIndex) -> Result<Matrix<Exact>> {
        Ok(self.reciprocal_monomial(blade)?.to_matrix())
    }

    /// A basis of the full matrix algebra: `4^bits` blades.
    ///
    /// With odd N projected, orthonormal blades stop at grade `[N/2]`; the
    /// higher grades equal lower ones times the pseudoscalar.
    pub fn blade_basis(&self, basis: BladeBasis) -> Vec<BladeIndex> {
        match basis {
            BladeBasis::Orthonormal => {
                let axes = self.blade_axes();
                let max_grade = if self.is_projected() { self.n_dims() / 2 } else { axes };
                let mut out = Vec::with_capacity(self.dim() * self.dim());
                for p in 0..=max_grade {
                    combinations(axes, p, &mut |c| out.push(BladeIndex::Ortho(c.to_vec())));
                }
                out
            }
            BladeBasis::Chiral => {
                let bits = self.bits();
                let all = [PlaneFactor::None, PlaneFactor::Up, PlaneFactor::Down, PlaneFactor::Both];
                (0..1usize << (2 * bits))
                    .map(|code| BladeIndex::Chiral((0..bits).map(|k| all[code >> (2 * k) & 3]).collect()))
                    .collect()
            }
        }
    }

    /// Whether odd-N embed mode is active (blades may use the scalar axis).
    pub fn is_embedded(&self) -> bool {
        self.odd_mode() != OddMode::Project && self.signature().is_odd()
    }
}

fn combinations(n: usize, p: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == p {
            f(cur);
            return;
        }
        for a in start..n {
            if n - a < p - cur.len() {
                break;
            }
            cur.push(a);
            rec(a + 1, n, p, cur, f);
            cur.pop();
        }
    }
    rec(0, n, p, &mut Vec::with_capacity(p), f);
}

/// Coefficients `a^A` of a multivector over a blade basis; zeros omitted.
#[derive(Clone, Debug, PartialEq)]
pub struct BladeDecomposition<T> {
    pub basis: BladeBasis,
    pub coefficients: BTreeMap<BladeIndex, T>,
}

impl<T: Field> BladeDecomposition<T> {
    pub fn reconstruct(&self, rep: &Representation) -> Result<Matrix<T>> {
        let dim = rep.dim();
        let mut out: Matrix<T> = Matrix::zeros(dim, dim);
        for (blade, c) in &self.coefficients {
            let m = rep.blade_monomial(blade)?.map(T::from_exact);
            for (i, j, v) in m.nonzeros() {
                let cur = out.get(i, j).clone();
                out.set(i, j, cur.add(&v.mul(c)));
            }
        }
        Ok(out)
    }

    pub fn get(&self, blade: &BladeIndex) -> T {
        self.coefficients.get(blade).cloned().unwrap_or_else(T::zero)
    }
}

/// Blade expansion `a^A = tr(γ^A m) / 2^bits` over the chosen basis.
pub fn decompose_multivector<T: Field>(
    rep: &Representation,
    m: &Matrix<T>,
    basis: BladeBasis,
) -> Result<BladeDecomposition<T>> {
    let dim = rep.dim();
    if m.shape() != (dim, dim) {
        return Err(SgaError::ShapeMismatch(format!("expected {dim}x{dim}, got {:?}", m.shape())));
    }
    let norm = T::from_exact(&Exact::ratio(1, dim as i64));
    let mut coefficients = BTreeMap::new();
    for blade in rep.blade_basis(basis) {
        let r = rep.reciprocal_monomial(&blade)?.map(T::from_exact);
        let c = r.trace_with(m).mul(&norm);
        if !c.is_zero() {
            coefficients.insert(blade, c);
        }
    }
    Ok(BladeDecomposition { basis, coefficients })
}

/// Coefficients `c^{ab}` with `m = Σ c^{ab} ε_a ε_b·`, i.e. `m ε⁻¹`.
pub fn spinor_outer_decompose<T: Field>(
    rep: &Representation,
    m: &Matrix<T>,
) -> Result<BTreeMap<(Bitcode, Bitcode), T>> {
    let dim = rep.dim();
    if m.shape() != (dim, dim) {
        return Err(SgaError::ShapeMismatch(format!("expected {dim}x{dim}, got {:?}", m.shape())));
    }
    let inv = rep.metric_inverse().map(T::from_exact);
    let c = m.checked_mul(&inv)?;
    let mut out = BTreeMap::new();
    for a in 0..dim {
        for b in 0..dim {
            let v = c.get(a, b);
            if !v.is_zero() {
                out.insert((Bitcode::from_index(rep.bits(), a), Bitcode::from_index(rep.bits(), b)), v.clone());
            }
        }
    }
    Ok(out)
}

/// Rebuilds `Σ c^{ab} ε_a ε_b·`.
pub fn spinor_outer_reconstruct<T: Field>(
    rep: &Representation,
    coeffs: &BTreeMap<(Bitcode, Bitcode), T>,
) -> Result<Matrix<T>> {
    let dim = rep.dim();
    let metric = rep.metric().map(T::from_exact);
    let mut c = Matrix::zeros(dim, dim);
    for ((a, b), v) in coeffs {
        if a.len() != rep.bits() || b.len() != rep.bits() {
            return Err(SgaError::ShapeMismatch(format!("bitcodes {a}, {b}")));
        }
        c.set(a.index(), b.index(), v.clone());
    }
    c.checked_mul(&metric)
}

/// `(γ^A_{ab}, γ_A^{ab})`: the outer product `ε_a ε_b·` expands with the first
/// over blades, and the blade `γ_A` expands with the second over outer products.
pub fn gamma_coefficients(rep: &Representation, blade: &BladeIndex, a: &Bitcode, b: &Bitcode) -> Result<(Exact, Exact)> {
    if a.len() != rep.bits() || b.len() != rep.bits() {
        return Err(SgaError::ShapeMismatch(format!("bitcodes {a}, {b} for {} bits", rep.bits())));
    }
    let (ia, ib) = (a.index(), b.index());
    let eps = rep.mono_metric();
    let lower = eps.mul(&rep.reciprocal_monomial(blade)?).entry(ib, ia);
    let lower = &lower * &Exact::ratio(1, rep.dim() as i64);
    let upper = rep.blade_monomial(blade)?.mul(eps).entry(ia, ib);
    let upper = match rep.metric_square() {
        Sign::Plus => upper,
        Sign::Minus => -upper,
    };
    Ok((lower, upper))
}
