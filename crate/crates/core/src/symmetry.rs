//! Rotors, conjugation, and discrete reflections.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, SgaError};
use crate::matrix::Matrix;
use crate::rep::{OddMode, Representation};
use crate::scalar::{Exact, Field, Sign};
use crate::sga::Element;

/// A rotation or boost parameter. Quarter turns are the only angles with
/// exact trigonometric values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    QuarterTurns(i64),
    Radians(f64),
}

impl Angle {
    pub fn radians(self) -> f64 {
        match self {
            Angle::QuarterTurns(q) => q as f64 * FRAC_PI_2,
            Angle::Radians(x) => x,
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::QuarterTurns(q) => write!(f, "{q}*pi/2"),
            Angle::Radians(x) => write!(f, "{x}"),
        }
    }
}

/// Accepts radians (`0.3`) or rational multiples of pi that land on quarter
/// turns (`pi/2`, `-pi`, `3pi/2`, `3*pi/2`).
impl FromStr for Angle {
    type Err = SgaError;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        let t = t.replace('π', "pi");
        if let Some(pos) = t.find("pi") {
            let head = t[..pos].trim_end_matches('*');
            let tail = &t[pos + 2..];
            let num: i64 = match head {
                "" | "+" => 1,
                "-" => -1,
                h => h.parse().map_err(|_| SgaError::Parse(format!("angle {s:?}")))?,
            };
            let den: i64 = match tail {
                "" => 1,
                d => d
                    .strip_prefix('/')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| SgaError::Parse(format!("angle {s:?}")))?,
            };
            if den == 0 {
                return Err(SgaError::Parse(format!("angle {s:?}")));
            }
            // quarter turns: num/den · 2
            return Ok(if (2 * num) % den == 0 {
                Angle::QuarterTurns(2 * num / den)
            } else {
                Angle::Radians(num as f64 * std::f64::consts::PI / den as f64)
            });
        }
        t.parse::<f64>().map(Angle::Radians).map_err(|_| SgaError::Parse(format!("angle {s:?}")))
    }
}

/// Half-angle trigonometry in a scalar field.
pub trait Trig: Field {
    /// `(cos θ/2, sin θ/2)`, or the hyperbolic pair for boosts.
    fn half_angle(angle: Angle, hyperbolic: bool) -> Result<(Self, Self)>;
}

impl Trig for Exact {
    fn half_angle(angle: Angle, hyperbolic: bool) -> Result<(Self, Self)> {
        let q = match angle {
            Angle::QuarterTurns(q) => q,
            Angle::Radians(x) if x == 0.0 => 0,
            Angle::Radians(x) => {
                return Err(SgaError::NotRepresentable(format!(
                    "angle {x} has no exact half-angle values; use a multiple of pi/2 or float mode"
                )))
            }
        };
        if hyperbolic {
            return if q == 0 {
                Ok((Exact::one(), Exact::zero()))
            } else {
                Err(SgaError::NotRepresentable("nonzero boosts need float mode".into()))
            };
        }
        let h = &Exact::sqrt2() * &Exact::ratio(1, 2);
        let (o, z) = (Exact::one(), Exact::zero());
        Ok(match q.rem_euclid(8) {
            0 => (o, z),
            1 => (h.clone(), h),
            2 => (z, o),
            3 => (-&h, h),
            4 => (-&o, z),
            5 => (-&h, -&h),
            6 => (z, -&o),
            _ => (h.clone(), -&h),
        })
    }
}

impl Trig for Complex64 {
    fn half_angle(angle: Angle, hyperbolic: bool) -> Result<(Self, Self)> {
        let x = angle.radians() / 2.0;
        Ok(if hyperbolic {
            (Complex64::new(x.cosh(), 0.0), Complex64::new(x.sinh(), 0.0))
        } else {
            (Complex64::new(x.cos(), 0.0), Complex64::new(x.sin(), 0.0))
        })
    }
}

/// What generated a rotor.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    /// The `γ_k⁺ γ_k⁻` plane.
    Plane { k: usize, boost: bool },
    /// The plane of two orthonormal axes, 1-based.
    Axes { a: usize, b: usize, boost: bool },
    /// A general bivector `Σ c_ab γ_a γ_b`.
    Bivector { terms: Vec<(usize, usize, f64)> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rotor<T> {
    pub matrix: Matrix<T>,
    pub reverse: Matrix<T>,
    pub generator: Generator,
    pub angle: Angle,
}

/// `R = cos(θ/2) − sin(θ/2) B` for a unit bivector `B` with `B² = −1`, or the
/// hyperbolic form when `B² = +1`. The reverse flips the sign of `B`.
fn rotor_from_unit<T: Trig>(b: &Matrix<T>, hyperbolic: bool, angle: Angle, generator: Generator) -> Result<Rotor<T>> {
    let (c, s) = T::half_angle(angle, hyperbolic)?;
    let id = Matrix::scalar_identity(b.rows(), &c);
    let sb = b.scale(&s);
    Ok(Rotor { matrix: id.checked_sub(&sb)?, reverse: id.checked_add(&sb)?, generator, angle })
}

/// Rotation (or boost) in the plane of `γ_k⁺` and `γ_k⁻`.
///
/// Rotations give `γ_k → e^{−iθ} γ_k` and multiply basis spinors with bit `k`
/// up by `e^{−iθ/2}`; a boost, when exactly one of the two axes is timelike,
/// gives `γ_k → e^{θ} γ_k` and `e^{θ/2}`.
pub fn plane_rotor<T: Trig>(rep: &Representation, k: usize, angle: Angle) -> Result<Rotor<T>> {
    let planes = rep.n_dims() / 2;
    if k == 0 || k > planes {
        return Err(SgaError::IndexOutOfRange(format!("plane {k}, N = {} has {planes} rotation planes", rep.n_dims())));
    }
    let sig = rep.signature();
    let boost = sig.is_timelike(2 * k - 2) != sig.is_timelike(2 * k - 1);
    let forms = rep.spacelike_forms();
    let b = &forms[2 * k - 2] * &forms[2 * k - 1];
    // γ⁺γ⁻ squares to −1; i γ⁺γ⁻ squares to +1
    let b = if boost { b.scale(&Exact::i()) } else { b };
    rotor_from_unit(&b.map(T::from_exact), boost, angle, Generator::Plane { k, boost })
}

/// Rotation in the plane of physical axes `a` and `b` (1-based, distinct).
pub fn axis_rotor<T: Trig>(rep: &Representation, a: usize, b: usize, angle: Angle) -> Result<Rotor<T>> {
    let n = rep.n_dims();
    if a == b || a == 0 || b == 0 || a > n || b > n {
        return Err(SgaError::IndexOutOfRange(format!("axes {a}, {b} for N = {n}")));
    }
    let g = rep.gammas_orthonormal();
    let biv = &g[a - 1] * &g[b - 1];
    let boost = rep.eta(a - 1) != rep.eta(b - 1);
    rotor_from_unit(&biv.map(T::from_exact), boost, angle, Generator::Axes { a, b, boost })
}

/// `exp(−B/2)` for a general bivector `B = Σ c_ab γ_a γ_b` over physical axes.
pub fn bivector_rotor(rep: &Representation, terms: &[(usize, usize, f64)]) -> Result<Rotor<Complex64>> {
    let n = rep.n_dims();
    let d = rep.dim();
    let g: Vec<Matrix<Complex64>> = rep.gammas_orthonormal().iter().map(|m| m.map(Complex64::from_exact)).collect();
    let mut biv = Matrix::zeros(d, d);
    for &(a, b, c) in terms {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(SgaError::IndexOutOfRange(format!("axes {a}, {b} for N = {n}")));
        }
        biv = biv.checked_add(&g[a - 1].checked_mul(&g[b - 1])?.scale(&Complex64::new(c, 0.0)))?;
    }
    let half = Complex64::new(0.5, 0.0);
    Ok(Rotor {
        matrix: expm(&biv.scale(&-half)),
        reverse: expm(&biv.scale(&half)),
        generator: Generator::Bivector { terms: terms.to_vec() },
        angle: Angle::Radians(1.0),
    })
}

/// Matrix exponential by scaling and squaring with a Taylor core.
pub fn expm(m: &Matrix<Complex64>) -> Matrix<Complex64> {
    let norm = m.max_abs() * m.rows() as f64;
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = m.scale(&Complex64::new(0.5f64.powi(squarings as i32), 0.0));
    let mut term = Matrix::identity(m.rows());
    let mut sum = term.clone();
    for j in 1..=20 {
        term = &term * &scaled;
        term = term.scale(&Complex64::new(1.0 / j as f64, 0.0));
        sum = &sum + &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Reverse of an arbitrary matrix in the algebra.
pub fn reverse<T: Field>(rep: &Representation, m: &Matrix<T>) -> Result<Matrix<T>> {
    let (eps, eps_inv) = rep.reversion_metrics();
    eps_inv.map(T::from_exact).checked_mul(&m.transpose())?.checked_mul(&eps.map(T::from_exact))
}

/// Multivectors go to `R m R̃`, columns to `R ψ`, rows to `ψ· R̃`.
pub fn rotate<T: Trig>(rotor: &Rotor<T>, x: &Element<T>) -> Result<Element<T>> {
    Ok(match x {
        Element::Scalar(s) => Element::Scalar(s.clone()),
        Element::Column(c) => Element::Column(rotor.matrix.checked_mul(c)?),
        Element::Row { column, row } => Element::Row {
            column: rotor.matrix.checked_mul(column)?,
            row: row.checked_mul(&rotor.reverse)?,
        },
        Element::Multivector(m) => Element::Multivector(rotor.matrix.checked_mul(m)?.checked_mul(&rotor.reverse)?),
    })
}

/// `C = ε Γᵀ` together with `Γ` and its phase.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationData {
    pub c: Matrix<Exact>,
    pub c_inv: Matrix<Exact>,
    pub gamma: Matrix<Exact>,
    pub phase: Exact,
}

/// Conjugation data for the active metric.
pub fn conjugation_operator(rep: &Representation) -> ConjugationData {
    ConjugationData {
        c: rep.conjugation().clone(),
        c_inv: rep.conjugation_inverse().clone(),
        gamma: rep.gamma_time().clone(),
        phase: rep.gamma_phase().clone(),
    }
}

/// `ε_alt Γᵀ`, the conjugation operator built on the other metric.
pub fn alternative_conjugation(rep: &Representation) -> Matrix<Exact> {
    rep.epsilon_alt() * &rep.gamma_time().transpose()
}

/// Symmetry sign of a matrix, if it is symmetric or antisymmetric.
pub fn symmetry(m: &Matrix<Exact>) -> Option<Sign> {
    let t = m.transpose();
    if &t == m {
        Some(Sign::Plus)
    } else if t == -m {
        Some(Sign::Minus)
    } else {
        None
    }
}

/// `C C*`, which is `±1`.
pub fn double_conjugation_sign(rep: &Representation) -> Result<Sign> {
    let c = rep.conjugation();
    (c * &c.conj())
        .as_scalar_multiple_of_identity()
        .and_then(|s| s.rational_sign())
        .ok_or_else(|| SgaError::NotInAlgebra("C C* is not a multiple of the identity".into()))
}

/// Spinors go to `C ψ*`, multivectors to `C m* C⁻¹`, scalars to `s*`.
pub fn conjugate<T: Field>(rep: &Representation, x: &Element<T>) -> Result<Element<T>> {
    let c = rep.conjugation().map(T::from_exact);
    Ok(match x {
        Element::Scalar(s) => Element::Scalar(s.conj()),
        Element::Column(v) => Element::Column(c.checked_mul(&v.conj())?),
        Element::Row { column, .. } => {
            let col = c.checked_mul(&column.conj())?;
            let row = col.transpose().checked_mul(&rep.metric().map(T::from_exact))?;
            Element::Row { column: col, row }
        }
        Element::Multivector(m) => {
            let c_inv = rep.conjugation_inverse().map(T::from_exact);
            Element::Multivector(c.checked_mul(&m.conj())?.checked_mul(&c_inv)?)
        }
    })
}

/// Whether `conj(m) = m`, exactly or within `tol`.
pub fn is_real_element<T: Field>(rep: &Representation, m: &Matrix<T>, tol: f64) -> Result<bool> {
    let Element::Multivector(c) = conjugate(rep, &Element::Multivector(m.clone()))? else { unreachable!() };
    Ok(c.close(m, tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReflectionClass {
    P,
    T,
    PT,
    Neither,
}

impl fmt::Display for ReflectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReflectionClass::P => "P",
            ReflectionClass::T => "T",
            ReflectionClass::PT => "PT",
            ReflectionClass::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reflection {
    pub class: ReflectionClass,
    pub flipped_spacelike: usize,
    pub flipped_timelike: usize,
    /// Physical axes (1-based) sent to minus themselves.
    pub flipped_axes: Vec<usize>,
}

/// Classifies `x → X x X⁻¹` for `X` a product of distinct orthonormal
/// generators, 1-based; `N+1` names the scalar dimension of an embedded
/// representation. The flips are read off the matrix action.
pub fn classify_reflection(rep: &Representation, generators: &[usize]) -> Result<Reflection> {
    let n = rep.n_dims();
    let embedded = rep.odd_mode() != OddMode::Project && rep.signature().is_odd();
    if generators.is_empty() {
        return Err(SgaError::InvalidConfig("empty generator set".into()));
    }
    let mut seen = generators.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(SgaError::InvalidConfig(format!("repeated generator in {generators:?}")));
    }
    let d = rep.dim();
    let mut x = Matrix::identity(d);
    for &g in generators {
        let m = match g {
            g if g >= 1 && g <= n => &rep.gammas_orthonormal()[g - 1],
            g if g == n + 1 && embedded => rep.scalar_axis().expect("embedded representations carry a scalar axis"),
            _ => return Err(SgaError::IndexOutOfRange(format!("generator {g} for N = {n}"))),
        };
        x = &x * m;
    }
    let x_inv = x.inverse()?;
    let mut flipped_axes = Vec::new();
    let (mut space, mut time) = (0, 0);
    for (a, g) in rep.gammas_orthonormal().iter().enumerate() {
        let image = &(&x * g) * &x_inv;
        if &image == g {
            continue;
        }
        if image != -g {
            return Err(SgaError::NotAReflection(a + 1));
        }
        flipped_axes.push(a + 1);
        if rep.signature().is_timelike(a) {
            time += 1;
        } else {
            space += 1;
        }
    }
    let class = match (space % 2 == 1, time % 2 == 1) {
        (true, true) => ReflectionClass::PT,
        (true, false) => ReflectionClass::P,
        (false, true) => ReflectionClass::T,
        (false, false) => ReflectionClass::Neither,
    };
    Ok(Reflection { class, flipped_spacelike: space, flipped_timelike: time, flipped_axes })
}
