//! Scalars: exact elements of Q(i, √2) and a common field interface shared
//! with `Complex64`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use dashu_int::IBig;
use dashu_ratio::RBig;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::SgaError;

/// An exact element `(a + b√2) + i(c + d√2)` with rational a, b, c, d.
///
/// Zero is stored without allocation, which keeps sparse gamma matrices cheap.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Exact(Option<Box<[RBig; 4]>>);

impl Exact {
    pub const ZERO: Exact = Exact(None);

    pub fn zero() -> Self {
        Exact(None)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        Self::from_parts([RBig::ZERO, RBig::ZERO, RBig::ONE, RBig::ZERO])
    }

    pub fn sqrt2() -> Self {
        Self::from_parts([RBig::ZERO, RBig::ONE, RBig::ZERO, RBig::ZERO])
    }

    pub fn int(v: i64) -> Self {
        Self::from_parts([RBig::from(v), RBig::ZERO, RBig::ZERO, RBig::ZERO])
    }

    /// The rational `num/den`. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let r = RBig::from_parts_signed(IBig::from(num), IBig::from(den));
        Self::from_parts([r, RBig::ZERO, RBig::ZERO, RBig::ZERO])
    }

    /// `re + i·im` with integer parts.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self::from_parts([RBig::from(re), RBig::ZERO, RBig::from(im), RBig::ZERO])
    }

    /// Builds from `[a, b, c, d]` meaning `(a + b√2) + i(c + d√2)`.
    pub fn from_parts(p: [RBig; 4]) -> Self {
        if p.iter().all(|r| r.is_zero()) {
            Exact(None)
        } else {
            Exact(Some(Box::new(p)))
        }
    }

    /// `[a, b, c, d]` with `self = (a + b√2) + i(c + d√2)`.
    pub fn parts(&self) -> [RBig; 4] {
        match &self.0 {
            None => [RBig::ZERO, RBig::ZERO, RBig::ZERO, RBig::ZERO],
            Some(p) => (**p).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Some(p) => p[0].is_one() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero(),
            None => false,
        }
    }

    /// Imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        match &self.0 {
            None => true,
            Some(p) => p[2].is_zero() && p[3].is_zero(),
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        match &self.0 {
            None => Exact(None),
            Some(p) => Exact(Some(Box::new([
                p[0].clone(),
                p[1].clone(),
                -p[2].clone(),
                -p[3].clone(),
            ]))),
        }
    }

    pub fn mul_i(&self) -> Self {
        match &self.0 {
            None => Exact(None),
            Some(p) => Exact(Some(Box::new([
                -p[2].clone(),
                -p[3].clone(),
                p[0].clone(),
                p[1].clone(),
            ]))),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        self.0.as_ref()?;
        // z·z̄ = u + v√2 lies in Q(√2); invert that, then multiply by z̄.
        let zz = self * &self.conj();
        let [u, v, _, _] = zz.parts();
        let two = RBig::from(2u8);
        let norm = &u * &u - &two * &v * &v;
        let inv_real = [&u / &norm, -(&v / &norm), RBig::ZERO, RBig::ZERO];
        Some(&Self::from_parts(inv_real) * &self.conj())
    }

    /// Nearest complex float, rounding each rational component once.
    pub fn to_complex(&self) -> Complex64 {
        match &self.0 {
            None => Complex64::new(0.0, 0.0),
            Some(p) => {
                let f = |r: &RBig| r.to_f64().value();
                let s2 = std::f64::consts::SQRT_2;
                Complex64::new(f(&p[0]) + s2 * f(&p[1]), f(&p[2]) + s2 * f(&p[3]))
            }
        }
    }

    /// Sign of a nonzero rational real value, `None` otherwise.
    pub fn rational_sign(&self) -> Option<Sign> {
        let p = self.0.as_ref()?;
        if !(p[1].is_zero() && p[2].is_zero() && p[3].is_zero()) {
            return None;
        }
        Some(if p[0] > RBig::ZERO { Sign::Plus } else { Sign::Minus })
    }

    /// Parses a single component string such as `"-3/4"` or `"2"`.
    pub fn parse_rational(s: &str) -> Result<RBig, SgaError> {
        let t = s.trim();
        if let Some((_, den)) = t.split_once('/') {
            if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
                return Err(SgaError::Parse(format!("zero denominator in {s:?}")));
            }
        }
        RBig::from_str_radix(t, 10).map_err(|e| SgaError::Parse(format!("bad rational {s:?}: {e:?}")))
    }
}

fn fmt_rational(r: &RBig) -> String {
    format!("{}/{}", r.numerator(), r.denominator())
}

impl fmt::Debug for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(p) = &self.0 else {
            return write!(f, "0");
        };
        let mut terms: Vec<String> = Vec::new();
        let units = ["", "√2", "i", "√2·i"];
        for (r, unit) in p.iter().zip(units) {
            if r.is_zero() {
                continue;
            }
            let neg = *r < RBig::ZERO;
            let mag = if neg { -r.clone() } else { r.clone() };
            let body = if unit.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                unit.to_string()
            } else if mag.is_int() {
                format!("{mag}{unit}")
            } else {
                format!("({mag}){unit}")
            };
            if terms.is_empty() {
                terms.push(if neg { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{} {body}", if neg { "-" } else { "+" }));
            }
        }
        write!(f, "{}", terms.join(" "))
    }
}

impl Add<&Exact> for &Exact {
    type Output = Exact;
    fn add(self, rhs: &Exact) -> Exact {
        match (&self.0, &rhs.0) {
            (None, _) => rhs.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => Exact::from_parts([
                &a[0] + &b[0],
                &a[1] + &b[1],
                &a[2] + &b[2],
                &a[3] + &b[3],
            ]),
        }
    }
}

impl AddAssign<&Exact> for Exact {
    fn add_assign(&mut self, rhs: &Exact) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl Sub<&Exact> for &Exact {
    type Output = Exact;
    fn sub(self, rhs: &Exact) -> Exact {
        self + &(-rhs)
    }
}

impl Neg for &Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        match &self.0 {
            None => Exact(None),
            Some(p) => Exact(Some(Box::new([
                -p[0].clone(),
                -p[1].clone(),
                -p[2].clone(),
                -p[3].clone(),
            ]))),
        }
    }
}

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        -&self
    }
}

// (a + b√2)(e + f√2) with zero shortcuts; returns (real, √2) parts.
fn mul_q2(a: &RBig, b: &RBig, e: &RBig, f: &RBig) -> (RBig, RBig) {
    let prod = |x: &RBig, y: &RBig| {
        if x.is_zero() || y.is_zero() {
            RBig::ZERO
        } else {
            x * y
        }
    };
    let bf = prod(b, f);
    let r = prod(a, e) + (&bf + &bf);
    let s = prod(a, f) + prod(b, e);
    (r, s)
}

impl Mul<&Exact> for &Exact {
    type Output = Exact;
    fn mul(self, rhs: &Exact) -> Exact {
        let (Some(x), Some(y)) = (&self.0, &rhs.0) else {
            return Exact(None);
        };
        let x_real = x[2].is_zero() && x[3].is_zero();
        let y_real = y[2].is_zero() && y[3].is_zero();
        if x_real && y_real {
            let (r, s) = mul_q2(&x[0], &x[1], &y[0], &y[1]);
            return Exact::from_parts([r, s, RBig::ZERO, RBig::ZERO]);
        }
        let (rr, rs) = mul_q2(&x[0], &x[1], &y[0], &y[1]);
        let (ir, is) = mul_q2(&x[2], &x[3], &y[2], &y[3]);
        let (c1r, c1s) = mul_q2(&x[0], &x[1], &y[2], &y[3]);
        let (c2r, c2s) = mul_q2(&x[2], &x[3], &y[0], &y[1]);
        Exact::from_parts([rr - ir, rs - is, c1r + c2r, c1s + c2s])
    }
}

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `(-1)^e`.
    pub fn pow_neg_one(e: i64) -> Self {
        Self::from_parity(e.rem_euclid(2) == 1)
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Arithmetic shared by the exact field and complex floats, so matrix code
/// is written once.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_exact(x: &Exact) -> Self;
    fn to_complex(&self) -> Complex64;
    /// Equality for exact values, closeness within `tol` for floats.
    fn close(&self, rhs: &Self, tol: f64) -> bool;

    fn from_i64(v: i64) -> Self {
        Self::from_exact(&Exact::int(v))
    }
    fn i() -> Self {
        Self::from_exact(&Exact::i())
    }
}

impl Field for Exact {
    fn zero() -> Self {
        Exact::zero()
    }
    fn one() -> Self {
        Exact::one()
    }
    fn is_zero(&self) -> bool {
        Exact::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Exact::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        Exact::inv(self)
    }
    fn from_exact(x: &Exact) -> Self {
        x.clone()
    }
    fn to_complex(&self) -> Complex64 {
        Exact::to_complex(self)
    }
    fn close(&self, rhs: &Self, _tol: f64) -> bool {
        self == rhs
    }
}

impl Field for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn from_exact(x: &Exact) -> Self {
        x.to_complex()
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn close(&self, rhs: &Self, tol: f64) -> bool {
        (self - rhs).norm() <= tol
    }
}

/// Either kind of scalar, as it crosses the JSON and CLI boundary.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Exact),
    Float(Complex64),
}

impl Scalar {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(x) => x.to_complex(),
            Scalar::Float(z) => *z,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ExactJson {
    re: [String; 2],
    im: [String; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarJson {
    Exact(ExactJson),
    Float([f64; 2]),
    Int(i64),
    Real(f64),
    Rational(String),
}

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let [a, b, c, d] = self.parts();
        ExactJson {
            re: [fmt_rational(&a), fmt_rational(&b)],
            im: [fmt_rational(&c), fmt_rational(&d)],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ExactJson::deserialize(d)?;
        let p = |s: &str| Exact::parse_rational(s).map_err(serde::de::Error::custom);
        Ok(Exact::from_parts([p(&j.re[0])?, p(&j.re[1])?, p(&j.im[0])?, p(&j.im[1])?]))
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(x) => x.serialize(s),
            Scalar::Float(z) => [z.re, z.im].serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match ScalarJson::deserialize(d)? {
            ScalarJson::Exact(j) => {
                let p = |s: &str| Exact::parse_rational(s).map_err(serde::de::Error::custom);
                Ok(Scalar::Exact(Exact::from_parts([
                    p(&j.re[0])?,
                    p(&j.re[1])?,
                    p(&j.im[0])?,
                    p(&j.im[1])?,
                ])))
            }
            ScalarJson::Float([re, im]) => Ok(Scalar::Float(Complex64::new(re, im))),
            ScalarJson::Int(v) => Ok(Scalar::Exact(Exact::int(v))),
            ScalarJson::Real(re) => Ok(Scalar::Float(Complex64::new(re, 0.0))),
            ScalarJson::Rational(s) => {
                let q = Exact::parse_rational(&s).map_err(serde::de::Error::custom)?;
                Ok(Scalar::Exact(Exact::from_parts([q, Default::default(), Default::default(), Default::default()])))
            }
        }
    }
}
