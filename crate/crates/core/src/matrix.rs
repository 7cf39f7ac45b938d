//! Dense matrices over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SgaError};
use crate::scalar::{Exact, Field, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<Exact>;
pub type FloatMatrix = Matrix<Complex64>;

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, s: &T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(SgaError::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Column vector with a single 1 at `i`.
    pub fn unit_column(n: usize, i: usize) -> Self {
        let mut m = Self::zeros(n, 1);
        m.data[i] = T::one();
        m
    }

    pub fn column(entries: Vec<T>) -> Self {
        Matrix { rows: entries.len(), cols: 1, data: entries }
    }

    pub fn row(entries: Vec<T>) -> Self {
        Matrix { rows: 1, cols: entries.len(), data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| if x.is_zero() { T::zero() } else { x.mul(s) })
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(SgaError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o = o.add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.add(b))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.sub(b))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(SgaError::ShapeMismatch(format!("{:?} vs {:?}", self.shape(), rhs.shape())));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Kronecker product, `self` acting on the more significant index.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// The 2×2 block matrix `[[a, b], [c, d]]` of equally sized square blocks.
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.rows;
        let mut out = Self::zeros(2 * n, 2 * n);
        for (blk, (ro, co)) in [a, b, c, d].into_iter().zip([(0, 0), (0, n), (n, 0), (n, n)]) {
            for i in 0..n {
                for j in 0..n {
                    let v = blk.get(i, j);
                    if !v.is_zero() {
                        out.set(ro + i, co + j, v.clone());
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == T::one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `Some(s)` when `self = s·1`.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<T> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let s = self.get(0, 0).clone();
        let ok = (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    *x == s
                } else {
                    x.is_zero()
                }
            })
        });
        ok.then_some(s)
    }

    /// Entrywise closeness: exact equality for exact scalars.
    pub fn close(&self, rhs: &Self, tol: f64) -> bool {
        self.shape() == rhs.shape() && self.data.iter().zip(&rhs.data).all(|(a, b)| a.close(b, tol))
    }

    pub fn to_float(&self) -> FloatMatrix {
        self.map(|x| x.to_complex())
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(SgaError::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(SgaError::NotInvertible)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).inv().ok_or(SgaError::NotInvertible)?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        Ok(inv)
    }

    /// Determinant by elimination.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(SgaError::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(T::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = det.neg();
            }
            let p = a.get(col, col).clone();
            det = det.mul(&p);
            let p_inv = p.inv().ok_or(SgaError::NotInvertible)?;
            for r in col + 1..n {
                let f = a.get(r, col).mul(&p_inv);
                if !f.is_zero() {
                    a.axpy_row(r, col, &f);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &T) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].mul(s);
        }
    }

    // row r -= f * row src
    fn axpy_row(&mut self, r: usize, src: usize, f: &T) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = f.mul(s);
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].sub(&v);
        }
    }

    /// Largest entry modulus, used for float diagnostics.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.to_complex().norm()).fold(0.0, f64::max)
    }
}

impl<T: Field> Mul<&Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl<T: Field> Add<&Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix shape mismatch")
    }
}

impl<T: Field> Sub<&Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix shape mismatch")
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| x.neg())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Field + Serialize> Serialize for Matrix<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix<Exact> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Exact>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// A matrix read from JSON, exact when every entry is exact.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Exact(ExactMatrix),
    Float(FloatMatrix),
}

impl AnyMatrix {
    pub fn from_json(s: &str) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = serde_json::from_str(s).map_err(|e| SgaError::Parse(e.to_string()))?;
        let all_exact = rows.iter().flatten().all(|x| matches!(x, Scalar::Exact(_)));
        if all_exact {
            let rows = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| match x {
                            Scalar::Exact(e) => e,
                            Scalar::Float(_) => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            Ok(AnyMatrix::Exact(Matrix::from_rows(rows)?))
        } else {
            let rows = rows.into_iter().map(|r| r.iter().map(Scalar::to_complex).collect()).collect();
            Ok(AnyMatrix::Float(Matrix::from_rows(rows)?))
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            AnyMatrix::Exact(m) => m.shape(),
            AnyMatrix::Float(m) => m.shape(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(rows: &[&[i64]]) -> ExactMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Exact::int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = ex(&[&[1, 2], &[3, 4]]);
        let b = ex(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, ex(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), ex(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.trace(), Exact::int(5));
    }

    #[test]
    fn kron_puts_left_factor_on_blocks() {
        let z = ex(&[&[1, 0], &[0, -1]]);
        let i2 = Matrix::identity(2);
        let k = z.kron(&i2);
        assert_eq!(k, Matrix::diag(vec![Exact::int(1), Exact::int(1), Exact::int(-1), Exact::int(-1)]));
    }

    #[test]
    fn exact_inverse() {
        let a = ex(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert_eq!(ex(&[&[1, 1], &[1, 1]]).inverse(), Err(SgaError::NotInvertible));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let mut a = ex(&[&[1, 0], &[0, -1]]);
        a.set(0, 1, &Exact::ratio(1, 3) + &Exact::sqrt2().mul_i());
        let s = serde_json::to_string(&a).unwrap();
        match AnyMatrix::from_json(&s).unwrap() {
            AnyMatrix::Exact(b) => assert_eq!(a, b),
            AnyMatrix::Float(_) => panic!("expected exact"),
        }
    }

    #[test]
    fn float_json_is_accepted() {
        let m = AnyMatrix::from_json("[[[1.0,0.0],[0.5,-1.0]],[[0,0],[1,0]]]").unwrap();
        assert!(matches!(m, AnyMatrix::Float(_)));
        assert_eq!(m.shape(), (2, 2));
    }

    #[test]
    fn integers_and_ratios_stay_exact() {
        match AnyMatrix::from_json(r#"[[1, "-1/2"], [0, 3]]"#).unwrap() {
            AnyMatrix::Exact(m) => assert_eq!(m.get(0, 1), &Exact::ratio(-1, 2)),
            AnyMatrix::Float(_) => panic!("expected exact"),
        }
        assert!(matches!(AnyMatrix::from_json("[[1, 0.5]]").unwrap(), AnyMatrix::Float(_)));
    }
}
