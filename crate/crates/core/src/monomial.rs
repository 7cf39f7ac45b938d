//! Matrices with at most one nonzero entry per row and per column.
//!
//! Every basis blade in the chiral representation has this shape, so blade
//! products and traces run in O(dim) instead of O(dim³).

use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<T> {
    // row i holds `(column, value)` of its single nonzero entry
    rows: Vec<Option<(usize, T)>>,
}

impl<T: Field> Monomial<T> {
    pub fn identity(n: usize) -> Self {
        Monomial { rows: (0..n).map(|i| Some((i, T::one()))).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Monomial { rows: vec![None; n] }
    }

    pub fn diag(entries: Vec<T>) -> Self {
        Monomial {
            rows: entries.into_iter().enumerate().map(|(i, v)| (!v.is_zero()).then_some((i, v))).collect(),
        }
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Monomial<U> {
        Monomial {
            rows: self
                .rows
                .iter()
                .map(|e| e.as_ref().and_then(|(j, v)| {
                    let w = f(v);
                    (!w.is_zero()).then_some((*j, w))
                }))
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![None; self.rows.len()];
        for (i, e) in self.rows.iter().enumerate() {
            if let Some((j, v)) = e {
                rows[*j] = Some((i, v.clone()));
            }
        }
        Monomial { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `None` when some row or column holds more than one nonzero entry.
    pub fn from_matrix(m: &Matrix<T>) -> Option<Self> {
        let n = m.rows();
        let mut col_used = vec![false; m.cols()];
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut entry = None;
            for j in 0..m.cols() {
                let v = m.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if entry.is_some() || col_used[j] {
                    return None;
                }
                col_used[j] = true;
                entry = Some((j, v.clone()));
            }
            rows.push(entry);
        }
        Some(Monomial { rows })
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        let n = self.rows.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in self.rows.iter().enumerate() {
            if let Some((j, v)) = e {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> Option<&(usize, T)> {
        self.rows[i].as_ref()
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        match &self.rows[i] {
            Some((c, v)) if *c == j => v.clone(),
            _ => T::zero(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|e| {
                let (k, a) = e.as_ref()?;
                let (j, b) = rhs.rows[*k].as_ref()?;
                Some((*j, a.mul(b)))
            })
            .collect();
        Monomial { rows }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim());
        }
        Monomial { rows: self.rows.iter().map(|e| e.as_ref().map(|(j, v)| (*j, v.mul(s)))).collect() }
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for (i, e) in self.rows.iter().enumerate() {
            if let Some((j, v)) = e {
                if *j == i {
                    acc = acc.add(v);
                }
            }
        }
        acc
    }

    /// `tr(self · m)` for a dense `m`.
    pub fn trace_with(&self, m: &Matrix<T>) -> T {
        let mut acc = T::zero();
        for (i, e) in self.rows.iter().enumerate() {
            if let Some((k, v)) = e {
                let w = m.get(*k, i);
                if !w.is_zero() {
                    acc = acc.add(&v.mul(w));
                }
            }
        }
        acc
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows.iter().enumerate().filter_map(|(i, e)| e.as_ref().map(|(j, v)| (i, *j, v)))
    }
}
