//! The supergeometric algebra: scalars, column spinors, row spinors and
//! multivectors under one multiplication grid.
//!
//! Row times column is a scalar, column times row is a multivector, and
//! column·column or row·row is forbidden.

use std::fmt;

use crate::bitcode::Bitcode;
use crate::error::{Result, SgaError};
use crate::matrix::Matrix;
use crate::rep::Representation;
use crate::scalar::{Exact, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Species {
    Scalar,
    Column,
    Row,
    Multivector,
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Species::Scalar => "scalar",
            Species::Column => "column spinor",
            Species::Row => "row spinor",
            Species::Multivector => "multivector",
        })
    }
}

/// One element of a single species.
///
/// A row spinor keeps the column `ψ` it came from alongside `ψᵀε`.
#[derive(Clone, Debug, PartialEq)]
pub enum Element<T> {
    Scalar(T),
    Column(Matrix<T>),
    Row { column: Matrix<T>, row: Matrix<T> },
    Multivector(Matrix<T>),
}

impl<T: Field> Element<T> {
    pub fn species(&self) -> Species {
        match self {
            Element::Scalar(_) => Species::Scalar,
            Element::Column(_) => Species::Column,
            Element::Row { .. } => Species::Row,
            Element::Multivector(_) => Species::Multivector,
        }
    }

    /// The matrix a chain of products would multiply: `1×1` for a scalar.
    pub fn as_matrix(&self) -> Matrix<T> {
        match self {
            Element::Scalar(s) => Matrix::scalar_identity(1, s),
            Element::Column(c) => c.clone(),
            Element::Row { row, .. } => row.clone(),
            Element::Multivector(m) => m.clone(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        match self {
            Element::Scalar(x) => Element::Scalar(x.mul(s)),
            Element::Column(c) => Element::Column(c.scale(s)),
            Element::Row { column, row } => Element::Row { column: column.scale(s), row: row.scale(s) },
            Element::Multivector(m) => Element::Multivector(m.scale(s)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Scalar(x) => x.is_zero(),
            Element::Column(c) => c.is_zero(),
            Element::Row { row, .. } => row.is_zero(),
            Element::Multivector(m) => m.is_zero(),
        }
    }

    /// Sum of two elements of the same species.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(match (self, rhs) {
            (Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(a.add(b)),
            (Element::Column(a), Element::Column(b)) => Element::Column(a.checked_add(b)?),
            (Element::Row { column: a, row: r }, Element::Row { column: b, row: q }) => {
                Element::Row { column: a.checked_add(b)?, row: r.checked_add(q)? }
            }
            (Element::Multivector(a), Element::Multivector(b)) => Element::Multivector(a.checked_add(b)?),
            _ => {
                return Err(SgaError::ShapeMismatch(format!(
                    "cannot add a {} to a {}; use a formal sum",
                    rhs.species(),
                    self.species()
                )))
            }
        })
    }

    pub fn close(&self, rhs: &Self, tol: f64) -> bool {
        match (self, rhs) {
            (Element::Scalar(a), Element::Scalar(b)) => a.close(b, tol),
            (Element::Column(a), Element::Column(b)) => a.close(b, tol),
            (Element::Row { row: a, .. }, Element::Row { row: b, .. }) => a.close(b, tol),
            (Element::Multivector(a), Element::Multivector(b)) => a.close(b, tol),
            _ => false,
        }
    }
}

/// A sum of elements that may mix species. Terms of equal species are
/// collected; the empty sum is zero.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FormalSum<T> {
    terms: Vec<Element<T>>,
}

impl<T: Field> FormalSum<T> {
    pub fn zero() -> Self {
        FormalSum { terms: Vec::new() }
    }

    pub fn from_element(e: Element<T>) -> Self {
        let mut s = Self::zero();
        s.push(e);
        s
    }

    pub fn push(&mut self, e: Element<T>) {
        if let Some(t) = self.terms.iter_mut().find(|t| t.species() == e.species()) {
            *t = t.add(&e).expect("same species and dimension");
        } else {
            self.terms.push(e);
        }
        self.terms.retain(|t| !t.is_zero());
    }

    pub fn terms(&self) -> &[Element<T>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if there is exactly one.
    pub fn single(&self) -> Option<&Element<T>> {
        match self.terms.as_slice() {
            [e] => Some(e),
            _ => None,
        }
    }
}

/// Multiplication context: a representation, its metric in the scalar type
/// `T`, and the policy for forbidden products.
pub struct Sga<'r, T> {
    rep: &'r Representation,
    metric: Matrix<T>,
    metric_inv: Matrix<T>,
    forbidden_as_zero: bool,
}

impl<'r, T: Field> Sga<'r, T> {
    pub fn new(rep: &'r Representation) -> Self {
        Sga {
            rep,
            metric: rep.metric().map(T::from_exact),
            metric_inv: rep.metric_inverse().map(T::from_exact),
            forbidden_as_zero: false,
        }
    }

    /// Treat forbidden products as zero in formal products instead of failing.
    pub fn forbidden_as_zero(mut self, yes: bool) -> Self {
        self.forbidden_as_zero = yes;
        self
    }

    pub fn rep(&self) -> &'r Representation {
        self.rep
    }

    fn check_column(&self, psi: &Matrix<T>) -> Result<()> {
        if psi.shape() != (self.rep.dim(), 1) {
            return Err(SgaError::ShapeMismatch(format!(
                "spinor of shape {:?}, representation dimension {}",
                psi.shape(),
                self.rep.dim()
            )));
        }
        Ok(())
    }

    pub fn column(&self, psi: Matrix<T>) -> Result<Element<T>> {
        self.check_column(&psi)?;
        Ok(Element::Column(psi))
    }

    pub fn basis_column(&self, b: &Bitcode) -> Result<Element<T>> {
        Ok(Element::Column(self.rep.basis_spinor(b)?.map(T::from_exact)))
    }

    /// `ψ· = ψᵀε`.
    pub fn row_of(&self, psi: &Matrix<T>) -> Result<Element<T>> {
        self.check_column(psi)?;
        Ok(Element::Row { column: psi.clone(), row: psi.transpose().checked_mul(&self.metric)? })
    }

    pub fn basis_row(&self, b: &Bitcode) -> Result<Element<T>> {
        self.row_of(&self.rep.basis_spinor(b)?.map(T::from_exact))
    }

    fn row_from_payload(&self, row: Matrix<T>) -> Result<Element<T>> {
        // ψ = (r ε⁻¹)ᵀ
        let column = row.checked_mul(&self.metric_inv)?.transpose();
        Ok(Element::Row { column, row })
    }

    pub fn multivector(&self, m: Matrix<T>) -> Result<Element<T>> {
        let d = self.rep.dim();
        if m.shape() != (d, d) {
            return Err(SgaError::ShapeMismatch(format!("multivector of shape {:?}, expected {d}x{d}", m.shape())));
        }
        Ok(Element::Multivector(m))
    }

    /// `ψ·χ = ψᵀεχ`.
    pub fn scalar_product(&self, psi: &Matrix<T>, chi: &Matrix<T>) -> Result<T> {
        self.check_column(psi)?;
        self.check_column(chi)?;
        let r = psi.transpose().checked_mul(&self.metric)?.checked_mul(chi)?;
        Ok(r.get(0, 0).clone())
    }

    /// `χψ· = χψᵀε`.
    pub fn outer_product(&self, chi: &Matrix<T>, psi: &Matrix<T>) -> Result<Matrix<T>> {
        self.check_column(chi)?;
        self.check_column(psi)?;
        chi.checked_mul(&psi.transpose().checked_mul(&self.metric)?)
    }

    /// `ε^a = ε^{ab} ε_b`: the column `ε ψ`.
    pub fn raise(&self, psi: &Matrix<T>) -> Result<Matrix<T>> {
        self.check_column(psi)?;
        self.metric.checked_mul(psi)
    }

    pub fn lower(&self, psi: &Matrix<T>) -> Result<Matrix<T>> {
        self.check_column(psi)?;
        self.metric_inv.checked_mul(psi)
    }

    fn forbidden(x: &Element<T>, y: &Element<T>) -> SgaError {
        SgaError::ForbiddenProduct(format!("{} times {}", x.species(), y.species()))
    }

    /// The product under the multiplication grid.
    pub fn multiply(&self, x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
        use Element::*;
        Ok(match (x, y) {
            (Scalar(s), e) | (e, Scalar(s)) => e.scale(s),
            (Row { row, .. }, Column(c)) => Scalar(row.checked_mul(c)?.get(0, 0).clone()),
            (Column(c), Row { row, .. }) => Multivector(c.checked_mul(row)?),
            (Multivector(a), Multivector(b)) => Multivector(a.checked_mul(b)?),
            (Multivector(a), Column(c)) => Column(a.checked_mul(c)?),
            (Row { row, .. }, Multivector(m)) => self.row_from_payload(row.checked_mul(m)?)?,
            (Column(_), Column(_))
            | (Row { .. }, Row { .. })
            | (Column(_), Multivector(_))
            | (Multivector(_), Row { .. }) => return Err(Self::forbidden(x, y)),
        })
    }

    /// Product of formal sums, distributing over terms. Forbidden pairs fail
    /// unless the context treats them as zero.
    pub fn multiply_sums(&self, x: &FormalSum<T>, y: &FormalSum<T>) -> Result<FormalSum<T>> {
        let mut out = FormalSum::zero();
        for a in x.terms() {
            for b in y.terms() {
                match self.multiply(a, b) {
                    Ok(e) => out.push(e),
                    Err(SgaError::ForbiddenProduct(_)) if self.forbidden_as_zero => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(out)
    }

    /// Left-to-right reduction of a product chain.
    ///
    /// Outer products are kept factored as `χ (ψ·)` so that
    /// `(χψ·)(φξ·) = χ (ψ·φ) ξ·` costs one scalar product.
    pub fn simplify_chain(&self, elements: &[Element<T>]) -> Result<Element<T>> {
        let mut iter = elements.iter();
        let first = iter.next().ok_or_else(|| SgaError::Parse("empty chain".into()))?;
        let mut acc = Reduced::from(first);
        for (pos, e) in iter.enumerate() {
            acc = self.step(acc, e).map_err(|err| match err {
                SgaError::ForbiddenProduct(msg) => SgaError::ForbiddenProduct(format!("at position {}: {msg}", pos + 2)),
                other => other,
            })?;
        }
        self.finish(acc)
    }

    /// Like [`Self::simplify_chain`], but a forbidden adjacency yields the zero
    /// formal element when the context treats forbidden products as zero.
    pub fn simplify_chain_formal(&self, elements: &[Element<T>]) -> Result<FormalSum<T>> {
        match self.simplify_chain(elements) {
            Ok(e) => Ok(FormalSum::from_element(e)),
            Err(SgaError::ForbiddenProduct(_)) if self.forbidden_as_zero => Ok(FormalSum::zero()),
            Err(e) => Err(e),
        }
    }

    fn step(&self, acc: Reduced<T>, e: &Element<T>) -> Result<Reduced<T>> {
        use Reduced as R;
        let rowdot = |row: &Matrix<T>, col: &Matrix<T>| -> Result<T> { Ok(row.checked_mul(col)?.get(0, 0).clone()) };
        Ok(match (acc, e) {
            (acc, Element::Scalar(s)) => acc.scale(s),
            (R::Scalar(s), e) => R::from(e).scale(&s),
            (R::Column(c), Element::Row { row, .. }) => R::Outer(c, row.clone()),
            (R::Row(r), Element::Column(c)) => R::Scalar(rowdot(&r, c)?),
            (R::Row(r), Element::Multivector(m)) => R::Row(r.checked_mul(m)?),
            (R::Outer(c, r), Element::Column(x)) => R::Column(c.scale(&rowdot(&r, x)?)),
            (R::Outer(c, r), Element::Multivector(m)) => R::Outer(c, r.checked_mul(m)?),
            (R::Mv(a), Element::Multivector(b)) => R::Mv(a.checked_mul(b)?),
            (R::Mv(a), Element::Column(c)) => R::Column(a.checked_mul(c)?),
            (acc, e) => {
                return Err(SgaError::ForbiddenProduct(format!("{} times {}", acc.species(), e.species())))
            }
        })
    }

    fn finish(&self, acc: Reduced<T>) -> Result<Element<T>> {
        Ok(match acc {
            Reduced::Scalar(s) => Element::Scalar(s),
            Reduced::Column(c) => Element::Column(c),
            Reduced::Row(r) => self.row_from_payload(r)?,
            Reduced::Outer(c, r) => Element::Multivector(c.checked_mul(&r)?),
            Reduced::Mv(m) => Element::Multivector(m),
        })
    }

    /// Direct evaluation by multiplying every payload matrix in order.
    pub fn evaluate_directly(&self, elements: &[Element<T>]) -> Result<Matrix<T>> {
        let mut scalar = T::one();
        let mut acc: Option<Matrix<T>> = None;
        for e in elements {
            match e {
                Element::Scalar(s) => scalar = scalar.mul(s),
                other => {
                    let m = other.as_matrix();
                    let next = match acc {
                        None => m,
                        Some(a) => a.checked_mul(&m)?,
                    };
                    // a row times a column closes into a plain number
                    if next.shape() == (1, 1) {
                        scalar = scalar.mul(next.get(0, 0));
                        acc = None;
                    } else {
                        acc = Some(next);
                    }
                }
            }
        }
        Ok(match acc {
            None => Matrix::scalar_identity(1, &scalar),
            Some(a) => a.scale(&scalar),
        })
    }
}

enum Reduced<T> {
    Scalar(T),
    Column(Matrix<T>),
    Row(Matrix<T>),
    Outer(Matrix<T>, Matrix<T>),
    Mv(Matrix<T>),
}

impl<T: Field> Reduced<T> {
    fn from(e: &Element<T>) -> Self {
        match e {
            Element::Scalar(s) => Reduced::Scalar(s.clone()),
            Element::Column(c) => Reduced::Column(c.clone()),
            Element::Row { row, .. } => Reduced::Row(row.clone()),
            Element::Multivector(m) => Reduced::Mv(m.clone()),
        }
    }

    fn scale(self, s: &T) -> Self {
        match self {
            Reduced::Scalar(x) => Reduced::Scalar(x.mul(s)),
            Reduced::Column(c) => Reduced::Column(c.scale(s)),
            Reduced::Row(r) => Reduced::Row(r.scale(s)),
            Reduced::Outer(c, r) => Reduced::Outer(c.scale(s), r),
            Reduced::Mv(m) => Reduced::Mv(m.scale(s)),
        }
    }

    fn species(&self) -> Species {
        match self {
            Reduced::Scalar(_) => Species::Scalar,
            Reduced::Column(_) => Species::Column,
            Reduced::Row(_) => Species::Row,
            Reduced::Outer(..) | Reduced::Mv(_) => Species::Multivector,
        }
    }
}

/// Exact-mode convenience: `Tr(χψ·) = ψ·χ` computed as a trace.
pub fn trace_outer<T: Field>(sga: &Sga<'_, T>, chi: &Matrix<T>, psi: &Matrix<T>) -> Result<T> {
    Ok(sga.outer_product(chi, psi)?.trace())
}

/// An exact context with the default policy.
pub fn exact(rep: &Representation) -> Sga<'_, Exact> {
    Sga::new(rep)
}
