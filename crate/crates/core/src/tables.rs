//! Sign tables computed from built representations, with mod-8 checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitcode::{Bit, Bitcode};
use crate::error::{Result, SgaError};
use crate::matrix::ExactMatrix;
use crate::rep::{MetricChoice, RepConfig, Representation, Signature, DEFAULT_MAX_DIM};
use crate::scalar::Sign;
use crate::symmetry::{alternative_conjugation, symmetry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    /// Sign of `ε²`, which is also the symmetry of `ε`, keyed by `N`.
    MetricSquare,
    /// The sign `s` in `γ_aᵀ ε = s ε γ_a`, keyed by `N`.
    Commutation,
    /// Symmetry of `C = ε Γᵀ`, keyed by `K − M`.
    Conjugation,
}

impl TableKind {
    fn title(self) -> &'static str {
        match self {
            TableKind::MetricSquare => "Spinor metric square (= symmetry)",
            TableKind::Commutation => "Vector commutation sign",
            TableKind::Conjugation => "Conjugation operator symmetry",
        }
    }

    fn key_name(self) -> &'static str {
        match self {
            TableKind::Conjugation => "K-M",
            _ => "N",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignRow {
    pub key: i64,
    pub k: usize,
    pub m: usize,
    pub standard: Sign,
    pub alternative: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignTable {
    pub kind: TableKind,
    pub rows: Vec<SignRow>,
}

fn build(sig: Signature, metric: MetricChoice, max_dim: usize) -> Result<Representation> {
    Representation::build(RepConfig::new(sig).with_metric(metric).with_max_dim(max_dim))
}

/// `ε² = ±1`, checked against the transpose symmetry of `ε`.
fn square_sign(eps: &ExactMatrix) -> Result<Sign> {
    let sq = (eps * eps)
        .as_scalar_multiple_of_identity()
        .and_then(|s| s.rational_sign())
        .ok_or_else(|| SgaError::NotInAlgebra("metric square is not ±1".into()))?;
    if symmetry(eps) != Some(sq) {
        return Err(SgaError::NotInAlgebra("metric symmetry disagrees with its square".into()));
    }
    Ok(sq)
}

fn keys(range: std::ops::RangeInclusive<usize>) -> Result<Vec<usize>> {
    if *range.start() == 0 {
        return Err(SgaError::InvalidSignature("N must be at least 1".into()));
    }
    Ok(range.collect())
}

pub fn metric_symmetry_table(range: std::ops::RangeInclusive<usize>, max_dim: usize) -> Result<SignTable> {
    let rows = keys(range)?
        .into_par_iter()
        .map(|n| {
            let rep = build(Signature::euclidean(n)?, MetricChoice::Standard, max_dim)?;
            Ok(SignRow {
                key: n as i64,
                k: n,
                m: 0,
                standard: square_sign(rep.epsilon())?,
                alternative: square_sign(rep.epsilon_alt())?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SignTable { kind: TableKind::MetricSquare, rows })
}

pub fn gamma_commutation_table(range: std::ops::RangeInclusive<usize>, max_dim: usize) -> Result<SignTable> {
    let rows = keys(range)?
        .into_par_iter()
        .map(|n| {
            let std = build(Signature::euclidean(n)?, MetricChoice::Standard, max_dim)?;
            let alt = build(Signature::euclidean(n)?, MetricChoice::Alternative, max_dim)?;
            Ok(SignRow {
                key: n as i64,
                k: n,
                m: 0,
                standard: std.commutation_sign(),
                alternative: alt.commutation_sign(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(SignTable { kind: TableKind::Commutation, rows })
}

/// The smallest signature with the given `K − M`.
pub fn signature_for_difference(d: i64) -> (usize, usize) {
    match d {
        0 => (1, 1),
        d if d > 0 => (d as usize, 0),
        d => (0, d.unsigned_abs() as usize),
    }
}

/// Symmetry of `C` and of `C_alt` for one signature.
pub fn conjugation_symmetry(k: usize, m: usize, max_dim: usize) -> Result<(Sign, Sign)> {
    let rep = build(Signature::new(k, m)?, MetricChoice::Standard, max_dim)?;
    let c = symmetry(rep.conjugation()).ok_or_else(|| SgaError::NotInAlgebra("C is not (anti)symmetric".into()))?;
    let c_alt = symmetry(&alternative_conjugation(&rep))
        .ok_or_else(|| SgaError::NotInAlgebra("C_alt is not (anti)symmetric".into()))?;
    Ok((c, c_alt))
}

pub fn conjugation_symmetry_table(range: std::ops::RangeInclusive<i64>, max_dim: usize) -> Result<SignTable> {
    let rows = range
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| {
            let (k, m) = signature_for_difference(d);
            let (standard, alternative) = conjugation_symmetry(k, m, max_dim)?;
            Ok(SignRow { key: d, k, m, standard, alternative })
        })
        .collect::<Result<_>>()?;
    Ok(SignTable { kind: TableKind::Conjugation, rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodViolation {
    pub key: i64,
    pub key_plus_8: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub kind: TableKind,
    pub comparisons: usize,
    pub violations: Vec<PeriodViolation>,
}

impl PeriodReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares every row with the row eight further on.
pub fn period8_check(table: &SignTable) -> Result<PeriodReport> {
    let by_key: BTreeMap<i64, &SignRow> = table.rows.iter().map(|r| (r.key, r)).collect();
    let (Some(lo), Some(hi)) = (by_key.keys().next(), by_key.keys().last()) else {
        return Err(SgaError::InvalidConfig("empty table".into()));
    };
    if hi - lo < 8 {
        return Err(SgaError::InvalidConfig(format!(
            "a period-8 check needs at least 9 consecutive rows, got keys {lo}..={hi}"
        )));
    }
    let mut comparisons = 0;
    let mut violations = Vec::new();
    for (key, row) in &by_key {
        let Some(other) = by_key.get(&(key + 8)) else { continue };
        comparisons += 1;
        if (row.standard, row.alternative) != (other.standard, other.alternative) {
            violations.push(PeriodViolation { key: *key, key_plus_8: key + 8 });
        }
    }
    Ok(PeriodReport { kind: table.kind, comparisons, violations })
}

/// Predicted sign `σ(a)` in `ε ε_a = σ(a) ε_ā`: `Π_{a_k = ↑} (−1)^{k−1}` for the
/// standard recursion and `Π_{a_k = ↑} (−1)^k` for the alternative one.
pub fn predicted_flip_sign(a: &Bitcode, alternative: bool) -> Sign {
    let mut s = Sign::Plus;
    for (i, bit) in a.bits().iter().enumerate() {
        let k = i as i64 + 1;
        if *bit == Bit::Up {
            s = s * Sign::pow_neg_one(if alternative { k } else { k - 1 });
        }
    }
    s
}

/// Sign with which `eps` sends each basis spinor to its bit flip; `None`
/// when the image is not `±ε_ā`.
pub fn flip_signs(eps: &ExactMatrix, bits: usize) -> Vec<(Bitcode, Option<Sign>)> {
    Bitcode::all(bits)
        .map(|a| {
            let flipped = a.flip().index();
            let ok = (0..eps.rows()).all(|r| r == flipped || eps.get(r, a.index()).is_zero());
            let s = if ok { eps.get(flipped, a.index()).rational_sign() } else { None };
            (a, s)
        })
        .collect()
}

impl SignTable {
    pub fn get(&self, key: i64) -> Option<&SignRow> {
        self.rows.iter().find(|r| r.key == key)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{},K,M,standard,alternative\n", self.kind.key_name());
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{}", r.key, r.k, r.m, r.standard.symbol(), r.alternative.symbol());
        }
        out
    }

    /// Columns are residues mod 8; each cell lists the computed signs for
    /// every row in that class, so a period-8 table shows one sign per cell.
    pub fn to_markdown(&self) -> String {
        let name = self.kind.key_name();
        let mut out = format!("### {}\n\n", self.kind.title());
        let residues: Vec<i64> = (1..=8).collect();
        let _ = write!(out, "| {name} mod 8 |");
        for r in &residues {
            let _ = write!(out, " {} |", r % 8);
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(residues.len()));
        out.push('\n');
        for (label, pick) in [("standard", 0usize), ("alternative", 1)] {
            let _ = write!(out, "| {label} |");
            for res in &residues {
                let mut signs: Vec<char> = self
                    .rows
                    .iter()
                    .filter(|row| row.key.rem_euclid(8) == res % 8)
                    .map(|row| if pick == 0 { row.standard.symbol() } else { row.alternative.symbol() })
                    .collect();
                signs.dedup();
                let cell: String = if signs.is_empty() { "·".into() } else { signs.into_iter().collect() };
                let _ = write!(out, " {cell} |");
            }
            out.push('\n');
        }
        out.push_str(&format!("\n| {name} | K | M | standard | alternative |\n|---|---|---|---|---|\n"));
        for r in &self.rows {
            let _ = writeln!(out, "| {} | {} | {} | {} | {} |", r.key, r.k, r.m, r.standard.symbol(), r.alternative.symbol());
        }
        out
    }
}

/// All three tables over the default ranges: `N = 1..=max_n` and
/// `K − M = −4..=12`.
pub fn default_tables(max_n: usize) -> Result<[SignTable; 3]> {
    Ok([
        metric_symmetry_table(1..=max_n, DEFAULT_MAX_DIM)?,
        gamma_commutation_table(1..=max_n, DEFAULT_MAX_DIM)?,
        conjugation_symmetry_table(-4..=12, DEFAULT_MAX_DIM)?,
    ])
}
