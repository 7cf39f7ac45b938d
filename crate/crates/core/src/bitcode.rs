//! Bitcodes: the up/down labels of chiral basis spinors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SgaError};
use crate::scalar::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bit {
    Up,
    Down,
}

impl Bit {
    pub fn flip(self) -> Bit {
        match self {
            Bit::Up => Bit::Down,
            Bit::Down => Bit::Up,
        }
    }

    pub fn arrow(self) -> char {
        match self {
            Bit::Up => '↑',
            Bit::Down => '↓',
        }
    }
}

/// Bit `k` (1-based) labels the k-th constructed plane. The basis position of
/// a bitcode is `Σ [bit k down]·2^(k-1)`: the newest bit picks the block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitcode(Vec<Bit>);

/// A half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Bitcode {
    pub fn new(bits: Vec<Bit>) -> Self {
        Bitcode(bits)
    }

    pub fn all_up(n: usize) -> Self {
        Bitcode(vec![Bit::Up; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[Bit] {
        &self.0
    }

    /// Bit of plane `k` (1-based).
    pub fn bit(&self, k: usize) -> Result<Bit> {
        if k == 0 || k > self.0.len() {
            return Err(SgaError::IndexOutOfRange(format!(
                "plane {k} for a bitcode of length {}",
                self.0.len()
            )));
        }
        Ok(self.0[k - 1])
    }

    pub fn flip(&self) -> Self {
        Bitcode(self.0.iter().map(|b| b.flip()).collect())
    }

    /// Product over bits of +1 (up) and −1 (down).
    pub fn chirality(&self) -> Sign {
        Sign::from_parity(self.0.iter().filter(|b| **b == Bit::Down).count() % 2 == 1)
    }

    /// ±½ for plane `k`.
    pub fn k_charge(&self, k: usize) -> Result<HalfInt> {
        Ok(match self.bit(k)? {
            Bit::Up => HalfInt(1),
            Bit::Down => HalfInt(-1),
        })
    }

    pub fn index(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, b)| **b == Bit::Down)
            .map(|(k, _)| 1usize << k)
            .sum()
    }

    pub fn from_index(n: usize, idx: usize) -> Self {
        Bitcode((0..n).map(|k| if idx >> k & 1 == 1 { Bit::Down } else { Bit::Up }).collect())
    }

    /// All `2^n` bitcodes in basis order.
    pub fn all(n: usize) -> impl Iterator<Item = Bitcode> {
        (0..1usize << n).map(move |i| Bitcode::from_index(n, i))
    }

    /// ASCII form with `u`/`d`.
    pub fn ascii(&self) -> String {
        self.0.iter().map(|b| if *b == Bit::Up { 'u' } else { 'd' }).collect()
    }
}

impl fmt::Display for Bitcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", b.arrow())?;
        }
        Ok(())
    }
}

impl FromStr for Bitcode {
    type Err = SgaError;

    /// Accepts arrows `↑↓` or ASCII `u`/`d`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '↑' | 'u' | 'U' => Ok(Bit::Up),
                '↓' | 'd' | 'D' => Ok(Bit::Down),
                other => Err(SgaError::Parse(format!("bad bit {other:?} in bitcode {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Bitcode)
    }
}

impl Serialize for Bitcode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.ascii())
    }
}

impl<'de> Deserialize<'de> for Bitcode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
