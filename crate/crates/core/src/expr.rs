//! Text form of product chains.
//!
//! Factors are separated by whitespace or `*`:
//!
//! - `e[ud]` basis column spinor (`u`/`d` or arrows), `e[ud]'` its row spinor
//! - `g[k]`, `g[kbar]` chiral vectors of plane `k`; `g[k+]`, `g[k-]` the
//!   orthonormal pair
//! - `o[a]` physical orthonormal axis `a`
//! - `kappa`, `I` chiral operator and pseudoscalar
//! - scalars: integers, `p/q`, `i`, `sqrt2`; a leading `-` negates a factor

use crate::bitcode::Bitcode;
use crate::error::{Result, SgaError};
use crate::rep::{GammaIndex, Representation};
use crate::scalar::Exact;
use crate::sga::{Element, Sga};

fn err(msg: impl Into<String>) -> SgaError {
    SgaError::Parse(msg.into())
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn skip_separators(&mut self) {
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_whitespace() || c == '*' {
                self.chars.next();
            } else {
                break;
            }
        }
    }

    fn word(&mut self) -> &'a str {
        let start = self.chars.peek().map_or(self.src.len(), |&(i, _)| i);
        let mut end = start;
        while let Some(&(i, c)) = self.chars.peek() {
            if c.is_alphanumeric() || c == '/' || c == '√' {
                end = i + c.len_utf8();
                self.chars.next();
            } else {
                break;
            }
        }
        &self.src[start..end]
    }

    fn bracket(&mut self) -> Result<&'a str> {
        match self.chars.next() {
            Some((_, '[')) => {}
            _ => return Err(err("expected '['")),
        }
        let start = self.chars.peek().map_or(self.src.len(), |&(i, _)| i);
        for (i, c) in self.chars.by_ref() {
            if c == ']' {
                return Ok(&self.src[start..i]);
            }
        }
        Err(err("unclosed '['"))
    }

    fn row_mark(&mut self) -> bool {
        match self.chars.peek() {
            Some(&(_, '\'' | '·' | '.')) => {
                self.chars.next();
                true
            }
            _ => false,
        }
    }
}

fn plane(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| err(format!("bad plane or axis {s:?}")))
}

fn gamma_index(spec: &str) -> Result<GammaIndex> {
    let s = spec.trim();
    if let Some(k) = s.strip_suffix("bar").or_else(|| s.strip_suffix('\u{304}')) {
        return Ok(GammaIndex::Down(plane(k)?));
    }
    if let Some(k) = s.strip_suffix('+') {
        return Ok(GammaIndex::Plus(plane(k)?));
    }
    if let Some(k) = s.strip_suffix('-') {
        return Ok(GammaIndex::Minus(plane(k)?));
    }
    Ok(GammaIndex::Up(plane(s)?))
}

fn scalar_word(w: &str) -> Result<Exact> {
    match w {
        "i" => Ok(Exact::i()),
        "sqrt2" | "√2" => Ok(Exact::sqrt2()),
        _ => Ok(Exact::from_parts([Exact::parse_rational(w)?, Default::default(), Default::default(), Default::default()])),
    }
}

/// Parses a chain against a representation.
pub fn parse_chain(sga: &Sga<'_, Exact>, src: &str) -> Result<Vec<Element<Exact>>> {
    let rep: &Representation = sga.rep();
    let mut lx = Lexer { chars: src.char_indices().peekable(), src };
    let mut out = Vec::new();
    loop {
        lx.skip_separators();
        let Some(&(_, c)) = lx.chars.peek() else { break };
        let mut negate = false;
        if c == '-' || c == '−' {
            lx.chars.next();
            negate = true;
        }
        let w = lx.word();
        let e = match w {
            "e" => {
                let b: Bitcode = lx.bracket()?.parse()?;
                let col = rep.basis_spinor(&b)?;
                if lx.row_mark() {
                    sga.row_of(&col)?
                } else {
                    sga.column(col)?
                }
            }
            "g" => sga.multivector(rep.gamma(gamma_index(lx.bracket()?)?)?.clone())?,
            "o" => sga.multivector(rep.gamma(GammaIndex::Axis(plane(lx.bracket()?)?))?.clone())?,
            "kappa" | "κ" => sga.multivector(rep.chiral_operator().clone())?,
            "I" => sga.multivector(rep.pseudoscalar().clone())?,
            "" => return Err(err(format!("unexpected {:?} in {src:?}", lx.chars.peek().map(|p| p.1).unwrap_or(' ')))),
            w => Element::Scalar(scalar_word(w).map_err(|_| err(format!("unknown factor {w:?}")))?),
        };
        out.push(if negate { e.scale(&-Exact::one()) } else { e });
    }
    if out.is_empty() {
        return Err(err("empty chain"));
    }
    Ok(out)
}
