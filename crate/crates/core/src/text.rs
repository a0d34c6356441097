//! Parsing of the textual weight formats.
//!
//! * barred weight `(a1,a2,a3|a4,a5,a6)`, or `(521|430)` when every entry is a
//!   single digit;
//! * plain weight or character `(c1,c2,c3,c4,c5,c6)` / `(543210)`;
//! * Dynkin labels `[m1,m2,m3,m4,m5]`.
//!
//! Whitespace around entries is ignored. Error positions are byte offsets into
//! the input.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::weight::{Dynkin, InfChar, PDomWeight, Weight6, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected '{0}'")]
    Expected(char),
    #[error("invalid integer '{0}'")]
    BadInteger(String),
    #[error("expected {expected} entries, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("unexpected trailing input")]
    Trailing,
    #[error("{0}")]
    Weight(WeightError),
}

fn err(position: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { position, kind }
}

/// Entries of one group. A group without commas is read digit by digit.
fn parse_group(text: &str, offset: usize) -> Result<Vec<i64>, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    if !trimmed.contains(',') && trimmed.chars().all(|c| c.is_ascii_digit()) {
        return Ok(trimmed.bytes().map(|b| i64::from(b - b'0')).collect());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let entry = piece.trim();
        let value = entry
            .parse::<i64>()
            .map_err(|_| err(pos + lead, ParseErrorKind::BadInteger(entry.into())))?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Splits `text` as `open … close`, returning the inside and its offset.
fn delimited(text: &str, open: char, close: char) -> Result<(&str, usize), ParseError> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    if !t.starts_with(open) {
        return Err(err(lead, ParseErrorKind::Expected(open)));
    }
    match t.find(close) {
        Some(end) if end == t.len() - 1 => Ok((&t[1..end], lead + 1)),
        Some(end) => Err(err(lead + end + 1, ParseErrorKind::Trailing)),
        None => Err(err(lead + t.len(), ParseErrorKind::Expected(close))),
    }
}

fn check_arity(values: &[i64], expected: usize, position: usize) -> Result<(), ParseError> {
    if values.len() == expected {
        Ok(())
    } else {
        Err(err(
            position,
            ParseErrorKind::Arity {
                expected,
                found: values.len(),
            },
        ))
    }
}

/// Parses `(a1,a2,a3|a4,a5,a6)` or its compact form without checking
/// p-dominance.
pub fn parse_barred(text: &str) -> Result<Weight6, ParseError> {
    let (inner, offset) = delimited(text, '(', ')')?;
    let bar = inner
        .find('|')
        .ok_or_else(|| err(offset + inner.len(), ParseErrorKind::Expected('|')))?;
    let first = parse_group(&inner[..bar], offset)?;
    check_arity(&first, 3, offset)?;
    let second = parse_group(&inner[bar + 1..], offset + bar + 1)?;
    check_arity(&second, 3, offset + bar + 1)?;
    Ok(Weight6([first[0], first[1], first[2], second[0], second[1], second[2]]))
}

/// Parses a six-entry weight written with or without the bar.
pub fn parse_weight6(text: &str) -> Result<Weight6, ParseError> {
    if text.contains('|') {
        return parse_barred(text);
    }
    let (inner, offset) = delimited(text, '(', ')')?;
    let values = parse_group(inner, offset)?;
    check_arity(&values, 6, offset)?;
    Ok(Weight6(core::array::from_fn(|i| values[i])))
}

pub fn parse_dynkin(text: &str) -> Result<Dynkin, ParseError> {
    let (inner, offset) = delimited(text, '[', ']')?;
    let values = parse_group(inner, offset)?;
    check_arity(&values, 5, offset)?;
    Ok(Dynkin(core::array::from_fn(|i| values[i])))
}

/// Parses a `+`-separated list of barred weights, as printed in align blocks.
/// Entries are not required to be p-dominant.
pub fn parse_sum(text: &str) -> Result<Vec<Weight6>, ParseError> {
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in text.split('+') {
        out.push(parse_barred(piece).map_err(|e| ParseError {
            position: e.position + pos,
            kind: e.kind,
        })?);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Weight6 {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_weight6(s)
    }
}

impl FromStr for PDomWeight {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let w = parse_barred(s)?;
        PDomWeight::from_weight(w).map_err(|e| err(0, ParseErrorKind::Weight(e)))
    }
}

impl FromStr for InfChar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let w = parse_weight6(s)?;
        InfChar::new(w.0).map_err(|e| err(0, ParseErrorKind::Weight(e)))
    }
}

impl FromStr for Dynkin {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_dynkin(s)
    }
}

/// Writes weights joined by `+` in compact form, e.g. `(420|210)+(321|210)`.
pub fn write_sum<'a, I>(out: &mut impl fmt::Write, weights: I) -> fmt::Result
where
    I: IntoIterator<Item = &'a Weight6>,
{
    for (i, w) in weights.into_iter().enumerate() {
        if i > 0 {
            out.write_char('+')?;
        }
        crate::weight::write_barred_to(out, w, true)?;
    }
    Ok(())
}

pub fn sum_string<'a, I>(weights: I) -> String
where
    I: IntoIterator<Item = &'a Weight6>,
{
    let mut s = String::new();
    write_sum(&mut s, weights).expect("writing to a String cannot fail");
    s
}
