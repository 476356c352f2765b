use std::fmt::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Integer, LaurentPoly2, Term};

/// Output style for [`LaurentPoly2::format`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Style {
    /// `2 a^-1 z^3 - a + 1`
    Plain,
    /// `2 a^{-1} z^{3} - a + 1`
    Latex,
    /// `[{"a_exp":-1,"z_exp":3,"coeff":"2"}, ...]`
    Json,
}

/// Malformed polynomial text. `position` is a byte offset into the input.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    a_exp: i64,
    z_exp: i64,
    coeff: String,
}

pub(super) fn json_value(p: &LaurentPoly2) -> serde_json::Value {
    let terms: Vec<JsonTerm> =
        p.terms.iter().map(|t| JsonTerm { a_exp: t.a, z_exp: t.z, coeff: t.coeff.to_string() }).collect();
    serde_json::to_value(terms).expect("term list serializes")
}

pub(super) fn format(p: &LaurentPoly2, style: Style) -> String {
    if style == Style::Json {
        return json_value(p).to_string();
    }
    if p.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in p.terms.iter().enumerate() {
        let negative = t.coeff.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = t.coeff.abs();
        let mut parts: Vec<String> = Vec::with_capacity(3);
        if !mag.is_one() || (t.a == 0 && t.z == 0) {
            parts.push(mag.to_string());
        }
        for (var, e) in [('a', t.a), ('z', t.z)] {
            match e {
                0 => {}
                1 => parts.push(var.to_string()),
                _ if style == Style::Latex => parts.push(format!("{var}^{{{e}}}")),
                _ => parts.push(format!("{var}^{e}")),
            }
        }
        let _ = write!(out, "{}", parts.join(" "));
    }
    out
}

pub(super) fn parse(text: &str, style: Style) -> Result<LaurentPoly2, ParseError> {
    match style {
        Style::Plain => PlainParser { s: text.as_bytes(), pos: 0 }.parse(),
        Style::Json => parse_json(text),
        Style::Latex => Err(ParseError::new(0, "latex input is not supported")),
    }
}

fn parse_json(text: &str) -> Result<LaurentPoly2, ParseError> {
    let terms: Vec<JsonTerm> = serde_json::from_str(text).map_err(|e| {
        let offset = line_col_offset(text, e.line(), e.column());
        ParseError::new(offset, e.to_string())
    })?;
    let mut raw = Vec::with_capacity(terms.len());
    for t in terms {
        let c: BigInt =
            t.coeff.parse().map_err(|_| ParseError::new(0, format!("invalid coefficient {:?}", t.coeff)))?;
        raw.push(Term { z: t.z_exp, a: t.a_exp, coeff: Integer::from_big(c) });
    }
    Ok(LaurentPoly2 { terms: super::canonicalize(raw) })
}

fn line_col_offset(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

struct PlainParser<'s> {
    s: &'s [u8],
    pos: usize,
}

impl PlainParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn error(&self, message: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("{message}, found {:?}", c as char),
            None => format!("{message}, found end of input"),
        };
        ParseError::new(self.pos, found)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let Some(d) = self.digits() else {
            return Err(self.error("expected exponent"));
        };
        let v: i64 = d.parse().map_err(|_| ParseError::new(start, "exponent out of range"))?;
        Ok(if negative { -v } else { v })
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("digits parse"));
        self.skip_ws();
        let (mut a, mut z, mut factors) = (0i64, 0i64, 0);
        while let Some(c @ (b'a' | b'z')) = self.peek() {
            self.pos += 1;
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.exponent()?
            } else {
                1
            };
            let slot = if c == b'a' { &mut a } else { &mut z };
            *slot = slot.checked_add(e).ok_or_else(|| ParseError::new(self.pos, "exponent out of range"))?;
            factors += 1;
            self.skip_ws();
        }
        if coeff.is_none() && factors == 0 {
            return Err(self.error("expected a term"));
        }
        let c = coeff.unwrap_or_else(|| BigInt::from(1));
        let c = if negative { -c } else { c };
        Ok(Term { z, a, coeff: Integer::from_big(c) })
    }

    fn parse(mut self) -> Result<LaurentPoly2, ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut raw = Vec::new();
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ if first => false,
                _ => return Err(self.error("expected '+' or '-'")),
            };
            self.skip_ws();
            raw.push(self.term(negative)?);
            first = false;
        }
        Ok(LaurentPoly2 { terms: super::canonicalize(raw) })
    }
}
