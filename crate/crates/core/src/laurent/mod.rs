//! Exact arithmetic in `Z[a, 1/a, z, 1/z]`.
//!
//! [`LaurentPoly2`] stores its terms sorted by `(z_exp, a_exp)` with no zero
//! coefficients, so structural equality is polynomial equality.
//!
//! ```
//! use dubrovnik::LaurentPoly2;
//!
//! let a = LaurentPoly2::a();
//! let z = LaurentPoly2::z();
//! let p = (&a + &z) * (&a - &z);
//! assert_eq!(p.to_string(), "a^2 - z^2");
//! assert_eq!(p.mirror(), "a^-2 - z^2".parse().unwrap());
//! ```

mod format;
mod integer;

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;

pub use format::{ParseError, Style};
pub(crate) use integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub(crate) z: i64,
    pub(crate) a: i64,
    pub(crate) coeff: Integer,
}

impl Term {
    fn key(&self) -> (i64, i64) {
        (self.z, self.a)
    }
}

/// A two-variable Laurent polynomial in `a` and `z` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: Vec<Term>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `a^k`
    pub fn a_pow(k: i64) -> Self {
        Self::monomial(1, k, 0)
    }

    /// `z^k`
    pub fn z_pow(k: i64) -> Self {
        Self::monomial(1, 0, k)
    }

    /// `coeff * a^a_exp * z^z_exp`; a zero coefficient gives the zero polynomial.
    pub fn monomial(coeff: i64, a_exp: i64, z_exp: i64) -> Self {
        Self::from_term(Integer::Small(coeff), a_exp, z_exp)
    }

    pub fn monomial_big(coeff: BigInt, a_exp: i64, z_exp: i64) -> Self {
        Self::from_term(Integer::from_big(coeff), a_exp, z_exp)
    }

    fn from_term(coeff: Integer, a: i64, z: i64) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 { terms: vec![Term { z, a, coeff }] }
    }

    /// Builds a polynomial from arbitrary `(coeff, a_exp, z_exp)` triples,
    /// combining repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, i64, i64)>,
    {
        let raw = terms.into_iter().map(|(c, a, z)| Term { z, a, coeff: Integer::from_big(c) }).collect();
        LaurentPoly2 { terms: canonicalize(raw) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].key() == (0, 0) && self.terms[0].coeff.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `a^a_exp z^z_exp`.
    pub fn coeff(&self, a_exp: i64, z_exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&(z_exp, a_exp), Term::key) {
            Ok(i) => self.terms[i].coeff.to_bigint(),
            Err(_) => BigInt::from(0),
        }
    }

    /// Terms as `(coeff, a_exp, z_exp)`, ascending in `z_exp` then `a_exp`.
    pub fn terms(&self) -> impl Iterator<Item = (BigInt, i64, i64)> + '_ {
        self.terms.iter().map(|t| (t.coeff.to_bigint(), t.a, t.z))
    }

    #[cfg(test)]
    pub(crate) fn raw_terms(&self) -> &[Term] {
        &self.terms
    }

    /// True when no term has a nonzero power of `a`.
    pub fn is_independent_of_a(&self) -> bool {
        self.terms.iter().all(|t| t.a == 0)
    }

    /// The substitution `a -> 1/a`, `z -> -z`.
    pub fn mirror(&self) -> Self {
        let raw = self
            .terms
            .iter()
            .map(|t| Term {
                z: t.z,
                a: -t.a,
                coeff: if t.z % 2 == 0 { t.coeff.clone() } else { t.coeff.neg() },
            })
            .collect::<Vec<_>>();
        let mut terms = raw;
        terms.sort_unstable_by_key(Term::key);
        LaurentPoly2 { terms }
    }

    /// Multiplies by `coeff * a^a_exp * z^z_exp`.
    pub fn scale(&self, coeff: i64, a_exp: i64, z_exp: i64) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let m = Term { z: z_exp, a: a_exp, coeff: Integer::Small(coeff) };
        LaurentPoly2 { terms: scale_terms(&self.terms, &m) }
    }

    /// Multiplies by `a^k`, keeping the coefficients.
    pub fn shift_a(&self, k: i64) -> Self {
        let terms = self.terms.iter().map(|t| Term { z: t.z, a: t.a + k, coeff: t.coeff.clone() });
        LaurentPoly2 { terms: terms.collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn format(&self, style: Style) -> String {
        format::format(self, style)
    }

    pub fn parse(text: &str, style: Style) -> Result<Self, ParseError> {
        format::parse(text, style)
    }

    pub fn to_latex(&self) -> String {
        self.format(Style::Latex)
    }

    pub fn to_json(&self) -> String {
        self.format(Style::Json)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        format::json_value(self)
    }
}

fn canonicalize(mut raw: Vec<Term>) -> Vec<Term> {
    raw.sort_unstable_by_key(Term::key);
    let mut out: Vec<Term> = Vec::with_capacity(raw.len());
    for t in raw {
        match out.last_mut() {
            Some(last) if last.key() == t.key() => last.coeff = last.coeff.add(&t.coeff),
            _ => {
                if let Some(last) = out.last() {
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                out.push(t);
            }
        }
    }
    if out.last().is_some_and(|t| t.coeff.is_zero()) {
        out.pop();
    }
    out
}

fn scale_terms(terms: &[Term], m: &Term) -> Vec<Term> {
    terms.iter().map(|t| Term { z: t.z + m.z, a: t.a + m.a, coeff: t.coeff.mul(&m.coeff) }).collect()
}

fn merge(x: &[Term], y: &[Term], negate_y: bool) -> Vec<Term> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].key().cmp(&y[j].key()) {
            std::cmp::Ordering::Less => {
                out.push(x[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_y { y[j].coeff.neg() } else { y[j].coeff.clone() };
                out.push(Term { z: y[j].z, a: y[j].a, coeff: c });
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_y { x[i].coeff.sub(&y[j].coeff) } else { x[i].coeff.add(&y[j].coeff) };
                if !c.is_zero() {
                    out.push(Term { z: x[i].z, a: x[i].a, coeff: c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    for t in &y[j..] {
        let c = if negate_y { t.coeff.neg() } else { t.coeff.clone() };
        out.push(Term { z: t.z, a: t.a, coeff: c });
    }
    out
}

/// Product through a dense grid over the exponent bounding box. Returns
/// `None` when the box is too sparse, a coefficient is big, or an `i128`
/// partial sum would overflow.
fn mul_dense(x: &[Term], y: &[Term]) -> Option<Vec<Term>> {
    let bounds = |t: &[Term]| {
        let (lo, hi) = t.iter().fold((i64::MAX, i64::MIN), |(lo, hi), t| (lo.min(t.a), hi.max(t.a)));
        (lo, hi, t[0].z, t[t.len() - 1].z)
    };
    let (xa0, xa1, xz0, xz1) = bounds(x);
    let (ya0, ya1, yz0, yz1) = bounds(y);
    let a0 = xa0 + ya0;
    let width = usize::try_from(xa1 + ya1 - a0 + 1).ok()?;
    let z0 = xz0 + yz0;
    let height = usize::try_from(xz1 + yz1 - z0 + 1).ok()?;
    let cells = width.checked_mul(height)?;
    if cells > (1 << 22) || cells > 8 * x.len() * y.len() + 1024 {
        return None;
    }
    let xs: Vec<(usize, i128)> = x
        .iter()
        .map(|t| Some((((t.z - xz0) as usize) * width + (t.a - xa0) as usize, t.coeff.small()? as i128)))
        .collect::<Option<_>>()?;
    let ys: Vec<(usize, i128)> = y
        .iter()
        .map(|t| Some((((t.z - yz0) as usize) * width + (t.a - ya0) as usize, t.coeff.small()? as i128)))
        .collect::<Option<_>>()?;
    let mut grid = vec![0i128; cells];
    for &(i, c) in &xs {
        for &(j, d) in &ys {
            let cell = &mut grid[i + j];
            *cell = cell.checked_add(c * d)?;
        }
    }
    let mut out = Vec::new();
    for (idx, &c) in grid.iter().enumerate() {
        if c != 0 {
            let z = z0 + (idx / width) as i64;
            let a = a0 + (idx % width) as i64;
            out.push(Term { z, a, coeff: Integer::from_i128(c) });
        }
    }
    Some(out)
}

fn mul_terms(x: &[Term], y: &[Term]) -> Vec<Term> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    if x.len() == 1 {
        return scale_terms(y, &x[0]);
    }
    if y.len() == 1 {
        return scale_terms(x, &y[0]);
    }
    if let Some(out) = mul_dense(x, y) {
        return out;
    }
    let mut raw = Vec::with_capacity(x.len() * y.len());
    for s in x {
        for t in y {
            raw.push(Term { z: s.z + t.z, a: s.a + t.a, coeff: s.coeff.mul(&t.coeff) });
        }
    }
    canonicalize(raw)
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Style::Plain))
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl std::str::FromStr for LaurentPoly2 {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, Style::Plain)
    }
}

impl From<i64> for LaurentPoly2 {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        let terms = self.terms.iter().map(|t| Term { z: t.z, a: t.a, coeff: t.coeff.neg() });
        LaurentPoly2 { terms: terms.collect() }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, $body:expr) => {
        impl $trait<&LaurentPoly2> for &LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
                LaurentPoly2 { terms: $body(&self.terms, &rhs.terms) }
            }
        }
        impl $trait<LaurentPoly2> for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly2> for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly2> for &LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                self.$method(&rhs)
            }
        }
        impl $assign_trait<&LaurentPoly2> for LaurentPoly2 {
            fn $assign(&mut self, rhs: &LaurentPoly2) {
                self.terms = $body(&self.terms, &rhs.terms);
            }
        }
        impl $assign_trait<LaurentPoly2> for LaurentPoly2 {
            fn $assign(&mut self, rhs: LaurentPoly2) {
                self.terms = $body(&self.terms, &rhs.terms);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, |x, y| merge(x, y, false));
binop!(Sub, sub, SubAssign, sub_assign, |x, y| merge(x, y, true));
binop!(Mul, mul, MulAssign, mul_assign, mul_terms);

impl Sum for LaurentPoly2 {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let raw: Vec<Term> = iter.flat_map(|p| p.terms).collect();
        LaurentPoly2 { terms: canonicalize(raw) }
    }
}

impl<'a> Sum<&'a LaurentPoly2> for LaurentPoly2 {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        let raw: Vec<Term> = iter.flat_map(|p| p.terms.iter().cloned()).collect();
        LaurentPoly2 { terms: canonicalize(raw) }
    }
}

impl Product for LaurentPoly2 {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}
