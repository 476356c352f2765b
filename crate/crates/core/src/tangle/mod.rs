//! Braid-form tuples, tangle fractions and the rational knot equivalence test.
//!
//! ```
//! use dubrovnik::{BraidTuple, Fraction};
//!
//! let t: BraidTuple = "[4,3,5]".parse().unwrap();
//! assert_eq!(t.fraction().unwrap(), Fraction::new(69, 16).unwrap());
//! assert_eq!(BraidTuple::from_fraction(&Fraction::new(69, 16).unwrap()).unwrap(), t);
//! ```

mod diagram;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

pub use diagram::{Crossing, PlatDiagram};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly2, ParseError};

/// The entries `(b_1, ..., b_n)` of a standard braid-form diagram.
///
/// Entries are nonzero. Mixed signs are allowed in the value itself but
/// rejected by every evaluation engine; see [`BraidTuple::canonicalize`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidTuple {
    entries: Vec<i64>,
}

/// The sign shared by every entry of a sign-homogeneous tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// Knot or two-component link, decided by the parity of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Knot,
    Link,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Knot => "knot",
            Kind::Link => "link",
        })
    }
}

/// A reduced fraction `p/q` with `p > 0` and `q != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: BigInt,
    q: BigInt,
}

/// Value of a continued fraction, including the two trivial tangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TangleFraction {
    Rational(Fraction),
    Zero,
    Infinity,
}

impl Fraction {
    /// Reduces `p/q` and moves the sign onto `q`. Both parts must be nonzero.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() || q.is_zero() {
            return Err(Error::InvalidFraction(format!("{p}/{q} needs nonzero numerator and denominator")));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if p.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Fraction { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn kind(&self) -> Kind {
        if self.p.is_odd() {
            Kind::Knot
        } else {
            Kind::Link
        }
    }

    /// The fraction of the mirror image, `p/(-q)`.
    pub fn mirror(&self) -> Self {
        Fraction { p: self.p.clone(), q: -&self.q }
    }

    /// Whether `K(self)` and `K(other)` are the same unoriented rational knot
    /// or link: equal `p`, and `q' = q` or `q q' = 1` modulo `p`.
    pub fn equivalent(&self, other: &Fraction) -> bool {
        if self.p != other.p {
            return false;
        }
        let p = &self.p;
        let q1 = self.q.mod_floor(p);
        let q2 = other.q.mod_floor(p);
        q1 == q2 || (&q1 * &q2).mod_floor(p) == BigInt::one().mod_floor(p)
    }
}

/// Free-function form of [`Fraction::equivalent`].
pub fn fractions_equivalent(f1: &Fraction, f2: &Fraction) -> bool {
    f1.equivalent(f2)
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFraction(format!("{:?} is not of the form p/q", s.trim()));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        Fraction::new(p, q)
    }
}

impl fmt::Display for TangleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleFraction::Rational(r) => r.fmt(f),
            TangleFraction::Zero => f.write_str("0"),
            TangleFraction::Infinity => f.write_str("infinity"),
        }
    }
}

impl BraidTuple {
    /// Checks that the tuple is nonempty with nonzero entries.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyTuple);
        }
        if let Some(i) = entries.iter().position(|&b| b == 0) {
            return Err(Error::ZeroEntry { index: i + 1 });
        }
        Ok(BraidTuple { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The common sign, or the 1-based index of the first entry that breaks it.
    pub fn sign(&self) -> Result<Sign> {
        let positive = self.entries[0] > 0;
        match self.entries.iter().position(|&b| (b > 0) != positive) {
            Some(i) => Err(Error::MixedSigns { index: i + 1 }),
            None if positive => Ok(Sign::Positive),
            None => Ok(Sign::Negative),
        }
    }

    pub fn is_sign_homogeneous(&self) -> bool {
        self.sign().is_ok()
    }

    /// Sum of the absolute values of the entries: the number of crossings.
    pub fn crossing_count(&self) -> u128 {
        self.entries.iter().map(|b| u128::from(b.unsigned_abs())).sum()
    }

    /// Entrywise absolute value.
    pub fn abs(&self) -> BraidTuple {
        BraidTuple { entries: self.entries.iter().map(|b| b.abs()).collect() }
    }

    /// Evaluates `b_1 + 1/(b_2 + ... + 1/b_n)` exactly.
    pub fn fraction(&self) -> Result<Fraction> {
        match self.tangle_fraction() {
            TangleFraction::Rational(f) => Ok(f),
            TangleFraction::Zero => Err(self.degenerate("0")),
            TangleFraction::Infinity => Err(self.degenerate("infinity")),
        }
    }

    fn degenerate(&self, value: &'static str) -> Error {
        Error::DegenerateFraction { tuple: self.to_string(), value }
    }

    /// Like [`BraidTuple::fraction`] but reports the trivial tangles `0` and
    /// `infinity` as values instead of errors.
    pub fn tangle_fraction(&self) -> TangleFraction {
        // Projective evaluation from the right: p/q <- b + q/p.
        let mut p = BigInt::from(*self.entries.last().unwrap());
        let mut q = BigInt::one();
        for &b in self.entries.iter().rev().skip(1) {
            let next = BigInt::from(b) * &p + &q;
            q = std::mem::replace(&mut p, next);
        }
        if q.is_zero() {
            TangleFraction::Infinity
        } else if p.is_zero() {
            TangleFraction::Zero
        } else {
            TangleFraction::Rational(Fraction::new(p, q).expect("both parts nonzero"))
        }
    }

    /// Rewrites an even-length sign-homogeneous tuple to odd length with the
    /// same fraction; odd-length tuples are returned unchanged.
    pub fn normalize_odd(&self) -> Result<BraidTuple> {
        let sign = self.sign()?;
        if self.len() % 2 == 1 {
            return Ok(self.clone());
        }
        let s = if sign == Sign::Positive { 1 } else { -1 };
        let mut e = self.entries.clone();
        let last = *e.last().unwrap();
        if last.abs() > 1 {
            *e.last_mut().unwrap() = last - s;
            e.push(s);
        } else {
            e.pop();
            *e.last_mut().unwrap() += s;
        }
        Ok(BraidTuple { entries: e })
    }

    /// The odd-length sign-homogeneous tuple of the Euclidean expansion of `f`.
    /// Requires `|q| <= p`.
    pub fn from_fraction(f: &Fraction) -> Result<BraidTuple> {
        if f.q.abs() > f.p {
            return Err(Error::FractionOutOfRange(f.to_string()));
        }
        let negative = f.q.is_negative();
        let (mut x, mut y) = (f.p.clone(), f.q.abs());
        let mut entries = Vec::new();
        while !y.is_zero() {
            let (quot, rem) = x.div_rem(&y);
            let b = i64::try_from(&quot).map_err(|_| Error::ResourceLimit {
                what: "continued-fraction entry",
                size: u128::MAX,
                limit: i64::MAX as u128,
            })?;
            entries.push(if negative { -b } else { b });
            x = y;
            y = rem;
        }
        BraidTuple { entries }.normalize_odd()
    }

    /// Replaces a tuple by a sign-homogeneous odd-length one for the same
    /// knot or link. Mixed-sign tuples go through their fraction, with `q`
    /// reduced modulo `p` when `|q| > p` (this keeps the knot type).
    pub fn canonicalize(&self) -> Result<BraidTuple> {
        if self.is_sign_homogeneous() {
            return self.normalize_odd();
        }
        let f = self.fraction()?;
        if f.q.abs() <= f.p {
            return BraidTuple::from_fraction(&f);
        }
        let mut q = f.q.mod_floor(&f.p);
        if q.is_zero() {
            q = BigInt::one();
        }
        BraidTuple::from_fraction(&Fraction::new(f.p.clone(), q)?)
    }

    /// Entrywise negation: the mirror image diagram.
    pub fn mirror(&self) -> BraidTuple {
        BraidTuple { entries: self.entries.iter().map(|b| -b).collect() }
    }

    pub fn reverse(&self) -> BraidTuple {
        BraidTuple { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn diagram(&self) -> PlatDiagram {
        PlatDiagram::new(&self.entries)
    }

    /// Sum of crossing signs of the standard diagram. Only defined for knots,
    /// where it does not depend on the orientation.
    pub fn writhe(&self) -> Result<i64> {
        let d = self.diagram();
        if d.components() != 1 {
            return Err(Error::WritheUndefined);
        }
        Ok(d.writhe())
    }

    /// `a^(-writhe) * poly`, the ambient isotopy version of a polynomial
    /// computed for this diagram.
    pub fn normalized_polynomial(&self, poly: &LaurentPoly2) -> Result<LaurentPoly2> {
        Ok(poly.shift_a(-self.writhe()?))
    }
}

impl fmt::Display for BraidTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for BraidTuple {
    type Err = Error;

    /// Parses `[b1,b2,...]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad =
            |pos: usize, msg: &str| Error::MalformedTuple(ParseError { position: pos, message: msg.into() });
        let body_start = s.find('[').ok_or_else(|| bad(0, "expected '['"))?;
        if !s[..body_start].trim().is_empty() {
            return Err(bad(0, "expected '['"));
        }
        let close = s.rfind(']').ok_or_else(|| bad(s.len(), "expected ']'"))?;
        if !s[close + 1..].trim().is_empty() {
            return Err(bad(close + 1, "unexpected text after ']'"));
        }
        let mut entries = Vec::new();
        let mut offset = body_start + 1;
        let body = &s[body_start + 1..close];
        if body.trim().is_empty() {
            return Err(Error::EmptyTuple);
        }
        for piece in body.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            match piece.trim().parse::<i64>() {
                Ok(b) => entries.push(b),
                Err(_) => return Err(bad(offset + lead, "expected an integer")),
            }
            offset += piece.len() + 1;
        }
        BraidTuple::new(entries)
    }
}
