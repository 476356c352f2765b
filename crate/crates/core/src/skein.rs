//! Evaluation by repeated skein resolution of the leftmost crossings.
//!
//! Every tuple matches exactly one of twenty patterns (classified on the
//! absolute values of the entries). Each pattern rewrites `P[t]` as a sum of
//! polynomial multiples of `P` on tuples that are smaller in
//! `(sum of |b_i|, length)`, so the expansion terminates. Positive and
//! negative tuples have separate rewrite tables that mirror each other.
//!
//! ```
//! use dubrovnik::{dubrovnik_skein, BraidTuple, LaurentPoly2};
//!
//! let trefoil: BraidTuple = "[3]".parse().unwrap();
//! let p = dubrovnik_skein(&trefoil).unwrap();
//! assert_eq!(dubrovnik_skein(&trefoil.mirror()).unwrap(), p.mirror());
//! assert_eq!(dubrovnik_skein(&"[1]".parse().unwrap()).unwrap(), LaurentPoly2::a());
//! ```

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::tangle::{BraidTuple, Sign};

/// Largest accepted `sum |b_i|`.
pub const MAX_CROSSINGS: u128 = 10_000;

/// The pattern a tuple is rewritten by. Patterns refer to the absolute values
/// of the entries; `b` stands for an entry of at least 3 in the first
/// position, at least 3 in the second (after `1`), or at least 2 (after `b`
/// or `2`), and `..` for one or more further entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// `[1]`
    One,
    /// `[2]`
    Two,
    /// `[b]`
    Twists,
    /// `[1,1]`
    Pair11,
    /// `[1,2]`
    Pair12,
    /// `[2,1]`
    Pair21,
    /// `[1,b]`
    Pair1B,
    /// `[2,b]`
    Pair2B,
    /// `[b,1]`
    PairB1,
    /// `[b,b]`
    PairBB,
    /// `[1,1,b3]`
    Triple11,
    /// `[1,1,b3,1]`
    Quad11B1,
    /// `[1,1,b3,1,b5,..]`, tail possibly empty
    Lead11B1,
    /// `[1,1,b3,b4,..]` with `b4 >= 2`, tail possibly empty
    Lead11BB,
    /// `[2,1,b3,..]`
    Lead21,
    /// `[1,2,b3,..]`
    Lead12,
    /// `[1,b2,..]` with `b2 >= 3`
    Lead1B,
    /// `[2,b2,..]` with `b2 >= 2`
    Lead2B,
    /// `[b1,1,b3,..]` with `b1 >= 3`
    LeadB1,
    /// `[b1,b2,..]` with `b1 >= 3`, `b2 >= 2`
    LeadBB,
}

type Pattern = fn(&[i64]) -> bool;

const PATTERNS: [(Rule, Pattern); 20] = [
    (Rule::One, |t| t == [1]),
    (Rule::Two, |t| t == [2]),
    (Rule::Twists, |t| t.len() == 1 && t[0] >= 3),
    (Rule::Pair11, |t| t == [1, 1]),
    (Rule::Pair12, |t| t == [1, 2]),
    (Rule::Pair21, |t| t == [2, 1]),
    (Rule::Pair1B, |t| t.len() == 2 && t[0] == 1 && t[1] >= 3),
    (Rule::Pair2B, |t| t.len() == 2 && t[0] == 2 && t[1] >= 2),
    (Rule::PairB1, |t| t.len() == 2 && t[0] >= 3 && t[1] == 1),
    (Rule::PairBB, |t| t.len() == 2 && t[0] >= 3 && t[1] >= 2),
    (Rule::Triple11, |t| t.len() == 3 && t[..2] == [1, 1]),
    (Rule::Quad11B1, |t| t.len() == 4 && t[..2] == [1, 1] && t[3] == 1),
    (Rule::Lead11B1, |t| t.len() >= 5 && t[..2] == [1, 1] && t[3] == 1),
    (Rule::Lead11BB, |t| t.len() >= 4 && t[..2] == [1, 1] && t[3] >= 2),
    (Rule::Lead21, |t| t.len() >= 3 && t[..2] == [2, 1]),
    (Rule::Lead12, |t| t.len() >= 3 && t[..2] == [1, 2]),
    (Rule::Lead1B, |t| t.len() >= 3 && t[0] == 1 && t[1] >= 3),
    (Rule::Lead2B, |t| t.len() >= 3 && t[0] == 2 && t[1] >= 2),
    (Rule::LeadB1, |t| t.len() >= 3 && t[0] >= 3 && t[1] == 1),
    (Rule::LeadBB, |t| t.len() >= 3 && t[0] >= 3 && t[1] >= 2),
];

/// The unique rule matching a tuple of positive entries.
///
/// # Panics
/// If `abs` is empty or has a nonpositive entry.
pub fn classify(abs: &[i64]) -> Rule {
    assert!(!abs.is_empty() && abs.iter().all(|&b| b > 0), "classify takes positive entries");
    let mut hits = PATTERNS.iter().filter(|(_, matches)| matches(abs)).map(|(r, _)| *r);
    let rule = hits.next().expect("every positive tuple matches a rule");
    debug_assert!(hits.next().is_none(), "{abs:?} matches more than one rule");
    rule
}

/// One rewrite step: `P[t] = sum coeff * P[child]`, where an empty child
/// stands for the constant 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub rule: Rule,
    pub terms: Vec<(LaurentPoly2, Vec<i64>)>,
}

/// The polynomial of the Hopf link diagram `[2]`.
pub fn hopf() -> LaurentPoly2 {
    "a z^-1 - a^-1 z^-1 + 1 - a^-1 z + a z".parse().expect("constant parses")
}

fn cat(head: &[i64], tail: &[i64]) -> Vec<i64> {
    let mut v = head.to_vec();
    v.extend_from_slice(tail);
    v
}

fn an(e: i64) -> LaurentPoly2 {
    LaurentPoly2::a_pow(e)
}

/// `s * z * a^e`
fn zan(s: i64, e: i64) -> LaurentPoly2 {
    LaurentPoly2::monomial(s, e, 1)
}

/// Rewrites a sign-homogeneous tuple by one skein step.
///
/// # Panics
/// If the entries are empty, contain 0, or have mixed signs.
pub fn expand(entries: &[i64]) -> Expansion {
    let abs: Vec<i64> = entries.iter().map(|b| b.abs()).collect();
    let rule = classify(&abs);
    let positive = entries[0] > 0;
    assert!(entries.iter().all(|&b| (b > 0) == positive), "expand takes sign-homogeneous tuples");
    let terms = if positive { expand_positive(rule, entries) } else { expand_negative(rule, entries) };
    Expansion { rule, terms }
}

fn expand_positive(rule: Rule, t: &[i64]) -> Vec<(LaurentPoly2, Vec<i64>)> {
    let one = LaurentPoly2::one;
    let b = |i: usize| t[i];
    match rule {
        Rule::One => vec![(LaurentPoly2::a(), vec![])],
        Rule::Two | Rule::Pair11 => vec![(hopf(), vec![])],
        Rule::Twists => {
            vec![(one(), vec![b(0) - 2]), (zan(-1, 1 - b(0)), vec![]), (LaurentPoly2::z(), vec![b(0) - 1])]
        }
        Rule::Pair12 => vec![(an(-1) - LaurentPoly2::z() * hopf() + zan(1, 2), vec![])],
        Rule::Pair21 => vec![(an(1) - zan(1, -2), vec![]), (LaurentPoly2::z(), vec![1, 1])],
        Rule::Pair1B => {
            vec![(one(), vec![1, b(1) - 2]), (zan(-1, 0), vec![1, b(1) - 1]), (zan(1, b(1)), vec![])]
        }
        Rule::Pair2B => {
            vec![(an(b(1)), vec![]), (zan(-1, -1), vec![1, b(1) - 1]), (zan(1, 0), vec![1, b(1)])]
        }
        Rule::PairB1 => vec![(one(), vec![b(0) + 1])],
        Rule::PairBB => vec![
            (one(), vec![b(0) - 2, b(1)]),
            (zan(-1, 1 - b(0)), vec![1, b(1) - 1]),
            (zan(1, 0), vec![b(0) - 1, b(1)]),
        ],
        Rule::Triple11 => vec![(an(-b(2)), vec![]), (zan(-1, 0), vec![b(2) + 1]), (zan(1, 1), vec![b(2)])],
        Rule::Quad11B1 => {
            vec![(an(-1 - b(2)), vec![]), (zan(-1, 0), vec![b(2) + 1, 1]), (zan(1, 1), vec![b(2), 1])]
        }
        Rule::Lead11B1 => {
            let tail = &t[5..];
            vec![
                (an(-b(2)), cat(&[1 + b(4)], tail)),
                (zan(-1, 0), cat(&[b(2) + 1, 1, b(4)], tail)),
                (zan(1, 1), cat(&[b(2), 1, b(4)], tail)),
            ]
        }
        Rule::Lead11BB => {
            let tail = &t[4..];
            vec![
                (an(-b(2)), cat(&[1, b(3) - 1], tail)),
                (zan(-1, 0), cat(&[b(2) + 1, b(3)], tail)),
                (zan(1, 1), cat(&[b(2), b(3)], tail)),
            ]
        }
        Rule::Lead21 => {
            let tail = &t[3..];
            vec![
                (an(1), cat(&[b(2)], tail)),
                (zan(-1, -1), cat(&[b(2) + 1], tail)),
                (zan(1, 0), cat(&[1, 1, b(2)], tail)),
            ]
        }
        Rule::Lead12 => {
            let tail = &t[3..];
            vec![
                (one(), cat(&[b(2) + 1], tail)),
                (zan(-1, 0), cat(&[1, 1, b(2)], tail)),
                (zan(1, 2), cat(&[b(2)], tail)),
            ]
        }
        Rule::Lead1B => {
            let tail = &t[2..];
            vec![
                (one(), cat(&[1, b(1) - 2], tail)),
                (zan(-1, 0), cat(&[1, b(1) - 1], tail)),
                (zan(1, b(1)), tail.to_vec()),
            ]
        }
        Rule::Lead2B => {
            let tail = &t[2..];
            vec![
                (an(b(1)), tail.to_vec()),
                (zan(-1, -1), cat(&[1, b(1) - 1], tail)),
                (zan(1, 0), cat(&[1, b(1)], tail)),
            ]
        }
        Rule::LeadB1 => {
            let tail = &t[3..];
            vec![
                (one(), cat(&[b(0) - 2, 1, b(2)], tail)),
                (zan(-1, 1 - b(0)), cat(&[b(2) + 1], tail)),
                (zan(1, 0), cat(&[b(0) - 1, 1, b(2)], tail)),
            ]
        }
        Rule::LeadBB => {
            let tail = &t[2..];
            vec![
                (one(), cat(&[b(0) - 2, b(1)], tail)),
                (zan(-1, 1 - b(0)), cat(&[1, b(1) - 1], tail)),
                (zan(1, 0), cat(&[b(0) - 1, b(1)], tail)),
            ]
        }
    }
}

fn expand_negative(rule: Rule, t: &[i64]) -> Vec<(LaurentPoly2, Vec<i64>)> {
    let one = LaurentPoly2::one;
    let b = |i: usize| t[i];
    match rule {
        Rule::One => vec![(an(-1), vec![])],
        Rule::Two | Rule::Pair11 => vec![(hopf(), vec![])],
        Rule::Twists => {
            vec![(one(), vec![b(0) + 2]), (zan(1, -1 - b(0)), vec![]), (zan(-1, 0), vec![b(0) + 1])]
        }
        Rule::Pair12 => vec![(an(1) + LaurentPoly2::z() * hopf() - zan(1, -2), vec![])],
        Rule::Pair21 => vec![(an(-1) + zan(1, 2), vec![]), (zan(-1, 0), vec![-1, -1])],
        Rule::Pair1B => {
            vec![(one(), vec![-1, b(1) + 2]), (zan(1, 0), vec![-1, b(1) + 1]), (zan(-1, b(1)), vec![])]
        }
        Rule::Pair2B => {
            vec![(an(b(1)), vec![]), (zan(1, 1), vec![-1, b(1) + 1]), (zan(-1, 0), vec![-1, b(1)])]
        }
        Rule::PairB1 => vec![(one(), vec![b(0) - 1])],
        Rule::PairBB => vec![
            (one(), vec![b(0) + 2, b(1)]),
            (zan(1, -1 - b(0)), vec![-1, b(1) + 1]),
            (zan(-1, 0), vec![b(0) + 1, b(1)]),
        ],
        Rule::Triple11 => vec![(an(-b(2)), vec![]), (zan(1, 0), vec![b(2) - 1]), (zan(-1, -1), vec![b(2)])],
        Rule::Quad11B1 => {
            vec![(an(1 - b(2)), vec![]), (zan(1, 0), vec![b(2) - 1, -1]), (zan(-1, -1), vec![b(2), -1])]
        }
        Rule::Lead11B1 => {
            let tail = &t[5..];
            vec![
                (an(-b(2)), cat(&[b(4) - 1], tail)),
                (zan(1, 0), cat(&[b(2) - 1, -1, b(4)], tail)),
                (zan(-1, -1), cat(&[b(2), -1, b(4)], tail)),
            ]
        }
        Rule::Lead11BB => {
            let tail = &t[4..];
            vec![
                (an(-b(2)), cat(&[-1, b(3) + 1], tail)),
                (zan(1, 0), cat(&[b(2) - 1, b(3)], tail)),
                (zan(-1, -1), cat(&[b(2), b(3)], tail)),
            ]
        }
        Rule::Lead21 => {
            let tail = &t[3..];
            vec![
                (an(-1), cat(&[b(2)], tail)),
                (zan(1, 1), cat(&[b(2) - 1], tail)),
                (zan(-1, 0), cat(&[-1, -1, b(2)], tail)),
            ]
        }
        Rule::Lead12 => {
            let tail = &t[3..];
            vec![
                (one(), cat(&[b(2) - 1], tail)),
                (zan(1, 0), cat(&[-1, -1, b(2)], tail)),
                (zan(-1, -2), cat(&[b(2)], tail)),
            ]
        }
        Rule::Lead1B => {
            let tail = &t[2..];
            vec![
                (one(), cat(&[-1, b(1) + 2], tail)),
                (zan(1, 0), cat(&[-1, b(1) + 1], tail)),
                (zan(-1, b(1)), tail.to_vec()),
            ]
        }
        Rule::Lead2B => {
            let tail = &t[2..];
            vec![
                (an(b(1)), tail.to_vec()),
                (zan(1, 1), cat(&[-1, b(1) + 1], tail)),
                (zan(-1, 0), cat(&[-1, b(1)], tail)),
            ]
        }
        Rule::LeadB1 => {
            let tail = &t[3..];
            vec![
                (one(), cat(&[b(0) + 2, -1, b(2)], tail)),
                (zan(1, -1 - b(0)), cat(&[b(2) - 1], tail)),
                (zan(-1, 0), cat(&[b(0) + 1, -1, b(2)], tail)),
            ]
        }
        Rule::LeadBB => {
            let tail = &t[2..];
            vec![
                (one(), cat(&[b(0) + 2, b(1)], tail)),
                (zan(1, -b(0) - 1), cat(&[-1, b(1) + 1], tail)),
                (zan(-1, 0), cat(&[b(0) + 1, b(1)], tail)),
            ]
        }
    }
}

/// A skein evaluator whose memo persists across calls.
#[derive(Default)]
pub struct SkeinEvaluator {
    memo: HashMap<Vec<i64>, LaurentPoly2>,
}

struct Frame {
    key: Vec<i64>,
    expansion: Expansion,
}

impl SkeinEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized sub-tuples.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Validates the tuple, normalizes even lengths to odd, and evaluates.
    pub fn evaluate(&mut self, t: &BraidTuple) -> Result<LaurentPoly2> {
        check_input(t)?;
        let t = t.normalize_odd()?;
        Ok(self.evaluate_entries(t.entries()))
    }

    /// Evaluates a sign-homogeneous tuple of any length as given, using the
    /// even-length rules where they apply.
    ///
    /// # Panics
    /// On empty, zero-containing or mixed-sign input.
    pub fn evaluate_entries(&mut self, entries: &[i64]) -> LaurentPoly2 {
        if entries.is_empty() {
            return LaurentPoly2::one();
        }
        if let Some(v) = self.memo.get(entries) {
            return v.clone();
        }
        let mut stack = vec![Frame { key: entries.to_vec(), expansion: expand(entries) }];
        while let Some(frame) = stack.last() {
            if self.memo.contains_key(&frame.key) {
                stack.pop();
                continue;
            }
            let missing: Vec<Vec<i64>> = frame
                .expansion
                .terms
                .iter()
                .filter(|(_, child)| !child.is_empty() && !self.memo.contains_key(child))
                .map(|(_, child)| child.clone())
                .collect();
            if missing.is_empty() {
                let frame = stack.pop().unwrap();
                let value = self.combine(&frame.expansion);
                self.memo.insert(frame.key, value);
            } else {
                for child in missing {
                    let expansion = expand(&child);
                    stack.push(Frame { key: child, expansion });
                }
            }
        }
        self.memo[entries].clone()
    }

    fn combine(&self, e: &Expansion) -> LaurentPoly2 {
        let mut acc = LaurentPoly2::zero();
        for (coeff, child) in &e.terms {
            if child.is_empty() {
                acc += coeff;
            } else {
                acc += coeff * &self.memo[child];
            }
        }
        acc
    }
}

pub(crate) fn check_input(t: &BraidTuple) -> Result<Sign> {
    let sign = t.sign()?;
    let total = t.crossing_count();
    if total > MAX_CROSSINGS {
        return Err(Error::ResourceLimit { what: "sum of |b_i|", size: total, limit: MAX_CROSSINGS });
    }
    Ok(sign)
}

/// The Dubrovnik polynomial of `D[t]` by the skein rules, with a private memo.
///
/// Negative tuples use the negative rewrite table directly.
pub fn dubrovnik_skein(t: &BraidTuple) -> Result<LaurentPoly2> {
    SkeinEvaluator::new().evaluate(t)
}

/// Like [`dubrovnik_skein`], but a negative tuple is evaluated as the mirror
/// substitution of its positive counterpart.
pub fn dubrovnik_skein_via_mirror(t: &BraidTuple) -> Result<LaurentPoly2> {
    match check_input(t)? {
        Sign::Positive => dubrovnik_skein(t),
        Sign::Negative => Ok(dubrovnik_skein(&t.mirror())?.mirror()),
    }
}

/// Plain recursive evaluation without a memo. Exponential; for tests.
pub fn evaluate_unmemoized(entries: &[i64]) -> LaurentPoly2 {
    if entries.is_empty() {
        return LaurentPoly2::one();
    }
    expand(entries).terms.iter().map(|(coeff, child)| coeff * evaluate_unmemoized(child)).sum()
}
