//! Evaluation by removing one whole twist section per step:
//!
//! `x_{n,k} = l_{n,k} x_{n-1,b_{n-1}} + r_{n,k} x_{n-2,b_{n-2}} + p_{n,k} x_{n-1,b_{n-1}-1}`
//!
//! with `x_{0,0} = 1`, `x_{0,-1} = 1/a`, `x_{-1,0} = a/z + 1 - 1/(az)` and
//! `b_0 = b_{-1} = 0`.
//!
//! ```
//! use dubrovnik::{dubrovnik_reduce, dubrovnik_skein, BraidTuple};
//!
//! let t: BraidTuple = "[2,3,1]".parse().unwrap();
//! assert_eq!(dubrovnik_reduce(&t).unwrap(), dubrovnik_skein(&t).unwrap());
//! ```

use std::collections::HashMap;

use crate::coefficients::level_coeffs;
use crate::error::Result;
use crate::laurent::LaurentPoly2;
use crate::skein::check_input;
use crate::tangle::{BraidTuple, Sign};

/// `x_{-1,0}`, the polynomial of two unlinked circles.
pub fn unlink() -> LaurentPoly2 {
    "a z^-1 + 1 - a^-1 z^-1".parse().expect("constant parses")
}

/// The base values `x_{len,k}` for `len <= 0`.
pub fn base_value(len: i64, k: i64) -> LaurentPoly2 {
    match (len, k) {
        (0, 0) => LaurentPoly2::one(),
        (0, -1) => LaurentPoly2::a_pow(-1),
        (-1, 0) => unlink(),
        _ => panic!("no base value x_({len},{k})"),
    }
}

/// The reduction recurrence over fixed positive entries `b_1, ..., b_n`.
pub struct Reducer<'t> {
    b: &'t [i64],
    memo: HashMap<(i64, i64), LaurentPoly2>,
}

impl<'t> Reducer<'t> {
    pub fn new(b: &'t [i64]) -> Self {
        assert!(b.iter().all(|&x| x > 0), "the recurrence takes positive entries");
        Reducer { b, memo: HashMap::new() }
    }

    /// `b_len`, with `b_0 = b_{-1} = 0`.
    pub fn entry(&self, len: i64) -> i64 {
        if len <= 0 {
            0
        } else {
            self.b[len as usize - 1]
        }
    }

    /// `x_{len,k}`: the tuple `b_1, ..., b_{len-1}, k`.
    pub fn x(&mut self, len: i64, k: i64) -> LaurentPoly2 {
        if len <= 0 {
            return base_value(len, k);
        }
        if let Some(v) = self.memo.get(&(len, k)) {
            return v.clone();
        }
        // Fill lower levels first so the recursion below is at most one deep.
        for lower in 1..len {
            let b = self.entry(lower);
            for kk in [b - 1, b] {
                if !self.memo.contains_key(&(lower, kk)) {
                    let v = self.step(lower, kk);
                    self.memo.insert((lower, kk), v);
                }
            }
        }
        let v = self.step(len, k);
        self.memo.insert((len, k), v.clone());
        v
    }

    fn step(&mut self, len: i64, k: i64) -> LaurentPoly2 {
        let prev = self.entry(len - 1);
        let c = level_coeffs(len as usize, k, prev);
        let mut acc = &c.r * &self.x(len - 2, self.entry(len - 2));
        if !c.l.is_zero() {
            acc += &c.l * &self.x(len - 1, prev);
        }
        if !c.p.is_zero() {
            acc += &c.p * &self.x(len - 1, prev - 1);
        }
        acc
    }

    /// `x_{n,b_n}` for the full tuple.
    pub fn top(&mut self) -> LaurentPoly2 {
        let n = self.b.len() as i64;
        self.x(n, self.entry(n))
    }
}

/// The Dubrovnik polynomial of `D[t]` by the reduction recurrence.
///
/// Negative tuples are evaluated as the mirror substitution of `|t|`.
pub fn dubrovnik_reduce(t: &BraidTuple) -> Result<LaurentPoly2> {
    let sign = check_input(t)?;
    let t = t.normalize_odd()?;
    let abs = t.abs();
    let value = Reducer::new(abs.entries()).top();
    Ok(match sign {
        Sign::Positive => value,
        Sign::Negative => value.mirror(),
    })
}
