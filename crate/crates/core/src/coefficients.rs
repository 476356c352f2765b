//! Coefficient families of the reduction formulas.
//!
//! `A_m`, `B_m`, `C_m` express a section of `m` half-twists through the three
//! diagrams `L_-` (or `L_+` for negative `m`), `L_0` and `L_infinity`. The
//! level coefficients `l`, `r`, `p` are the same sums with the sign
//! `eps = (-1)^(n-1)` of level `n`.
//!
//! ```
//! use dubrovnik::coefficients::{coeff_b, coeff_c, level_coeffs};
//! use dubrovnik::LaurentPoly2;
//!
//! assert_eq!(coeff_b(2), "z^2 + 1".parse().unwrap());
//! assert_eq!(coeff_c(-2), "-a z + z^2".parse().unwrap());
//! let lc = level_coeffs(2, 2, 4);
//! assert_eq!(lc.l, "a z - z^2".parse().unwrap());
//! assert_eq!(lc.r, "a^-4 + a^-4 z^2".parse().unwrap());
//! assert_eq!(lc.p, LaurentPoly2::monomial(-1, 0, 1));
//! ```

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;

use crate::laurent::LaurentPoly2;

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `sum_{i=0}^{floor(k/2)} (s z)^(k-2i) C(k-i, i) * a^a_exp`
fn chebyshev_sum(k: i64, s: i64, a_exp: i64) -> LaurentPoly2 {
    if k < 0 {
        return LaurentPoly2::zero();
    }
    let sign = if s < 0 && k % 2 != 0 { -1 } else { 1 };
    LaurentPoly2::from_terms((0..=k / 2).map(|i| (sign * binomial(k - i, i), a_exp, k - 2 * i)))
}

thread_local! {
    static B_MEMO: RefCell<HashMap<i64, LaurentPoly2>> = RefCell::new(HashMap::new());
}

/// `B_m`. `B_0 = 1`; negative `m` uses `-z` in place of `z`.
pub fn coeff_b(m: i64) -> LaurentPoly2 {
    if let Some(hit) = B_MEMO.with(|c| c.borrow().get(&m).cloned()) {
        return hit;
    }
    let value = chebyshev_sum(m.abs(), m.signum(), 0);
    B_MEMO.with(|c| c.borrow_mut().insert(m, value.clone()));
    value
}

/// `A_m`: `A_{+-1} = 1`, `A_m = B_{m-1}` for `m > 1`, `A_m = B_{m+1}` for
/// `m < -1`, and `A_0 = 0`.
pub fn coeff_a(m: i64) -> LaurentPoly2 {
    match m {
        0 => LaurentPoly2::zero(),
        1 | -1 => LaurentPoly2::one(),
        m if m > 1 => coeff_b(m - 1),
        m => coeff_b(m + 1),
    }
}

/// `C_m`, with `C_0 = 0`.
pub fn coeff_c(m: i64) -> LaurentPoly2 {
    let k = m.abs();
    let s = m.signum();
    let mut raw = Vec::new();
    for j in 1..=k {
        let a_exp = if m > 0 { j - k } else { k - j };
        for i in 0..=(j - 1) / 2 {
            let sign = if s < 0 && (j - 2 * i) % 2 != 0 { -1 } else { 1 };
            raw.push((sign * binomial(j - 1 - i, i), a_exp, j - 2 * i));
        }
    }
    LaurentPoly2::from_terms(raw)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTriple {
    pub m: i64,
    pub a: LaurentPoly2,
    pub b: LaurentPoly2,
    pub c: LaurentPoly2,
}

/// `(A_m, B_m, C_m)` from the recurrences and the base cases at `m = +-1, +-2`
/// alone, without the closed-form sums.
pub fn coeff_triple_recurrent(m: i64) -> CoeffTriple {
    let z = LaurentPoly2::z;
    let (mut a, mut b, mut c): (Vec<LaurentPoly2>, Vec<LaurentPoly2>, Vec<LaurentPoly2>);
    if m == 0 {
        return CoeffTriple { m, a: LaurentPoly2::zero(), b: LaurentPoly2::one(), c: LaurentPoly2::zero() };
    }
    let k = m.unsigned_abs() as usize;
    if m > 0 {
        a = vec![LaurentPoly2::one(), z()];
        b = vec![z(), "z^2 + 1".parse().unwrap()];
        c = vec![z(), "a^-1 z + z^2".parse().unwrap()];
        for j in 3..=k {
            let i = j - 1;
            a.push(z() * &a[i - 1] + &a[i - 2]);
            b.push(z() * &b[i - 1] + &b[i - 2]);
            // C_j = a^-1 C_{j-1} + z B_{j-1}
            c.push(c[i - 1].shift_a(-1) + z() * &b[i - 1]);
        }
    } else {
        a = vec![LaurentPoly2::one(), -z()];
        b = vec![-z(), "z^2 + 1".parse().unwrap()];
        c = vec![-z(), "-a z + z^2".parse().unwrap()];
        for j in 3..=k {
            let i = j - 1;
            let mj = -(j as i64);
            a.push(-(z() * &a[i - 1]) + &a[i - 2]);
            b.push(-(z() * &b[i - 1]) + &b[i - 2]);
            // C_m = C_{m+2} - z a^(-m-1) - z C_{m+1}
            c.push(&c[i - 2] - LaurentPoly2::monomial(1, -mj - 1, 1) - z() * &c[i - 1]);
        }
    }
    CoeffTriple { m, a: a.swap_remove(k - 1), b: b.swap_remove(k - 1), c: c.swap_remove(k - 1) }
}

/// The weights of one reduction step at level `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCoeffs {
    pub n: usize,
    pub k: i64,
    pub b_prev: i64,
    /// Weight of `x_{n-1, b_{n-1}}`.
    pub l: LaurentPoly2,
    /// Weight of `x_{n-2, b_{n-2}}`.
    pub r: LaurentPoly2,
    /// Weight of `x_{n-1, b_{n-1} - 1}`.
    pub p: LaurentPoly2,
}

/// `l`, `r`, `p` at level `n` for a rightmost section of `k >= 0` twists,
/// where `b_prev` is the entry one level down (0 at level 1).
pub fn level_coeffs(n: usize, k: i64, b_prev: i64) -> LevelCoeffs {
    assert!(n >= 1, "levels start at 1");
    assert!(k >= 0, "twist counts are nonnegative");
    let eps: i64 = if n % 2 == 1 { 1 } else { -1 };
    let r = chebyshev_sum(k, eps, eps * b_prev);
    let p = chebyshev_sum(k - 1, eps, 0);
    let mut raw = Vec::new();
    for j in 1..=k {
        for i in 0..=(j - 1) / 2 {
            let e = j - 2 * i;
            let sign = if eps < 0 && e % 2 != 0 { 1 } else { -1 };
            raw.push((sign * binomial(j - 1 - i, i), eps * (j - k), e));
        }
    }
    LevelCoeffs { n, k, b_prev, l: LaurentPoly2::from_terms(raw), r, p }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn base_values() {
        assert_eq!(coeff_b(1), p("z"));
        assert_eq!(coeff_b(2), p("z^2 + 1"));
        assert_eq!(coeff_b(-2), p("z^2 + 1"));
        assert_eq!(coeff_b(-1), p("-z"));
        assert_eq!(coeff_b(0), p("1"));
        assert_eq!(coeff_a(1), p("1"));
        assert_eq!(coeff_a(2), p("z"));
        assert_eq!(coeff_a(-1), p("1"));
        assert_eq!(coeff_a(-2), p("-z"));
        assert_eq!(coeff_a(0), p("0"));
        assert_eq!(coeff_c(1), p("z"));
        assert_eq!(coeff_c(2), p("a^-1 z + z^2"));
        assert_eq!(coeff_c(-1), p("-z"));
        assert_eq!(coeff_c(-2), p("-a z + z^2"));
        assert_eq!(coeff_c(0), p("0"));
    }

    #[test]
    fn recurrent_triple_examples() {
        assert_eq!(coeff_triple_recurrent(3).b, p("z^3 + 2 z"));
        assert_eq!(coeff_triple_recurrent(-3).b, p("-z^3 - 2 z"));
        let t = coeff_triple_recurrent(2);
        assert_eq!((t.a, t.b, t.c), (coeff_a(2), coeff_b(2), coeff_c(2)));
        assert_eq!(coeff_triple_recurrent(-3).c, p("-z + a z^2 - a^2 z - z^3"));
    }

    #[test]
    fn level_examples() {
        let lc = level_coeffs(3, 5, 3);
        assert_eq!(lc.r, p("3 a^3 z + 4 a^3 z^3 + a^3 z^5"));
        assert_eq!(lc.p, p("1 + 3 z^2 + z^4"));
        let lc = level_coeffs(1, 0, 0);
        assert!(lc.r.is_one() && lc.p.is_zero() && lc.l.is_zero());
        let lc = level_coeffs(2, 0, 4);
        assert_eq!(lc.r, LaurentPoly2::a_pow(-4));
        assert!(lc.p.is_zero() && lc.l.is_zero());
    }

    #[test]
    fn level_coeffs_are_signed_families() {
        for n in 1..=4usize {
            let eps = if n % 2 == 1 { 1 } else { -1 };
            for k in 0..=9 {
                let lc = level_coeffs(n, k, 3);
                assert_eq!(lc.l, -coeff_c(eps * k));
                assert_eq!(lc.r, coeff_b(eps * k).shift_a(eps * 3));
                assert_eq!(lc.p, coeff_a(eps * k));
            }
        }
    }
}
