use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

/// Integer coefficient that stays on the machine word until it overflows.
///
/// `Big` is only ever used for values outside the `i64` range, so the derived
/// equality and hashing agree with numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub(crate) fn from_big(value: BigInt) -> Self {
        match i64::try_from(&value) {
            Ok(v) => Integer::Small(v),
            Err(_) => Integer::Big(value),
        }
    }

    pub(crate) fn from_i128(value: i128) -> Self {
        match i64::try_from(value) {
            Ok(v) => Integer::Small(v),
            Err(_) => Integer::Big(BigInt::from(value)),
        }
    }

    pub(crate) fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub(crate) fn small(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }

    pub(crate) fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub(crate) fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }

    pub(crate) fn neg(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }

    pub(crate) fn add(&self, other: &Integer) -> Integer {
        if let (Integer::Small(x), Integer::Small(y)) = (self, other) {
            if let Some(s) = x.checked_add(*y) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() + other.to_bigint())
    }

    pub(crate) fn sub(&self, other: &Integer) -> Integer {
        if let (Integer::Small(x), Integer::Small(y)) = (self, other) {
            if let Some(s) = x.checked_sub(*y) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() - other.to_bigint())
    }

    pub(crate) fn mul(&self, other: &Integer) -> Integer {
        if let (Integer::Small(x), Integer::Small(y)) = (self, other) {
            if let Some(s) = x.checked_mul(*y) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_bigint() * other.to_bigint())
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(x), Integer::Small(y)) => x.cmp(y),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}
