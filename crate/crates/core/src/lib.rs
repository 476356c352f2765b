//! The Dubrovnik polynomial of rational knots and links.
//!
//! A rational knot is given by the tuple `[b1, ..., bn]` of its standard
//! braid-form diagram, or by its fraction `p/q`. Three independent engines
//! compute the (regular isotopy) Dubrovnik polynomial in `Z[a^±1, z^±1]`:
//!
//! - [`skein`]: rewrite rules from the skein relation, memoized;
//! - [`reduction`]: a recurrence removing one twist section at a time;
//! - [`closed_form`]: a sum over the paths of a computational tree.
//!
//! ```
//! use dubrovnik::{BraidTuple, Engine};
//!
//! let t: BraidTuple = "[4,3,5]".parse().unwrap();
//! let polys: Vec<_> = Engine::ALL.iter().map(|e| e.evaluate(&t).unwrap()).collect();
//! assert!(polys.windows(2).all(|w| w[0] == w[1]));
//! assert_eq!(polys[0].len(), 58);
//! ```

pub mod cli;
pub mod closed_form;
pub mod coefficients;
mod error;
pub mod laurent;
pub mod reduction;
pub mod skein;
pub mod tangle;

use std::fmt;
use std::str::FromStr;

pub use closed_form::dubrovnik_closed;
pub use error::{Error, Result};
pub use laurent::{LaurentPoly2, ParseError, Style};
pub use reduction::dubrovnik_reduce;
pub use skein::dubrovnik_skein;
pub use tangle::{fractions_equivalent, BraidTuple, Fraction, Kind, TangleFraction};

/// The polynomial printed for `[4,3,5]`, in plain format.
pub const P_4_3_5: &str = include_str!("../fixtures/p_4_3_5.txt");

/// An evaluation engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Skein,
    Reduce,
    Closed,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Skein, Engine::Reduce, Engine::Closed];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Skein => "skein",
            Engine::Reduce => "reduce",
            Engine::Closed => "closed",
        }
    }

    pub fn evaluate(self, t: &BraidTuple) -> Result<LaurentPoly2> {
        match self {
            Engine::Skein => dubrovnik_skein(t),
            Engine::Reduce => dubrovnik_reduce(t),
            Engine::Closed => dubrovnik_closed(t),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Engine::ALL.into_iter().find(|e| e.name() == s).ok_or_else(|| format!("unknown engine {s:?}"))
    }
}

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    pub mod intro {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    pub mod polynomials {}
    #[doc = include_str!("../../../book/src/tuples.md")]
    pub mod tuples {}
    #[doc = include_str!("../../../book/src/skein.md")]
    pub mod skein {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    pub mod reduction {}
    #[doc = include_str!("../../../book/src/paths.md")]
    pub mod paths {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
}
