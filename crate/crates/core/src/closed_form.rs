//! Evaluation as a sum over root-to-leaf paths of the computational tree.
//!
//! The tree has a vertex per level. From level `i >= 1` there are three
//! edges: `l` to level `i-1` and `r` to level `i-2` (the vertex is labelled
//! `c`), and `p` to level `i-1` (labelled `d`). Paths end at level 0 or -1.
//! A vertex whose predecessor is `d`-labelled has its twist count lowered by
//! one. Each path contributes the product of its edge coefficients times the
//! value at its leaf.
//!
//! ```
//! use dubrovnik::closed_form::{count_paths, enumerate_paths};
//!
//! assert_eq!(enumerate_paths(3).len(), 17);
//! assert_eq!(count_paths(3), 17);
//! let names: Vec<String> = enumerate_paths(1).iter().map(|p| p.to_string()).collect();
//! assert_eq!(names, ["{1,0}", "{1,-1}", "{1_p,0}"]);
//! ```

use std::collections::HashMap;
use std::fmt;

use crate::coefficients::{level_coeffs, LevelCoeffs};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::reduction::base_value;
use crate::skein::check_input;
use crate::tangle::{BraidTuple, Sign};

/// Largest number of paths the engine will sum over.
pub const MAX_PATHS: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    C,
    D,
}

/// The coefficient family an edge multiplies by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    L,
    R,
    P,
}

impl Edge {
    fn step(self) -> i64 {
        match self {
            Edge::R => 2,
            Edge::L | Edge::P => 1,
        }
    }

    fn label(self) -> Label {
        match self {
            Edge::P => Label::D,
            Edge::L | Edge::R => Label::C,
        }
    }

    fn symbol(self) -> char {
        match self {
            Edge::L => 'l',
            Edge::R => 'r',
            Edge::P => 'p',
        }
    }
}

const EDGES: [Edge; 3] = [Edge::L, Edge::R, Edge::P];

/// One path `f_1 > f_2 > ... > f_l` with `f_1 = n` and `f_l` in `{0, -1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSequence {
    vertices: Vec<i64>,
    labels: Vec<Label>,
}

impl PathSequence {
    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    /// Labels of the non-leaf vertices.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn leaf(&self) -> i64 {
        *self.vertices.last().unwrap()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.labels
            .iter()
            .zip(self.vertices.windows(2))
            .map(|(label, w)| match (label, w[0] - w[1]) {
                (Label::D, _) => Edge::P,
                (Label::C, 1) => Edge::L,
                (Label::C, _) => Edge::R,
            })
            .collect()
    }

    /// `t` for every vertex: 1 when the predecessor is `d`-labelled.
    pub fn t_flags(&self) -> Vec<i64> {
        let mut t = vec![0];
        t.extend(self.labels.iter().map(|l| i64::from(*l == Label::D)));
        t
    }

    /// Levels whose outgoing edge is `e`.
    pub fn levels_with(&self, e: Edge) -> Vec<i64> {
        self.edges().iter().zip(&self.vertices).filter(|(x, _)| **x == e).map(|(_, v)| *v).collect()
    }

    /// Checks the structural invariants of a path for an `n`-level tree.
    pub fn check(&self, n: i64) -> std::result::Result<(), String> {
        let v = &self.vertices;
        if v.first() != Some(&n) {
            return Err(format!("{self} does not start at {n}"));
        }
        if self.labels.len() + 1 != v.len() {
            return Err(format!("{self} has {} labels for {} vertices", self.labels.len(), v.len()));
        }
        if !matches!(self.leaf(), 0 | -1) || v[..v.len() - 1].iter().any(|&x| x <= 0) {
            return Err(format!("{self} must end at 0 or -1 and only there"));
        }
        if v.contains(&0) && v.contains(&-1) {
            return Err(format!("{self} contains both 0 and -1"));
        }
        for (label, w) in self.labels.iter().zip(v.windows(2)) {
            let step = w[0] - w[1];
            let ok = match label {
                Label::C => step == 1 || step == 2,
                Label::D => step == 1,
            };
            if !ok {
                return Err(format!("{self} has step {step} from a {label:?} vertex"));
            }
        }
        if self.leaf() == -1 && *self.t_flags().last().unwrap() != 0 {
            return Err(format!("{self} reaches -1 after a d vertex"));
        }
        Ok(())
    }

    /// The symbolic product of coefficients along the path for entries `b`.
    pub fn term(&self, b: &[i64]) -> PathTerm {
        let entry = |level: i64| if level <= 0 { 0 } else { b[level as usize - 1] };
        let t = self.t_flags();
        let factors = self
            .edges()
            .into_iter()
            .enumerate()
            .map(|(i, e)| Factor { edge: e, level: self.vertices[i], k: entry(self.vertices[i]) - t[i] })
            .collect();
        let leaf = self.leaf();
        PathTerm { factors, leaf: (leaf, entry(leaf) - t[t.len() - 1]) }
    }
}

impl fmt::Display for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            if self.labels.get(i) == Some(&Label::D) {
                f.write_str("_p")?;
            }
        }
        f.write_str("}")
    }
}

/// A coefficient `l_{level,k}`, `r_{level,k}` or `p_{level,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub edge: Edge,
    pub level: i64,
    pub k: i64,
}

/// A path's product of coefficients and its leaf value `x_{leaf}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathTerm {
    pub factors: Vec<Factor>,
    pub leaf: (i64, i64),
}

impl PathTerm {
    /// Multiplies the product out.
    pub fn evaluate(&self, b: &[i64]) -> LaurentPoly2 {
        let entry = |level: i64| if level <= 0 { 0 } else { b[level as usize - 1] };
        let mut acc = base_value(self.leaf.0, self.leaf.1);
        for f in &self.factors {
            let c = level_coeffs(f.level as usize, f.k, entry(f.level - 1));
            acc *= pick(&c, f.edge);
        }
        acc
    }
}

impl fmt::Display for PathTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.factors {
            write!(f, "{}_{{{},{}}}", x.edge.symbol(), x.level, x.k)?;
        }
        write!(f, "x_{{{},{}}}", self.leaf.0, self.leaf.1)
    }
}

fn pick(c: &LevelCoeffs, e: Edge) -> &LaurentPoly2 {
    match e {
        Edge::L => &c.l,
        Edge::R => &c.r,
        Edge::P => &c.p,
    }
}

/// `|F|` for an `n`-level tree: `count(n) = 2 count(n-1) + count(n-2)` with
/// `count(0) = count(-1) = 1`. Saturates at `u128::MAX`.
pub fn count_paths(n: usize) -> u128 {
    let (mut prev, mut cur) = (1u128, 1u128);
    for _ in 0..n {
        let next = cur.saturating_mul(2).saturating_add(prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Visits every path in depth-first order, edges tried in the order l, r, p.
pub fn for_each_path(n: usize, mut visit: impl FnMut(&PathSequence)) {
    fn go(path: &mut PathSequence, visit: &mut dyn FnMut(&PathSequence)) {
        let at = path.leaf();
        if at <= 0 {
            visit(path);
            return;
        }
        for e in EDGES {
            path.labels.push(e.label());
            path.vertices.push(at - e.step());
            go(path, visit);
            path.vertices.pop();
            path.labels.pop();
        }
    }
    let mut path = PathSequence { vertices: vec![n as i64], labels: Vec::new() };
    go(&mut path, &mut visit);
}

/// All paths of the `n`-level tree, in [`for_each_path`] order.
pub fn enumerate_paths(n: usize) -> Vec<PathSequence> {
    let mut out = Vec::new();
    for_each_path(n, |p| out.push(p.clone()));
    out
}

/// Sum of a stream of polynomials, merging equal-sized partial sums so that
/// each term is touched `O(log count)` times.
#[derive(Default)]
struct Accumulator {
    slots: Vec<Option<LaurentPoly2>>,
}

impl Accumulator {
    fn add(&mut self, mut p: LaurentPoly2) {
        for slot in self.slots.iter_mut() {
            match slot.take() {
                None => {
                    *slot = Some(p);
                    return;
                }
                Some(q) => p = q + p,
            }
        }
        self.slots.push(Some(p));
    }

    fn total(self) -> LaurentPoly2 {
        self.slots.into_iter().flatten().fold(LaurentPoly2::zero(), |acc, p| acc + p)
    }
}

struct Walker<'b> {
    b: &'b [i64],
    coeffs: HashMap<(i64, i64), LevelCoeffs>,
    sum: Accumulator,
}

impl Walker<'_> {
    fn entry(&self, level: i64) -> i64 {
        if level <= 0 {
            0
        } else {
            self.b[level as usize - 1]
        }
    }

    /// Extends the partial product `prefix` from vertex `level`, whose
    /// predecessor flag is `t`.
    fn walk(&mut self, level: i64, t: i64, prefix: &LaurentPoly2) {
        let k = self.entry(level) - t;
        if level <= 0 {
            self.sum.add(prefix * base_value(level, k));
            return;
        }
        let prev = self.entry(level - 1);
        let c =
            self.coeffs.entry((level, k)).or_insert_with(|| level_coeffs(level as usize, k, prev)).clone();
        for e in EDGES {
            let coeff = pick(&c, e);
            if coeff.is_zero() {
                continue;
            }
            let next = prefix * coeff;
            self.walk(level - e.step(), i64::from(e == Edge::P), &next);
        }
    }
}

/// The path sum for positive entries `b` taken as given (no parity
/// normalization).
pub fn path_sum(b: &[i64]) -> LaurentPoly2 {
    assert!(b.iter().all(|&x| x > 0), "the path sum takes positive entries");
    let mut w = Walker { b, coeffs: HashMap::new(), sum: Accumulator::default() };
    w.walk(b.len() as i64, 0, &LaurentPoly2::one());
    w.sum.total()
}

/// The Dubrovnik polynomial of `D[t]` as a sum over the path set.
///
/// Negative tuples are evaluated as the mirror substitution of `|t|`.
pub fn dubrovnik_closed(t: &BraidTuple) -> Result<LaurentPoly2> {
    let sign = check_input(t)?;
    let t = t.normalize_odd()?;
    let paths = count_paths(t.len());
    if paths > MAX_PATHS {
        return Err(Error::ResourceLimit { what: "number of paths", size: paths, limit: MAX_PATHS });
    }
    let value = path_sum(t.abs().entries());
    Ok(match sign {
        Sign::Positive => value,
        Sign::Negative => value.mirror(),
    })
}
