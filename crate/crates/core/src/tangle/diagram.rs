//! The standard braid-form diagram as a 4-strand plat.
//!
//! Strand positions are numbered 1 to 4 from the top. Section `i` of the
//! tuple contributes `|b_i|` crossings: odd sections twist positions 2 and 3,
//! even sections twist positions 1 and 2, with the twist direction flipped on
//! even sections so that a sign-homogeneous tuple gives an alternating
//! diagram. The left end is capped `(1,2) (3,4)`; the right end the same way
//! for odd length and `(1,4) (2,3)` for even length.

/// One crossing of a traced diagram.
///
/// Edge labels number the arcs between consecutive crossing passes along the
/// traversal; `over` and `under` are `(incoming, outgoing)` edge pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// 1-based section of the tuple this crossing belongs to.
    pub section: usize,
    pub over: (usize, usize),
    pub under: (usize, usize),
    /// Sign under the traversal orientation, `+1` or `-1`.
    pub sign: i8,
}

#[derive(Clone, Debug)]
pub struct PlatDiagram {
    crossings: Vec<Crossing>,
    components: usize,
    edges: usize,
}

#[derive(Clone, Copy)]
struct Generator {
    section: usize,
    low: u8,
    exponent: i8,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Right,
    Left,
}

#[derive(Clone, Copy)]
struct Pass {
    edge_in: usize,
    edge_out: usize,
    rightward: bool,
    over: bool,
}

fn cap(pos: u8, wide: bool) -> u8 {
    match (pos, wide) {
        (1, false) => 2,
        (2, false) => 1,
        (3, false) => 4,
        (4, false) => 3,
        (1, true) => 4,
        (4, true) => 1,
        (2, true) => 3,
        (3, true) => 2,
        _ => unreachable!("positions are 1..=4"),
    }
}

impl PlatDiagram {
    pub fn new(entries: &[i64]) -> Self {
        let mut gens = Vec::new();
        for (i, &b) in entries.iter().enumerate() {
            let section = i + 1;
            let (low, exponent) =
                if section % 2 == 1 { (2, b.signum() as i8) } else { (1, -b.signum() as i8) };
            for _ in 0..b.unsigned_abs() {
                gens.push(Generator { section, low, exponent });
            }
        }
        trace(&gens, entries.len() % 2 == 0)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Number of edges, labelled `0..edges`.
    pub fn edges(&self) -> usize {
        self.edges
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }
}

fn trace(gens: &[Generator], even: bool) -> PlatDiagram {
    let n = gens.len();
    let mut visited = vec![[false; 4]; n + 1];
    let mut passes: Vec<Vec<Pass>> = vec![Vec::with_capacity(2); n];
    let mut next_edge = 0usize;
    let mut components = 0;

    for start_col in 0..=n {
        for start_pos in 1..=4u8 {
            if visited[start_col][start_pos as usize - 1] {
                continue;
            }
            components += 1;
            let first_edge = next_edge;
            next_edge += 1;
            let mut edge = first_edge;
            let (mut col, mut pos, mut dir) = (start_col, start_pos, Dir::Right);
            loop {
                visited[col][pos as usize - 1] = true;
                let k = match dir {
                    Dir::Right if col == n => {
                        pos = cap(pos, even);
                        dir = Dir::Left;
                        None
                    }
                    Dir::Left if col == 0 => {
                        pos = cap(pos, false);
                        dir = Dir::Right;
                        None
                    }
                    Dir::Right => Some(col),
                    Dir::Left => Some(col - 1),
                };
                if let Some(k) = k {
                    let g = gens[k];
                    if pos == g.low || pos == g.low + 1 {
                        let new_pos = if pos == g.low { g.low + 1 } else { g.low };
                        let left_end = if dir == Dir::Right { pos } else { new_pos };
                        let descending = left_end == g.low;
                        passes[k].push(Pass {
                            edge_in: edge,
                            edge_out: next_edge,
                            rightward: dir == Dir::Right,
                            over: descending == (g.exponent > 0),
                        });
                        edge = next_edge;
                        next_edge += 1;
                        pos = new_pos;
                    }
                    col = if dir == Dir::Right { col + 1 } else { col - 1 };
                }
                if col == start_col && pos == start_pos && dir == Dir::Right {
                    break;
                }
            }
            if edge != first_edge {
                // The final edge closes up onto the first one.
                for p in passes.iter_mut().flatten() {
                    if p.edge_out == edge {
                        p.edge_out = first_edge;
                    }
                }
                next_edge -= 1;
            }
        }
    }

    let crossings = gens
        .iter()
        .zip(passes)
        .map(|(g, ps)| {
            debug_assert_eq!(ps.len(), 2);
            let (o, u) = if ps[0].over { (ps[0], ps[1]) } else { (ps[1], ps[0]) };
            let d = |p: Pass| if p.rightward { 1 } else { -1 };
            Crossing {
                section: g.section,
                over: (o.edge_in, o.edge_out),
                under: (u.edge_in, u.edge_out),
                sign: g.exponent * d(o) * d(u),
            }
        })
        .collect();
    PlatDiagram { crossings, components, edges: next_edge }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_writhes() {
        assert_eq!(PlatDiagram::new(&[1]).writhe(), 1);
        assert_eq!(PlatDiagram::new(&[3]).writhe(), 3);
        assert_eq!(PlatDiagram::new(&[-3]).writhe(), -3);
        assert_eq!(PlatDiagram::new(&[1, 1, 1]).writhe(), -3);
        assert_eq!(PlatDiagram::new(&[2, 1]).writhe(), 3);
    }

    #[test]
    fn component_counts() {
        assert_eq!(PlatDiagram::new(&[2]).components(), 2);
        assert_eq!(PlatDiagram::new(&[3]).components(), 1);
        assert_eq!(PlatDiagram::new(&[2, 2]).components(), 1);
        assert_eq!(PlatDiagram::new(&[4, 3, 5]).components(), 1);
    }

    #[test]
    fn every_crossing_is_passed_twice() {
        let d = PlatDiagram::new(&[4, 3, 5]);
        assert_eq!(d.crossings().len(), 12);
        assert_eq!(d.edges(), 24);
        let mut seen = vec![0; d.edges()];
        for c in d.crossings() {
            for e in [c.over.0, c.over.1, c.under.0, c.under.1] {
                seen[e] += 1;
            }
        }
        assert!(seen.iter().all(|&k| k == 2));
    }
}
