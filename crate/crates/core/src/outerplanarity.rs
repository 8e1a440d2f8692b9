//! Forbidden-minor tests for outerplanarity and recovery of the outer cycle.
//!
//! A graph is outerplanar iff it has neither a `K4` nor a `K2,3` minor. For a
//! connected host graph, any minor model of a connected pattern can be grown
//! until its branch sets cover every vertex (an unused vertex next to a branch
//! set joins it without breaking connectivity or adjacency). So the search
//! below walks partitions of each component into connected parts, one per
//! pattern vertex, and checks the quotient graph for the pattern.

use crate::error::{Error, Result};
use crate::graph::{bit, complete_bipartite, complete_graph, Bits, SmallGraph};
use crate::triangulation::Triangulation;

/// Largest host graph accepted by the minor search.
pub const MAX_MINOR_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    K4,
    K23,
}

impl Pattern {
    pub fn graph(self) -> SmallGraph {
        match self {
            Pattern::K4 => complete_graph(4).unwrap(),
            Pattern::K23 => complete_bipartite(2, 3).unwrap(),
        }
    }
}

struct MinorSearch<'a> {
    g: &'a SmallGraph,
    pattern: SmallGraph,
    parts_needed: usize,
    min_degree: usize,
    /// Host vertices by decreasing degree; parts are seeded in this order.
    rank: Vec<usize>,
    parts: Vec<u64>,
}

impl MinorSearch<'_> {
    fn seed(&self, remaining: u64) -> usize {
        *self.rank.iter().find(|&&v| remaining & bit(v) != 0).unwrap()
    }

    fn boundary(&self, set: u64) -> u64 {
        Bits(set).fold(0, |acc, v| acc | self.g.neighbors(v)) & !set
    }

    fn component_count(&self, set: u64) -> usize {
        let mut rest = set;
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.g.reach(v, rest);
            count += 1;
        }
        count
    }

    fn quotient_has_pattern(&self) -> bool {
        let h = self.parts.len();
        let mut quotient = vec![0u32; h];
        for (i, row) in quotient.iter_mut().enumerate() {
            let b = self.boundary(self.parts[i]);
            for (j, &part) in self.parts.iter().enumerate() {
                if i != j && b & part != 0 {
                    *row |= 1 << j;
                }
            }
        }
        let mut image = vec![usize::MAX; h];
        self.embed(&quotient, &mut image, 0, 0)
    }

    /// Tries to map pattern vertices `k..` onto unused parts so every pattern edge lands on a quotient edge.
    fn embed(&self, quotient: &[u32], image: &mut [usize], k: usize, used: u32) -> bool {
        let h = image.len();
        if k == h {
            return true;
        }
        for part in 0..h {
            if used & (1 << part) != 0 {
                continue;
            }
            let fits = Bits(self.pattern.neighbors(k))
                .filter(|&w| w < k)
                .all(|w| quotient[part] & (1 << image[w]) != 0);
            if fits {
                image[k] = part;
                if self.embed(quotient, image, k + 1, used | (1 << part)) {
                    return true;
                }
            }
        }
        false
    }

    fn partition(&mut self, remaining: u64) -> bool {
        let left = self.parts_needed - self.parts.len();
        if left == 1 {
            if self.component_count(remaining) != 1 {
                return false;
            }
            self.parts.push(remaining);
            let found = self.quotient_has_pattern();
            self.parts.pop();
            return found;
        }
        let seed = self.seed(remaining);
        self.grow(bit(seed), 0, remaining)
    }

    /// Visits every connected set containing `current` inside `remaining`
    /// that avoids `excluded`, each exactly once.
    fn grow(&mut self, current: u64, excluded: u64, remaining: u64) -> bool {
        let rest = remaining & !current;
        let left = self.parts_needed - self.parts.len() - 1;
        if (rest.count_ones() as usize) < left {
            return false;
        }
        if self.boundary(current).count_ones() as usize >= self.min_degree && self.component_count(rest) <= left {
            self.parts.push(current);
            let found = self.partition(rest);
            self.parts.pop();
            if found {
                return true;
            }
        }
        let candidates = self.boundary(current) & remaining & !excluded;
        let mut seen = excluded;
        for v in Bits(candidates) {
            if self.grow(current | bit(v), seen, remaining) {
                return true;
            }
            seen |= bit(v);
        }
        false
    }
}

/// True iff `pattern` is a minor of `g`, by exhaustive branch-set search.
pub fn has_minor(g: &SmallGraph, pattern: Pattern) -> Result<bool> {
    if g.order() > MAX_MINOR_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "has_minor",
            order: g.order(),
            min: 1,
            max: MAX_MINOR_ORDER,
        });
    }
    let p = pattern.graph();
    let h = p.order();
    let min_degree = p.degrees().into_iter().min().unwrap();
    let mut rank: Vec<usize> = (0..g.order()).collect();
    rank.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = MinorSearch {
        g,
        pattern: p.clone(),
        parts_needed: h,
        min_degree,
        rank,
        parts: Vec::with_capacity(h),
    };
    for comp in g.components() {
        let size = comp.count_ones() as usize;
        let edges: usize = Bits(comp)
            .map(|v| (g.neighbors(v) & comp).count_ones() as usize)
            .sum::<usize>()
            / 2;
        if size < h || edges < p.edge_count() {
            continue;
        }
        if search.partition(comp) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Neither a `K4` nor a `K2,3` minor.
pub fn is_outerplanar(g: &SmallGraph) -> Result<bool> {
    Ok(!has_minor(g, Pattern::K4)? && !has_minor(g, Pattern::K23)?)
}

/// The outer Hamilton cycle of a maximal outerplanar graph, starting at vertex 0
/// and continuing to its smaller hull neighbor.
///
/// Peels degree-2 vertices whose neighbors are adjacent (lowest index first)
/// down to a triangle, then splices them back, each between two consecutive
/// hull vertices.
pub fn outer_hamilton_cycle(g: &SmallGraph, require_maximal: bool) -> Result<Vec<usize>> {
    let n = g.order();
    if n < 3 {
        return Err(Error::OrderOutOfRange {
            what: "outer_hamilton_cycle",
            order: n,
            min: 3,
            max: crate::graph::MAX_ORDER,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if require_maximal && g.edge_count() != 2 * n - 3 {
        return Err(Error::NotMaximalOuterplanar("edge count differs from 2n - 3"));
    }

    let mut alive = g.all_vertices();
    let mut ears = Vec::with_capacity(n - 3);
    while alive.count_ones() > 3 {
        let ear = Bits(alive).find_map(|v| {
            let nb = g.neighbors(v) & alive;
            if nb.count_ones() != 2 {
                return None;
            }
            let a = nb.trailing_zeros() as usize;
            let b = 63 - nb.leading_zeros() as usize;
            g.has_edge(a, b).then_some((v, a, b))
        });
        let Some((v, a, b)) = ear else {
            return Err(Error::NotMaximalOuterplanar(
                "no degree-2 vertex with adjacent neighbors",
            ));
        };
        alive &= !bit(v);
        ears.push((v, a, b));
    }
    let mut cycle: Vec<usize> = Bits(alive).collect();
    let [x, y, z] = cycle[..] else { unreachable!() };
    if !(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)) {
        return Err(Error::NotMaximalOuterplanar("peeling did not end at a triangle"));
    }
    for &(v, a, b) in ears.iter().rev() {
        let len = cycle.len();
        let pa = cycle.iter().position(|&w| w == a).unwrap();
        let pb = cycle.iter().position(|&w| w == b).unwrap();
        if (pa + 1) % len == pb {
            cycle.insert(pa + 1, v);
        } else if (pb + 1) % len == pa {
            cycle.insert(pb + 1, v);
        } else {
            return Err(Error::NotMaximalOuterplanar(
                "ear neighbors are not consecutive on the hull",
            ));
        }
    }

    let start = cycle.iter().position(|&w| w == 0).unwrap();
    cycle.rotate_left(start);
    if cycle[n - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    Ok(cycle)
}

/// Reads `g` as a triangulated polygon whose hull is its outer Hamilton cycle.
pub fn recover_triangulation(g: &SmallGraph) -> Result<Triangulation> {
    let cycle = outer_hamilton_cycle(g, true)?;
    let n = cycle.len();
    let mut position = vec![0; n];
    for (p, &v) in cycle.iter().enumerate() {
        position[v] = p;
    }
    let diagonals = g.edges().map(|(a, b)| (position[a], position[b])).filter(|&(p, q)| {
        let d = p.abs_diff(q);
        d != 1 && d != n - 1
    });
    Triangulation::new(n, diagonals)
}
