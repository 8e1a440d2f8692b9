//! Small undirected graphs stored as one 64-bit neighbor mask per vertex.
//!
//! Everything in this crate works on graphs with at most 64 vertices, so a
//! row of the adjacency matrix fits in a machine word. Values are immutable
//! once built; the only way to get a [`SmallGraph`] is through a validating
//! constructor.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Simple undirected graph on `order` vertices labelled `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    order: usize,
    adj: Vec<u64>,
}

impl SmallGraph {
    /// Graph with no edges.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "graph",
                order,
                min: 1,
                max: MAX_ORDER,
            });
        }
        Ok(Self {
            order,
            adj: vec![0; order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order)?;
        for (a, b) in edges {
            if a >= order || b >= order || a == b {
                return Err(Error::InvalidEdge { a, b, order });
            }
            g.adj[a] |= bit(b);
            g.adj[b] |= bit(a);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let order = adj.len();
        let g = Self { order, adj };
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "graph",
                order,
                min: 1,
                max: MAX_ORDER,
            });
        }
        let mask = low_mask(order);
        for v in 0..order {
            let row = g.adj[v];
            if row & !mask != 0 || row & bit(v) != 0 {
                return Err(Error::InvalidAdjacency(v));
            }
            for w in Bits(row) {
                if g.adj[w] & bit(v) == 0 {
                    return Err(Error::InvalidAdjacency(v));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & bit(b) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, ordered by `a` then `b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |a| Bits(self.adj[a] & !low_mask(a + 1)).map(move |b| (a, b)))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn all_vertices(&self) -> u64 {
        low_mask(self.order)
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.all_vertices()) == self.all_vertices()
    }

    /// Vertex sets of the connected components, each as a mask, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        components_within(self, self.all_vertices())
    }

    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        if a >= self.order || b >= self.order || a == b {
            return Err(Error::InvalidEdge {
                a,
                b,
                order: self.order,
            });
        }
        let mut g = self.clone();
        g.adj[a] |= bit(b);
        g.adj[b] |= bit(a);
        Ok(g)
    }

    pub fn without_edge(&self, a: usize, b: usize) -> Result<Self> {
        if a >= self.order || b >= self.order || a == b {
            return Err(Error::InvalidEdge {
                a,
                b,
                order: self.order,
            });
        }
        let mut g = self.clone();
        g.adj[a] &= !bit(b);
        g.adj[b] &= !bit(a);
        Ok(g)
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let n = self.order;
        let mut inverse = vec![usize::MAX; n];
        if order.len() != n {
            return Err(Error::InvalidPermutation);
        }
        for (new, &old) in order.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(Error::InvalidPermutation);
            }
            inverse[old] = new;
        }
        let edges = self.edges().map(|(a, b)| (inverse[a], inverse[b]));
        Self::from_edges(n, edges)
    }
}

pub(crate) fn components_within(g: &SmallGraph, within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = within;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = g.reach(v, rest);
        out.push(comp);
        rest &= !comp;
    }
    out
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}; ", self.order)?;
        let mut first = true;
        for (a, b) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{a}-{b}")?;
            first = false;
        }
        write!(f, ")")
    }
}

/// `K1 ∨ P_{n-1}`: vertex 0 joined to every vertex of the path `1, 2, ..., n-1`.
pub fn fan_graph(n: usize) -> Result<SmallGraph> {
    if !(2..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "fan_graph",
            order: n,
            min: 2,
            max: MAX_ORDER,
        });
    }
    let spokes = (1..n).map(|i| (0, i));
    let path = (1..n.saturating_sub(1)).map(|i| (i, i + 1));
    SmallGraph::from_edges(n, spokes.chain(path))
}

/// The fan of order `n` as neighbor lists, for orders beyond [`MAX_ORDER`].
/// Vertex labels match [`fan_graph`].
pub fn fan_neighbor_lists(n: usize) -> Result<Vec<Vec<usize>>> {
    if n < 2 {
        return Err(Error::OrderOutOfRange {
            what: "fan_neighbor_lists",
            order: n,
            min: 2,
            max: usize::MAX,
        });
    }
    let mut lists = vec![Vec::new(); n];
    lists[0] = (1..n).collect();
    for (v, list) in lists.iter_mut().enumerate().skip(1) {
        list.push(0);
        if v > 1 {
            list.push(v - 1);
        }
        if v + 1 < n {
            list.push(v + 1);
        }
    }
    Ok(lists)
}

/// `K1 ∨ C_{n-1}`: hub 0 joined to the cycle `1, 2, ..., n-1, 1`.
pub fn wheel_graph(n: usize) -> Result<SmallGraph> {
    if !(4..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "wheel_graph",
            order: n,
            min: 4,
            max: MAX_ORDER,
        });
    }
    let spokes = (1..n).map(|i| (0, i));
    let rim = (1..n).map(|i| (i, if i + 1 == n { 1 } else { i + 1 }));
    SmallGraph::from_edges(n, spokes.chain(rim))
}

pub fn complete_graph(n: usize) -> Result<SmallGraph> {
    SmallGraph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// `K_{a,b}` with the `a`-side on vertices `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<SmallGraph> {
    SmallGraph::from_edges(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handshake_holds(g: &SmallGraph) -> bool {
        g.degrees().iter().sum::<usize>() == 2 * g.edge_count()
    }

    #[test]
    fn fan_small_cases() {
        let k2 = fan_graph(2).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.has_edge(0, 1));
        let f4 = fan_graph(4).unwrap();
        assert_eq!(f4.edge_count(), 5);
        for n in 2..=64 {
            let f = fan_graph(n).unwrap();
            assert_eq!(f.edge_count(), 2 * n - 3);
            assert!(f.is_connected());
            assert!(handshake_holds(&f));
        }
    }

    #[test]
    fn wheel_small_cases() {
        let k4 = wheel_graph(4).unwrap();
        assert_eq!(k4, complete_graph(4).unwrap());
        for n in 4..=64 {
            let w = wheel_graph(n).unwrap();
            assert_eq!(w.edge_count(), 2 * n - 2);
            assert!(w.is_connected());
            assert!(handshake_holds(&w));
            assert_eq!(w.degree(0), n - 1);
        }
    }

    #[test]
    fn fan_is_wheel_minus_rim_edge() {
        for n in 5..=30 {
            let cut = wheel_graph(n).unwrap().without_edge(1, n - 1).unwrap();
            assert_eq!(cut, fan_graph(n).unwrap());
        }
    }

    #[test]
    fn order_guards() {
        assert!(fan_graph(1).is_err());
        assert!(fan_graph(65).is_err());
        assert!(wheel_graph(3).is_err());
        assert!(wheel_graph(65).is_err());
        assert!(SmallGraph::from_edges(3, [(0, 0)]).is_err());
        assert!(SmallGraph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn adjacency_validation() {
        assert!(SmallGraph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(SmallGraph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(SmallGraph::from_adjacency(vec![0b01, 0b00]).is_err());
        assert!(SmallGraph::from_adjacency(vec![0b100, 0b000]).is_err());
    }

    #[test]
    fn components_and_permutation() {
        let g = SmallGraph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b01100, 0b10000]);
        assert!(!g.is_connected());
        let p = g.permuted(&[4, 3, 2, 1, 0]).unwrap();
        assert!(p.has_edge(3, 4) && p.has_edge(1, 2));
        assert!(g.permuted(&[0, 0, 1, 2, 3]).is_err());
    }
}
