//! Triangulations of the convex n-gon and their classes under the dihedral group.
//!
//! A maximal outerplanar graph on `n >= 3` vertices is a triangulated polygon
//! whose hull is the unique outer Hamilton cycle, so isomorphism classes of
//! such graphs are exactly dihedral orbits of polygon triangulations.
//!
//! Enumeration is a depth-first walk over the apex of each pending edge,
//! starting from the root edge `(0, n-1)`. The walk can be split by root apex
//! for parallel runs; every aggregate below is reduced in a deterministic order.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, SmallGraph, MAX_ORDER};

/// Largest polygon accepted by the full enumerations.
pub const MAX_ENUMERATION: usize = 20;
/// Largest polygon accepted by the Burnside count.
pub const MAX_BURNSIDE: usize = 18;

pub type Diagonal = (u8, u8);

/// A triangulated convex polygon: `n` hull positions plus `n - 3` non-crossing diagonals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
}

/// Lexicographically least encoding over all `2n` rotations and reflections.
///
/// Layout: `[n, a1, b1, a2, b2, ...]` with each diagonal written `a < b` and
/// the diagonal list sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The triangulation whose own encoding is this code.
    pub fn representative(&self) -> Triangulation {
        let n = self.order();
        let diagonals = self.0[1..].chunks_exact(2).map(|p| (p[0], p[1])).collect();
        Triangulation { n, diagonals }
    }
}

impl Borrow<[u8]> for CanonicalCode {
    fn borrow(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.representative(), f)
    }
}

impl Triangulation {
    /// Validates and normalizes a diagonal list (pairs may come in either orientation).
    pub fn new<I>(n: usize, diagonals: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let bad = |msg: String| Error::InvalidTriangulation(msg);
        if !(3..=MAX_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange {
                what: "triangulation",
                order: n,
                min: 3,
                max: MAX_ORDER,
            });
        }
        let mut diags = Vec::new();
        for (a, b) in diagonals {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if j >= n {
                return Err(bad(format!("position {j} outside the {n}-gon")));
            }
            if j - i < 2 || (i == 0 && j == n - 1) {
                return Err(bad(format!("{i}-{j} is a hull edge or a loop")));
            }
            diags.push((i as u8, j as u8));
        }
        diags.sort_unstable();
        if diags.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad("repeated diagonal".into()));
        }
        if diags.len() != n - 3 {
            return Err(bad(format!("{} diagonals, expected {}", diags.len(), n - 3)));
        }
        for (x, &(a, b)) in diags.iter().enumerate() {
            for &(c, d) in &diags[x + 1..] {
                if crosses((a, b), (c, d)) {
                    return Err(bad(format!("{a}-{b} crosses {c}-{d}")));
                }
            }
        }
        Ok(Self { n, diagonals: diags })
    }

    /// All diagonals from hull position 0; the triangulation of `K1 ∨ P_{n-1}`.
    pub fn fan(n: usize) -> Result<Self> {
        Self::new(n, (2..n.saturating_sub(1)).map(|j| (0, j)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// Hull edges `{i, i+1 mod n}` plus the diagonals.
    pub fn to_graph(&self) -> SmallGraph {
        let n = self.n;
        let mut adj = vec![0u64; n];
        let mut link = |a: usize, b: usize| {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        };
        for i in 0..n {
            link(i, (i + 1) % n);
        }
        for &(a, b) in &self.diagonals {
            link(a as usize, b as usize);
        }
        SmallGraph::from_adjacency(adj).expect("triangulation graph is simple")
    }

    pub fn encoding(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 2 * self.diagonals.len());
        out.push(self.n as u8);
        for &(a, b) in &self.diagonals {
            out.extend([a, b]);
        }
        out
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let mut c = Canonicalizer::new(self.n);
        CanonicalCode(c.code(&self.diagonals).to_vec())
    }

    /// True when this triangulation is its class's representative.
    pub fn is_canonical(&self) -> bool {
        self.canonical_code().as_bytes() == self.encoding().as_slice()
    }

    /// Image under dihedral symmetry `s` (see [`dihedral_map`]).
    pub fn transformed(&self, s: usize) -> Self {
        let mut diagonals: Vec<Diagonal> = self.diagonals.iter().map(|&d| dihedral_image(self.n, s, d)).collect();
        diagonals.sort_unstable();
        Self { n: self.n, diagonals }
    }

    pub fn rotated(&self, k: usize) -> Self {
        self.transformed(k % self.n)
    }

    /// Mirror image `p -> n-1-p`.
    pub fn reflected(&self) -> Self {
        self.transformed(self.n + self.n - 1)
    }

    /// Inserts a new hull vertex between positions `i` and `i + 1 (mod n)`.
    ///
    /// The new vertex sits at position `i + 1` of the `(n+1)`-gon, later
    /// positions shift up by one, and the old hull edge becomes a diagonal.
    pub fn extend_by_ear(&self, i: usize) -> Result<Self> {
        let n = self.n;
        if i >= n {
            return Err(Error::PositionOutOfRange { position: i, n });
        }
        if n + 1 > MAX_ORDER {
            return Err(Error::OrderOutOfRange {
                what: "extend_by_ear",
                order: n + 1,
                min: 3,
                max: MAX_ORDER,
            });
        }
        let shift = |p: u8| if (p as usize) > i { p + 1 } else { p };
        let mut diagonals: Vec<Diagonal> = self.diagonals.iter().map(|&(a, b)| (shift(a), shift(b))).collect();
        let old_edge = if i + 1 < n {
            (i as u8, (i + 2) as u8)
        } else {
            (0, (n - 1) as u8)
        };
        diagonals.push(old_edge);
        diagonals.sort_unstable();
        Ok(Self { n: n + 1, diagonals })
    }
}

impl fmt::Display for Triangulation {
    /// Native text form `n:i-j,i-j,...` with sorted diagonals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (k, (a, b)) in self.diagonals.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangulation({self})")
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTriangulation(format!("cannot parse {s:?}"));
        let (n, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let mut diags = Vec::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (a, b) = part.split_once('-').ok_or_else(bad)?;
            diags.push((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
        }
        Self::new(n, diags)
    }
}

#[inline]
fn crosses((a, b): Diagonal, (c, d): Diagonal) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Dihedral symmetry `s` of the n-gon: rotation `p -> p + s` for `s < n`,
/// reflection `p -> (s - n) - p` for `n <= s < 2n`, all mod n.
#[inline]
pub fn dihedral_map(n: usize, s: usize, p: usize) -> usize {
    if s < n {
        (p + s) % n
    } else {
        (s - n + n - p) % n
    }
}

#[inline]
fn dihedral_image(n: usize, s: usize, (a, b): Diagonal) -> Diagonal {
    let x = dihedral_map(n, s, a as usize) as u8;
    let y = dihedral_map(n, s, b as usize) as u8;
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Reusable scratch space for computing canonical codes without allocation.
pub(crate) struct Canonicalizer {
    n: usize,
    image: Vec<Diagonal>,
    best: Vec<Diagonal>,
    bytes: Vec<u8>,
}

impl Canonicalizer {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            image: Vec::with_capacity(n),
            best: Vec::with_capacity(n),
            bytes: Vec::with_capacity(2 * n),
        }
    }

    /// Lex-min image of `diags` over the dihedral group, as code bytes.
    pub(crate) fn code(&mut self, diags: &[Diagonal]) -> &[u8] {
        let n = self.n;
        self.best.clear();
        for s in 0..2 * n {
            self.image.clear();
            self.image.extend(diags.iter().map(|&d| dihedral_image(n, s, d)));
            insertion_sort(&mut self.image);
            if self.best.is_empty() || self.image < self.best {
                std::mem::swap(&mut self.image, &mut self.best);
            }
        }
        self.bytes.clear();
        self.bytes.push(n as u8);
        for &(a, b) in &self.best {
            self.bytes.extend([a, b]);
        }
        &self.bytes
    }
}

fn insertion_sort(v: &mut [Diagonal]) {
    for i in 1..v.len() {
        let x = v[i];
        let mut j = i;
        while j > 0 && v[j - 1] > x {
            v[j] = v[j - 1];
            j -= 1;
        }
        v[j] = x;
    }
}

#[derive(Clone, Copy)]
struct Frame {
    i: u8,
    j: u8,
    apex: u8,
    apex_end: u8,
    pending_len: usize,
    diag_len: usize,
}

/// Streams every triangulation of the labelled n-gon exactly once.
pub struct Triangulations {
    n: usize,
    pending: Vec<(u8, u8)>,
    diags: Vec<Diagonal>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
    root_apexes: (u8, u8),
}

impl Triangulations {
    fn with_root_apexes(n: usize, first: usize, end: usize) -> Self {
        Self {
            n,
            pending: Vec::with_capacity(n),
            diags: Vec::with_capacity(n),
            stack: Vec::with_capacity(n),
            started: false,
            done: first >= end,
            root_apexes: (first as u8, end as u8),
        }
    }

    fn push_choice(&mut self, f: Frame) {
        let (i, j, k) = (f.i, f.j, f.apex);
        if k - i >= 2 {
            self.diags.push((i, k));
        }
        if j - k >= 2 {
            self.diags.push((k, j));
            self.pending.push((k, j));
        }
        if k - i >= 2 {
            self.pending.push((i, k));
        }
    }

    fn descend(&mut self) {
        while let Some((i, j)) = self.pending.pop() {
            let f = Frame {
                i,
                j,
                apex: i + 1,
                apex_end: j,
                pending_len: self.pending.len(),
                diag_len: self.diags.len(),
            };
            self.stack.push(f);
            self.push_choice(f);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(top) = self.stack.last_mut() {
            top.apex += 1;
            let f = *top;
            self.pending.truncate(f.pending_len);
            self.diags.truncate(f.diag_len);
            if f.apex < f.apex_end {
                self.push_choice(f);
                self.descend();
                return true;
            }
            self.stack.pop();
            self.pending.push((f.i, f.j));
        }
        false
    }

    /// Next diagonal set (unsorted), without allocating.
    pub(crate) fn next_raw(&mut self) -> Option<&[Diagonal]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            let (first, end) = self.root_apexes;
            let root = Frame {
                i: 0,
                j: (self.n - 1) as u8,
                apex: first,
                apex_end: end,
                pending_len: 0,
                diag_len: 0,
            };
            self.stack.push(root);
            self.push_choice(root);
            self.descend();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(&self.diags)
    }
}

impl Iterator for Triangulations {
    type Item = Triangulation;

    fn next(&mut self) -> Option<Triangulation> {
        let n = self.n;
        self.next_raw().map(|d| {
            let mut diagonals = d.to_vec();
            diagonals.sort_unstable();
            Triangulation { n, diagonals }
        })
    }
}

fn check_guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if (3..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            what,
            order: n,
            min: 3,
            max,
        })
    }
}

/// Every triangulation of the convex n-gon, ordered by root apex then recursively.
pub fn triangulations(n: usize) -> Result<Triangulations> {
    check_guard("triangulations", n, MAX_ENUMERATION)?;
    Ok(Triangulations::with_root_apexes(n, 1, n - 1))
}

/// Runs `step` over every triangulation, one accumulator per root apex, in parallel.
/// The accumulators come back in apex order.
pub(crate) fn fold_by_root_apex<A, I, S>(n: usize, init: I, step: S) -> Vec<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &[Diagonal]) + Sync,
{
    (1..n - 1)
        .into_par_iter()
        .map(|k| {
            let mut acc = init();
            let mut walk = Triangulations::with_root_apexes(n, k, k + 1);
            while let Some(d) = walk.next_raw() {
                step(&mut acc, d);
            }
            acc
        })
        .collect()
}

/// Class representatives plus the size of the labelled enumeration behind them.
#[derive(Clone, Debug)]
pub struct ClassEnumeration {
    pub n: usize,
    pub raw_count: u64,
    pub classes: Vec<Triangulation>,
}

/// Canonical-code dedup over the full enumeration, keeping only the code set.
pub fn enumerate_classes_counted(n: usize) -> Result<ClassEnumeration> {
    check_guard("enumerate_classes", n, MAX_ENUMERATION)?;
    let parts = fold_by_root_apex(
        n,
        || (Canonicalizer::new(n), HashSet::<CanonicalCode>::new(), 0u64),
        |(canon, seen, count), d| {
            *count += 1;
            let code = canon.code(d);
            if !seen.contains(code) {
                seen.insert(CanonicalCode(code.to_vec()));
            }
        },
    );
    let mut raw_count = 0;
    let mut codes = BTreeSet::new();
    for (_, seen, count) in parts {
        raw_count += count;
        codes.extend(seen);
    }
    Ok(ClassEnumeration {
        n,
        raw_count,
        classes: codes.iter().map(CanonicalCode::representative).collect(),
    })
}

/// One representative per isomorphism class, sorted by canonical code.
pub fn enumerate_classes(n: usize) -> Result<Vec<Triangulation>> {
    enumerate_classes_counted(n).map(|e| e.classes)
}

/// Class representatives of order `n` grown from the triangle by repeated ear insertion.
pub fn classes_by_extension(n: usize) -> Result<Vec<Triangulation>> {
    check_guard("classes_by_extension", n, MAX_ENUMERATION)?;
    let mut reps = vec![Triangulation::new(3, [])?];
    for m in 3..n {
        let next: BTreeSet<CanonicalCode> = reps
            .par_iter()
            .map(|t| {
                let mut canon = Canonicalizer::new(m + 1);
                (0..m)
                    .map(|i| {
                        let grown = t.extend_by_ear(i).expect("position in range");
                        CanonicalCode(canon.code(&grown.diagonals).to_vec())
                    })
                    .collect::<Vec<_>>()
            })
            .flatten()
            .collect();
        reps = next.iter().map(CanonicalCode::representative).collect();
    }
    Ok(reps)
}

/// Number of dihedral orbits, counted as the average number of fixed
/// triangulations over the `2n` symmetries of the polygon.
pub fn count_classes_burnside(n: usize) -> Result<u64> {
    check_guard("count_classes_burnside", n, MAX_BURNSIDE)?;
    let group = 2 * n;
    let parts = fold_by_root_apex(
        n,
        || vec![0u64; group],
        |fixed, d| {
            let mut rows = [0u32; MAX_BURNSIDE];
            for &(a, b) in d {
                rows[a as usize] |= 1 << b;
            }
            for (s, slot) in fixed.iter_mut().enumerate() {
                let invariant = d.iter().all(|&dg| {
                    let (x, y) = dihedral_image(n, s, dg);
                    rows[x as usize] & (1 << y) != 0
                });
                *slot += invariant as u64;
            }
        },
    );
    let sum: u64 = parts.iter().flatten().sum();
    let group = group as u64;
    if !sum.is_multiple_of(group) {
        return Err(Error::BurnsideRemainder { sum, group });
    }
    Ok(sum / group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn catalan(k: usize) -> u64 {
        let mut c = vec![1u64];
        for m in 0..k {
            c.push((0..=m).map(|i| c[i] * c[m - i]).sum());
        }
        c[k]
    }

    fn inner_triangle() -> Triangulation {
        Triangulation::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(triangulations(3).unwrap().count(), 1);
        assert_eq!(triangulations(3).unwrap().next().unwrap().diagonals(), &[]);
        assert_eq!(triangulations(4).unwrap().count(), 2);
        assert_eq!(triangulations(6).unwrap().count(), 14);
        assert_eq!(catalan(4), 14);
    }

    #[test]
    fn enumeration_matches_catalan_and_is_valid() {
        for n in 3..=11 {
            let all: Vec<_> = triangulations(n).unwrap().collect();
            assert_eq!(all.len() as u64, catalan(n - 2), "n = {n}");
            let distinct: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            for t in &all {
                let checked = Triangulation::new(n, t.diagonals().iter().map(|&(a, b)| (a as usize, b as usize)));
                assert_eq!(checked.unwrap(), *t);
            }
        }
    }

    #[test]
    fn root_apex_order() {
        let apexes: Vec<u8> = triangulations(6)
            .unwrap()
            .map(|t| {
                // apex of the root edge (0, 5) is the unique vertex joined to both ends
                let g = t.to_graph();
                (1..5).find(|&k| g.has_edge(0, k) && g.has_edge(k, 5)).unwrap() as u8
            })
            .collect();
        assert!(apexes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn validation() {
        assert!(Triangulation::new(4, [(0, 2)]).is_ok());
        assert!(Triangulation::new(4, [(0, 1)]).is_err());
        assert!(Triangulation::new(4, [(0, 3)]).is_err());
        assert!(Triangulation::new(4, []).is_err());
        assert!(Triangulation::new(6, [(0, 3), (1, 4), (0, 2)]).is_err());
        assert!(Triangulation::new(6, [(0, 2), (0, 2), (0, 4)]).is_err());
        assert!(Triangulation::new(2, []).is_err());
        assert_eq!(
            Triangulation::new(5, [(3, 0), (0, 2)]).unwrap().to_string(),
            "5:0-2,0-3"
        );
    }

    #[test]
    fn graphs_of_hexagons() {
        let fan = Triangulation::fan(6).unwrap();
        assert_eq!(fan.to_graph(), crate::graph::fan_graph(6).unwrap());
        let g = inner_triangle().to_graph();
        assert_eq!(g.degrees(), vec![4, 2, 4, 2, 4, 2]);
        for t in triangulations(6).unwrap() {
            assert_eq!(t.to_graph().edge_count(), 9);
            assert!(t.to_graph().is_connected());
        }
    }

    #[test]
    fn canonical_codes() {
        let fan0 = Triangulation::fan(6).unwrap();
        let fan3 = Triangulation::new(6, [(3, 5), (3, 0), (3, 1)]).unwrap();
        assert_eq!(fan0.canonical_code(), fan3.canonical_code());
        assert_ne!(fan0.canonical_code(), inner_triangle().canonical_code());
        let code = inner_triangle().canonical_code();
        assert!(code.representative().is_canonical());
        assert_eq!(code.as_bytes().len(), 1 + 2 * 3);
    }

    #[test]
    fn class_counts_small() {
        assert_eq!(enumerate_classes(3).unwrap().len(), 1);
        assert_eq!(enumerate_classes(4).unwrap().len(), 1);
        assert_eq!(enumerate_classes(5).unwrap().len(), 1);
        assert_eq!(enumerate_classes(6).unwrap().len(), 3);
        assert_eq!(count_classes_burnside(4).unwrap(), 1);
        assert_eq!(count_classes_burnside(6).unwrap(), 3);
    }

    // Orbit count by brute force: union every triangulation with its 2n images.
    fn orbit_count_brute(n: usize) -> usize {
        let all: Vec<_> = triangulations(n).unwrap().collect();
        let mut seen = HashSet::new();
        let mut orbits = 0;
        for t in all {
            if seen.contains(&t) {
                continue;
            }
            orbits += 1;
            for s in 0..2 * n {
                seen.insert(t.transformed(s));
            }
        }
        orbits
    }

    #[test]
    fn three_counts_agree_small() {
        for n in 3..=12 {
            let dedup = enumerate_classes(n).unwrap();
            let grown = classes_by_extension(n).unwrap();
            assert_eq!(dedup, grown, "n = {n}");
            assert_eq!(dedup.len() as u64, count_classes_burnside(n).unwrap());
            if n <= 10 {
                assert_eq!(dedup.len(), orbit_count_brute(n));
            }
        }
    }

    #[test]
    fn representatives_are_sorted_canonical_and_include_fan() {
        for n in 3..=11 {
            let classes = enumerate_classes(n).unwrap();
            assert!(classes.iter().all(Triangulation::is_canonical));
            let codes: Vec<_> = classes.iter().map(|t| t.canonical_code()).collect();
            assert!(codes.windows(2).all(|w| w[0] < w[1]));
            assert!(codes.contains(&Triangulation::fan(n).unwrap().canonical_code()));
        }
    }

    #[test]
    fn growth_bound() {
        for n in 3..=12 {
            let here = enumerate_classes(n).unwrap().len();
            let next = enumerate_classes(n + 1).unwrap().len();
            assert!(next <= n * here);
        }
    }

    #[test]
    fn ear_extension() {
        let tri = Triangulation::new(3, []).unwrap();
        let quad_code = Triangulation::new(4, [(0, 2)]).unwrap().canonical_code();
        for i in 0..3 {
            let q = tri.extend_by_ear(i).unwrap();
            assert_eq!(q.n(), 4);
            assert_eq!(q.canonical_code(), quad_code);
        }
        assert!(tri.extend_by_ear(3).is_err());
        let t = inner_triangle();
        for i in 0..6 {
            let grown = t.extend_by_ear(i).unwrap();
            let g = grown.to_graph();
            assert_eq!(g.degree(i + 1), 2);
            assert_eq!(g.edge_count(), 2 * 7 - 3);
        }
    }

    #[test]
    fn guards() {
        assert!(triangulations(2).is_err());
        assert!(triangulations(21).is_err());
        assert!(enumerate_classes(21).is_err());
        assert!(count_classes_burnside(19).is_err());
    }

    #[test]
    fn native_roundtrip() {
        let t = inner_triangle();
        assert_eq!(t.to_string(), "6:0-2,0-4,2-4");
        assert_eq!(t.to_string().parse::<Triangulation>().unwrap(), t);
        assert!("6:0-2,x".parse::<Triangulation>().is_err());
    }

    fn arb_triangulation() -> impl Strategy<Value = Triangulation> {
        (3usize..=12, any::<u64>()).prop_map(|(n, seed)| {
            let total = catalan(n - 2);
            let pick = (seed % total) as usize;
            triangulations(n).unwrap().nth(pick).unwrap()
        })
    }

    proptest! {
        #[test]
        fn code_is_dihedral_invariant(t in arb_triangulation(), s in 0usize..24) {
            let s = s % (2 * t.n());
            prop_assert_eq!(t.reflected().canonical_code(), t.canonical_code());
            prop_assert_eq!(t.transformed(s).canonical_code(), t.canonical_code());
        }

        #[test]
        fn ear_vertex_has_degree_two(t in arb_triangulation(), i in 0usize..12) {
            let i = i % t.n();
            let grown = t.extend_by_ear(i).unwrap();
            prop_assert_eq!(grown.to_graph().degree(i + 1), 2);
        }
    }
}
