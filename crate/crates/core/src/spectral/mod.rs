//! Spectral radius of small adjacency matrices.
//!
//! The floating path is power iteration on `A + I` with Collatz–Wielandt
//! bounds: for a positive vector `x` and an irreducible nonnegative matrix
//! `M`, `min_i (Mx)_i / x_i <= rho(M) <= max_i (Mx)_i / x_i`. The shift by `I`
//! makes the iteration primitive, so bipartite inputs converge too.
//!
//! The exact path ([`exact`]) works on the integer characteristic polynomial
//! and is used to settle comparisons the floating bounds cannot separate.

pub mod exact;
pub mod poly;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, SmallGraph};

pub use exact::{charpoly, exact_compare, largest_root_interval, ExactComparison};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;
/// Inflation applied to both bounds before any certified comparison.
pub const ROUNDING_SLACK: f64 = 1e-12;

/// Interval `[lower, upper]` around the Perron root, with the Perron vector
/// scaled so its largest entry is exactly 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralEnclosure {
    pub lower: f64,
    pub upper: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
}

impl SpectralEnclosure {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn certified_lower(&self) -> f64 {
        self.lower - ROUNDING_SLACK
    }

    pub fn certified_upper(&self) -> f64 {
        self.upper + ROUNDING_SLACK
    }

    pub fn contains(&self, x: f64, slack: f64) -> bool {
        self.lower - slack <= x && x <= self.upper + slack
    }
}

pub fn perron_enclosure(g: &SmallGraph, tol: f64, max_iter: usize) -> Result<SpectralEnclosure> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = g.adjacency();
    collatz_wielandt(g.order(), tol, max_iter, |v, x| Bits(adj[v]).map(|w| x[w]).sum())
}

/// [`perron_enclosure`] for graphs given as neighbor lists, with no limit on the order.
pub fn perron_enclosure_lists(neighbors: &[Vec<usize>], tol: f64, max_iter: usize) -> Result<SpectralEnclosure> {
    let n = neighbors.len();
    if n == 0 {
        return Err(Error::InvalidAdjacency(0));
    }
    for (v, list) in neighbors.iter().enumerate() {
        if list.iter().any(|&w| w >= n || w == v || !neighbors[w].contains(&v)) {
            return Err(Error::InvalidAdjacency(v));
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &neighbors[v] {
            if !std::mem::replace(&mut seen[w], true) {
                stack.push(w);
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::Disconnected);
    }
    collatz_wielandt(n, tol, max_iter, |v, x| neighbors[v].iter().map(|&w| x[w]).sum())
}

fn collatz_wielandt<F>(n: usize, tol: f64, max_iter: usize, neighbor_sum: F) -> Result<SpectralEnclosure>
where
    F: Fn(usize, &[f64]) -> f64,
{
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut best: Option<SpectralEnclosure> = None;

    for it in 1..=max_iter {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut top = 0.0f64;
        for v in 0..n {
            let s = x[v] + neighbor_sum(v, &x);
            y[v] = s;
            let q = s / x[v];
            lo = lo.min(q);
            hi = hi.max(q);
            top = top.max(s);
        }
        let (lower, upper) = (lo - 1.0, hi - 1.0);
        if upper - lower <= tol {
            return Ok(SpectralEnclosure {
                lower,
                upper,
                vector: x,
                iterations: it,
            });
        }
        if best.as_ref().is_none_or(|b| upper - lower < b.width()) {
            best = Some(SpectralEnclosure {
                lower,
                upper,
                vector: x.clone(),
                iterations: it,
            });
        }
        for v in 0..n {
            x[v] = y[v] / top;
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        best: Box::new(best.expect("at least one iteration")),
    })
}

/// [`perron_enclosure`] with the default tolerance and iteration cap.
pub fn spectral_radius(g: &SmallGraph) -> Result<SpectralEnclosure> {
    perron_enclosure(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// Outcome of [`compare_radii`]; `Equal` is a proven tie.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadiusComparison {
    pub ordering: Ordering,
    /// True when the floating enclosures could not separate the two radii.
    pub escalated: bool,
}

/// Compares `λ(g1)` with `λ(g2)`: enclosures first, exact arithmetic when they overlap.
pub fn compare_radii(g1: &SmallGraph, g2: &SmallGraph, margin: f64) -> Result<RadiusComparison> {
    if !(margin > 0.0 && margin.is_finite()) {
        return Err(Error::InvalidTolerance(margin));
    }
    let tol = margin / 4.0;
    let e1 = perron_enclosure(g1, tol, DEFAULT_MAX_ITER)?;
    let e2 = perron_enclosure(g2, tol, DEFAULT_MAX_ITER)?;
    compare_enclosed(g1, &e1, g2, &e2, margin)
}

/// Same as [`compare_radii`] with enclosures the caller already holds.
pub fn compare_enclosed(
    g1: &SmallGraph,
    e1: &SpectralEnclosure,
    g2: &SmallGraph,
    e2: &SpectralEnclosure,
    margin: f64,
) -> Result<RadiusComparison> {
    if e1.certified_upper() + margin <= e2.certified_lower() {
        return Ok(RadiusComparison {
            ordering: Ordering::Less,
            escalated: false,
        });
    }
    if e2.certified_upper() + margin <= e1.certified_lower() {
        return Ok(RadiusComparison {
            ordering: Ordering::Greater,
            escalated: false,
        });
    }
    let exact = exact_compare(g1, g2)?;
    Ok(RadiusComparison {
        ordering: exact.ordering,
        escalated: true,
    })
}
