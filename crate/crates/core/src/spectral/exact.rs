//! Exact spectral-radius comparison through the integer characteristic polynomial.
//!
//! The Perron root of a connected graph is the largest real root of
//! `det(xI - A)` and is simple. Each root is isolated in a dyadic interval
//! `(lo, hi]` that Sturm counting proves holds no other root and nothing
//! above it; comparisons then shrink the intervals until they separate, or
//! prove equality through a common factor with a root in the overlap.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::poly::{Dyadic, IntPoly, SturmChain};
use super::{perron_enclosure, SpectralEnclosure, DEFAULT_MAX_ITER};
use crate::error::{Error, Result};
use crate::graph::{Bits, SmallGraph};

/// Orders above this are refused by the exact routines.
pub const MAX_EXACT_ORDER: usize = 20;

const MAX_REFINEMENTS: usize = 4000;

fn check_order(g: &SmallGraph, what: &'static str) -> Result<()> {
    if g.order() > MAX_EXACT_ORDER {
        return Err(Error::OrderOutOfRange {
            what,
            order: g.order(),
            min: 1,
            max: MAX_EXACT_ORDER,
        });
    }
    Ok(())
}

/// `det(xI - A)` as exact integer coefficients, constant term first; monic of degree `order`.
///
/// Berkowitz's division-free recurrence: bordering the leading principal
/// submatrix one row and column at a time multiplies the coefficient vector
/// by a lower-triangular Toeplitz matrix built from `R A^k C`.
pub fn charpoly(g: &SmallGraph) -> Result<IntPoly> {
    check_order(g, "charpoly")?;
    let n = g.order();
    // highest degree first while building
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        let row = g.neighbors(k) & ((1u64 << k) - 1);
        let mut col: Vec<BigInt> = (0..k).map(|i| BigInt::from(g.has_edge(i, k) as u8)).collect();
        // the diagonal is zero, so the first two Toeplitz entries are 1 and 0
        let mut toeplitz = vec![BigInt::one(), BigInt::zero()];
        for _ in 0..k {
            let dot: BigInt = Bits(row).map(|i| &col[i]).sum();
            toeplitz.push(-dot);
            col = (0..k)
                .map(|i| Bits(g.neighbors(i) & ((1u64 << k) - 1)).map(|j| &col[j]).sum())
                .collect();
        }
        let next: Vec<BigInt> = (0..k + 2)
            .map(|i| (0..=i.min(k)).map(|j| &toeplitz[i - j] * &p[j]).sum())
            .collect();
        p = next;
    }
    p.reverse();
    Ok(IntPoly::new(p))
}

/// Dyadic interval `(lo, hi]` holding exactly one distinct root of its
/// polynomial and no roots above `hi`. Neither endpoint is a root.
#[derive(Clone, Debug)]
pub struct RootInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl RootInterval {
    pub fn to_f64(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }
}

/// A point strictly inside `(a, b)` that is not a root of `p`.
fn split_point(p: &IntPoly, a: &Dyadic, b: &Dyadic) -> Dyadic {
    let mut m = a.midpoint(b);
    while p.sign_at(&m) == Sign::NoSign {
        m = a.midpoint(&m);
    }
    m
}

fn nudge_off_root(p: &IntPoly, x: f64, step: f64) -> Dyadic {
    let mut x = x;
    let mut d = Dyadic::from_f64(x);
    while p.sign_at(&d) == Sign::NoSign {
        x += step;
        d = Dyadic::from_f64(x);
    }
    d
}

/// Isolates the largest real root, starting from `hint` when it is usable.
fn isolate_largest(chain: &SturmChain, hint: Option<(f64, f64)>) -> Option<RootInterval> {
    let p = chain.base();
    let from_hint = hint.and_then(|(lo, hi)| {
        if !(lo.is_finite() && hi.is_finite()) {
            return None;
        }
        let pad = 1e-9 * (1.0 + lo.abs().max(hi.abs()));
        let lo = nudge_off_root(p, lo - pad, -pad);
        let hi = nudge_off_root(p, hi + pad, pad);
        (chain.count_above(&hi) == 0 && chain.count_between(&lo, &hi) >= 1).then_some((lo, hi))
    });
    let (mut lo, mut hi) = match from_hint {
        Some(bounds) => bounds,
        None => {
            let b = p.root_bound();
            let lo = Dyadic::integer(-b.clone());
            let hi = Dyadic::integer(b);
            if chain.count_between(&lo, &hi) == 0 {
                return None;
            }
            (lo, hi)
        }
    };
    while chain.count_between(&lo, &hi) > 1 {
        let m = split_point(p, &lo, &hi);
        if chain.count_between(&m, &hi) >= 1 {
            lo = m;
        } else {
            hi = m;
        }
    }
    Some(RootInterval { lo, hi })
}

fn halve(chain: &SturmChain, iv: &mut RootInterval) {
    let m = split_point(chain.base(), &iv.lo, &iv.hi);
    if chain.count_between(&iv.lo, &m) >= 1 {
        iv.hi = m;
    } else {
        iv.lo = m;
    }
}

/// Isolating interval of the largest real root of `p`, refined to width `<= 2^-bits`.
///
/// Uses no floating-point information; `None` if `p` has no real root.
pub fn largest_root_interval(p: &IntPoly, bits: u32) -> Option<RootInterval> {
    let chain = SturmChain::new(p);
    let mut iv = isolate_largest(&chain, None)?;
    let target = Dyadic {
        num: BigInt::one(),
        exp: bits,
    };
    while iv.width() > target {
        halve(&chain, &mut iv);
    }
    Some(iv)
}

#[derive(Clone, Debug)]
pub struct ExactComparison {
    /// `λ(g1)` compared with `λ(g2)`.
    pub ordering: Ordering,
    /// Distance between the final isolating intervals when they are disjoint.
    pub gap: Option<f64>,
    pub first: RootInterval,
    pub second: RootInterval,
}

fn enclosure_hint(g: &SmallGraph) -> Option<(f64, f64)> {
    let e: Option<SpectralEnclosure> = match perron_enclosure(g, 1e-10, DEFAULT_MAX_ITER) {
        Ok(e) => Some(e),
        Err(Error::NoConvergence { best, .. }) => Some(*best),
        Err(_) => None,
    };
    e.map(|e| (e.lower, e.upper))
}

/// Exact comparison of the spectral radii of two connected graphs of order `<= 20`.
pub fn exact_compare(g1: &SmallGraph, g2: &SmallGraph) -> Result<ExactComparison> {
    for g in [g1, g2] {
        check_order(g, "exact_compare")?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
    }
    let p1 = charpoly(g1)?;
    let p2 = charpoly(g2)?;
    let c1 = SturmChain::new(&p1);
    let c2 = SturmChain::new(&p2);
    let mut i1 = isolate_largest(&c1, enclosure_hint(g1)).expect("adjacency spectra are real");
    let mut i2 = isolate_largest(&c2, enclosure_hint(g2)).expect("adjacency spectra are real");

    let overlap = |a: &RootInterval, b: &RootInterval| a.lo < b.hi && b.lo < a.hi;
    if overlap(&i1, &i2) {
        let common = p1.gcd(&p2);
        if common.degree().unwrap_or(0) >= 1 {
            let lo = (&i1.lo).max(&i2.lo).clone();
            let hi = (&i1.hi).min(&i2.hi).clone();
            // endpoints are non-roots of p1 or p2, hence of their common factor
            if SturmChain::new(&common).count_between(&lo, &hi) >= 1 {
                return Ok(ExactComparison {
                    ordering: Ordering::Equal,
                    gap: None,
                    first: i1,
                    second: i2,
                });
            }
        }
        let mut steps = 0;
        while overlap(&i1, &i2) {
            if steps == MAX_REFINEMENTS {
                return Err(Error::UnresolvedTie(g1.order()));
            }
            halve(&c1, &mut i1);
            halve(&c2, &mut i2);
            steps += 1;
        }
    }
    let (ordering, gap) = if i1.hi <= i2.lo {
        (Ordering::Less, i2.lo.sub(&i1.hi))
    } else {
        (Ordering::Greater, i1.lo.sub(&i2.hi))
    };
    Ok(ExactComparison {
        ordering,
        gap: Some(gap.to_f64()),
        first: i1,
        second: i2,
    })
}
