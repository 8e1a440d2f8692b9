//! Closed-form spectral bounds for planar and outerplanar graphs, and the sign
//! checks used to rule out large exceptions to the fan being extremal.

use crate::error::{Error, Result};

fn require(what: &'static str, n: usize, min: usize) -> Result<f64> {
    if n < min {
        return Err(Error::OrderOutOfRange {
            what,
            order: n,
            min,
            max: usize::MAX,
        });
    }
    Ok(n as f64)
}

/// Upper bound `3/2 + sqrt(n - 7/4)` on the spectral radius of a connected outerplanar graph.
pub fn shu_hong(n: usize) -> Result<f64> {
    let n = require("shu_hong", n, 3)?;
    Ok(1.5 + (n - 1.75).sqrt())
}

/// Lower bound `sqrt(n) + 1 - 1/(n - sqrt(n))` on the maximum spectral radius
/// over outerplanar graphs of order `n`, obtained from the wheel minus one rim edge.
pub fn claim1_lower(n: usize) -> Result<f64> {
    let n = require("claim1_lower", n, 2)?;
    let r = n.sqrt();
    Ok(r + 1.0 - 1.0 / (n - r))
}

/// `1 - 5 / claim1_lower(n)`: positive exactly when the degree of the
/// top Perron vertex is forced above `n - 1`.
pub fn inequality4_coefficient(n: usize) -> Result<f64> {
    Ok(1.0 - 5.0 / claim1_lower(n)?)
}

pub fn claim5_threshold_value() -> f64 {
    2.0 + 7f64.sqrt()
}

/// Whether the lower bound already exceeds `2 + sqrt(7)`, the root of `λ^2 - 4λ - 3`.
pub fn claim5_threshold(n: usize) -> Result<bool> {
    Ok(claim1_lower(n)? > claim5_threshold_value())
}

/// Historical upper bounds on the spectral radius of planar graphs of order `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarBounds {
    /// `sqrt(5n - 11)`
    pub hong_1988: f64,
    /// `4 + sqrt(3n - 9)`
    pub cao_vince_1993: f64,
    /// `2 sqrt(2) + sqrt(3n - 15/2)`
    pub hong_1995: f64,
    /// `2 + sqrt(2n - 6)`
    pub ellingham_zha_2000: f64,
}

impl PlanarBounds {
    pub const NAMES: [&'static str; 4] = ["hong_1988", "cao_vince_1993", "hong_1995", "ellingham_zha_2000"];

    /// `(name, value)` pairs in publication order.
    pub fn entries(&self) -> [(&'static str, f64); 4] {
        [
            (Self::NAMES[0], self.hong_1988),
            (Self::NAMES[1], self.cao_vince_1993),
            (Self::NAMES[2], self.hong_1995),
            (Self::NAMES[3], self.ellingham_zha_2000),
        ]
    }

    pub fn min(&self) -> f64 {
        self.entries().iter().map(|e| e.1).fold(f64::INFINITY, f64::min)
    }
}

pub fn planar_bound_catalog(n: usize) -> Result<PlanarBounds> {
    let n = require("planar_bound_catalog", n, 3)?;
    Ok(PlanarBounds {
        hong_1988: (5.0 * n - 11.0).sqrt(),
        cao_vince_1993: 4.0 + (3.0 * n - 9.0).sqrt(),
        hong_1995: 2.0 * 2f64.sqrt() + (3.0 * n - 7.5).sqrt(),
        ellingham_zha_2000: 2.0 + (2.0 * n - 6.0).sqrt(),
    })
}

/// One row of the bound table printed by the command line tool.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    pub shu_hong: f64,
    pub claim1_lower: f64,
    pub planar: PlanarBounds,
    pub inequality4_coefficient: f64,
    pub claim5_threshold: bool,
}

pub fn bound_row(n: usize) -> Result<BoundRow> {
    Ok(BoundRow {
        n,
        shu_hong: shu_hong(n)?,
        claim1_lower: claim1_lower(n)?,
        planar: planar_bound_catalog(n)?,
        inequality4_coefficient: inequality4_coefficient(n)?,
        claim5_threshold: claim5_threshold(n)?,
    })
}
