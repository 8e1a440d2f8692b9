use thiserror::Error;

use crate::spectral::SpectralEnclosure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: order {order} outside {min}..={max}")]
    OrderOutOfRange {
        what: &'static str,
        order: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid edge {a}-{b} for a graph of order {order}")]
    InvalidEdge { a: usize, b: usize, order: usize },

    #[error("adjacency row {0} is not symmetric, loop-free and in range")]
    InvalidAdjacency(usize),

    #[error("not a permutation of the vertex set")]
    InvalidPermutation,

    #[error("malformed graph6: {0}")]
    Graph6(&'static str),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("hull position {position} out of range for a {n}-gon")]
    PositionOutOfRange { position: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("no convergence after {iterations} iterations (width {:e})", .best.upper - .best.lower)]
    NoConvergence {
        iterations: usize,
        best: Box<SpectralEnclosure>,
    },

    #[error("not maximal outerplanar: {0}")]
    NotMaximalOuterplanar(&'static str),

    #[error("Burnside sum {sum} not divisible by group order {group}")]
    BurnsideRemainder { sum: u64, group: u64 },

    #[error("unresolved tie between distinct classes at n = {0}")]
    UnresolvedTie(usize),

    #[error("invalid range {0}")]
    InvalidRange(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
