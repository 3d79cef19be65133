use thiserror::Error;

use crate::projection::PlanePair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("exact decomposition refused: {edges} edges exceeds the budget of {budget}")]
    TooLargeForExact { edges: usize, budget: usize },
    #[error("plane {plane} is not valid in dimension {dimension}")]
    BadPlane { plane: PlanePair, dimension: usize },
    #[error("input projection does not verify")]
    NotVerified,
    #[error("tied coordinates: {0}")]
    TiedCoordinates(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("not a caterpillar: {0}")]
    NotACaterpillar(String),
    #[error("malformed forest decomposition: {0}")]
    BadDecomposition(String),
    #[error("heuristic failed after {attempts} attempts")]
    FailedHeuristic { attempts: usize },
    #[error("planar part does not verify as a one-plane drawing")]
    BadPlanarInput,
    #[error("layer {0} is not a planar drawing on the given positions")]
    BadLayer(usize),
    #[error("rotation system is not a planar embedding: {0}")]
    NotPlanar(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
