//! Error type shared by the grid, planner, and map-generation modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("cell ({x}, {y}) is out of bounds for a {width}x{height} map")]
    OutOfBounds {
        x: usize,
        y: usize,
        width: usize,
        height: usize,
    },
    #[error("map dimensions {width}x{height} are degenerate (minimum {min}x{min})")]
    DegenerateDims {
        width: usize,
        height: usize,
        min: usize,
    },
    #[error("grid payload holds {got} cells, expected {width}x{height} = {expected}")]
    CellCountMismatch {
        got: usize,
        width: usize,
        height: usize,
        expected: usize,
    },
    #[error("endpoint ({x}, {y}) is an obstacle")]
    ObstacleEndpoint { x: usize, y: usize },
    #[error("map has fewer than two free cells")]
    TooFewFreeCells,
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("path cells ({ax}, {ay}) and ({bx}, {by}) are not Moore-adjacent")]
    NonAdjacentStep {
        ax: usize,
        ay: usize,
        bx: usize,
        by: usize,
    },
    #[error("path crosses obstacle cell ({x}, {y})")]
    PathOnObstacle { x: usize, y: usize },
    #[error("path cuts the corner between ({ax}, {ay}) and ({bx}, {by})")]
    CornerCut {
        ax: usize,
        ay: usize,
        bx: usize,
        by: usize,
    },
    #[error("path cost {stored} disagrees with step sum {recomputed}")]
    CostMismatch { stored: f64, recomputed: f64 },
    #[error("map I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("map parse: {0}")]
    Parse(String),
}
