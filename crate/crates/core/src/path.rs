//! Paths over the grid and the independent validity checker used by all
//! planner tests.

use serde::{Deserialize, Serialize};

use crate::error::GridError;
use crate::grid::{Cell, Direction, GridMap};

pub const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Exact step accounting for a path: `cardinal + diagonal * sqrt(2)`.
///
/// Two step counts describe the same length iff they are equal component-wise
/// (sqrt(2) is irrational), so cost comparisons through this type are exact
/// where iterated float sums would not be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepCount {
    pub cardinal: u32,
    pub diagonal: u32,
}

impl StepCount {
    pub fn add_step(self, dir: Direction) -> StepCount {
        if dir.is_diagonal() {
            StepCount {
                diagonal: self.diagonal + 1,
                ..self
            }
        } else {
            StepCount {
                cardinal: self.cardinal + 1,
                ..self
            }
        }
    }

    pub fn as_cost(self) -> f64 {
        self.cardinal as f64 + self.diagonal as f64 * SQRT_2
    }
}

/// An ordered cell sequence with its length in cell units (cardinal step = 1,
/// diagonal step = sqrt(2)).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Path {
    cells: Vec<Cell>,
    cost: f64,
}

impl Path {
    pub fn empty() -> Self {
        Path {
            cells: Vec::new(),
            cost: 0.0,
        }
    }

    /// Build from a cell sequence, computing the cost from the step types.
    /// Fails on non-adjacent consecutive cells.
    pub fn from_cells(cells: Vec<Cell>) -> Result<Self, GridError> {
        let steps = count_steps(&cells)?;
        Ok(Path {
            cells,
            cost: steps.as_cost(),
        })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn first(&self) -> Option<Cell> {
        self.cells.first().copied()
    }

    pub fn last(&self) -> Option<Cell> {
        self.cells.last().copied()
    }
}

fn count_steps(cells: &[Cell]) -> Result<StepCount, GridError> {
    let mut steps = StepCount::default();
    for pair in cells.windows(2) {
        let dir = Direction::between(pair[0], pair[1]).ok_or(GridError::NonAdjacentStep {
            ax: pair[0].x,
            ay: pair[0].y,
            bx: pair[1].x,
            by: pair[1].y,
        })?;
        steps = steps.add_step(dir);
    }
    Ok(steps)
}

/// Path length in cell units. Empty or single-cell sequences cost 0;
/// non-adjacent consecutive cells are an error.
pub fn path_cost(cells: &[Cell]) -> Result<f64, GridError> {
    Ok(count_steps(cells)?.as_cost())
}

/// Independent path validator: decides validity from (map, path) alone.
///
/// Checks that every cell is in bounds and not an obstacle, that consecutive
/// cells are Moore-adjacent without corner cutting, and that the stored cost
/// matches the per-step sum within 1e-9.
pub fn validate_path(map: &GridMap, path: &Path) -> Result<(), GridError> {
    for &c in path.cells() {
        match map.state(c)? {
            crate::grid::CellState::Obstacle => {
                return Err(GridError::PathOnObstacle { x: c.x, y: c.y })
            }
            _ => {}
        }
    }
    let mut step_sum = 0.0f64;
    for pair in path.cells().windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let dir = Direction::between(a, b).ok_or(GridError::NonAdjacentStep {
            ax: a.x,
            ay: a.y,
            bx: b.x,
            by: b.y,
        })?;
        if !map.can_step(a, dir) {
            return Err(GridError::CornerCut {
                ax: a.x,
                ay: a.y,
                bx: b.x,
                by: b.y,
            });
        }
        step_sum += if dir.is_diagonal() { SQRT_2 } else { 1.0 };
    }
    if (step_sum - path.cost()).abs() > 1e-9 {
        return Err(GridError::CostMismatch {
            stored: path.cost(),
            recomputed: step_sum,
        });
    }
    Ok(())
}
