//! Occupancy grid and Moore-neighbourhood geometry.
//!
//! The grid is stored row-major with the origin at the top-left corner and
//! `y` growing downward, matching image-style map files. Planning code treats
//! a [`GridMap`] as immutable; online map updates clone the map, apply their
//! edits, and swap the new revision in.

use serde::{Deserialize, Serialize};

use crate::error::GridError;

/// State of one grid cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellState {
    Free,
    Obstacle,
    Unknown,
}

impl CellState {
    /// Wire encoding used by the JSON map format: 0=Free, 1=Obstacle, 2=Unknown.
    pub fn to_code(self) -> u8 {
        match self {
            CellState::Free => 0,
            CellState::Obstacle => 1,
            CellState::Unknown => 2,
        }
    }

    pub fn from_code(code: u8) -> Result<Self, GridError> {
        match code {
            0 => Ok(CellState::Free),
            1 => Ok(CellState::Obstacle),
            2 => Ok(CellState::Unknown),
            other => Err(GridError::Parse(format!("invalid cell code {other}"))),
        }
    }
}

/// Grid coordinate: `x` is the column index, `y` the row index.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default,
)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }

    /// Euclidean distance in cell units.
    pub fn euclidean(self, other: Cell) -> f64 {
        let dx = self.x as f64 - other.x as f64;
        let dy = self.y as f64 - other.y as f64;
        (dx * dx + dy * dy).sqrt()
    }

    /// Chebyshev (L-inf) distance; Moore-adjacent cells are at distance 1.
    pub fn chebyshev(self, other: Cell) -> usize {
        self.x.abs_diff(other.x).max(self.y.abs_diff(other.y))
    }

    pub fn offset(self, dx: i32, dy: i32) -> Option<Cell> {
        let x = self.x as i64 + dx as i64;
        let y = self.y as i64 + dy as i64;
        if x < 0 || y < 0 {
            None
        } else {
            Some(Cell::new(x as usize, y as usize))
        }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The 8 Moore moves in canonical order N, NE, E, SE, S, SW, W, NW.
///
/// Offsets follow the y-down convention: N is (0, -1), S is (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    North,
    NorthEast,
    East,
    SouthEast,
    South,
    SouthWest,
    West,
    NorthWest,
}

impl Direction {
    pub const ALL: [Direction; 8] = [
        Direction::North,
        Direction::NorthEast,
        Direction::East,
        Direction::SouthEast,
        Direction::South,
        Direction::SouthWest,
        Direction::West,
        Direction::NorthWest,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Direction> {
        Direction::ALL.get(index).copied()
    }

    /// (dx, dy) offset under the y-down convention.
    pub fn offset(self) -> (i32, i32) {
        match self {
            Direction::North => (0, -1),
            Direction::NorthEast => (1, -1),
            Direction::East => (1, 0),
            Direction::SouthEast => (1, 1),
            Direction::South => (0, 1),
            Direction::SouthWest => (-1, 1),
            Direction::West => (-1, 0),
            Direction::NorthWest => (-1, -1),
        }
    }

    pub fn from_offset(dx: i32, dy: i32) -> Option<Direction> {
        Direction::ALL
            .iter()
            .copied()
            .find(|d| d.offset() == (dx, dy))
    }

    /// Direction of the single Moore step from `a` to `b`, if any.
    pub fn between(a: Cell, b: Cell) -> Option<Direction> {
        let dx = b.x as i64 - a.x as i64;
        let dy = b.y as i64 - a.y as i64;
        if dx.abs() > 1 || dy.abs() > 1 || (dx == 0 && dy == 0) {
            None
        } else {
            Direction::from_offset(dx as i32, dy as i32)
        }
    }

    pub fn is_diagonal(self) -> bool {
        let (dx, dy) = self.offset();
        dx != 0 && dy != 0
    }
}

/// 2D occupancy grid with Free/Obstacle/Unknown cells, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridMap {
    width: usize,
    height: usize,
    cells: Vec<CellState>,
}

impl GridMap {
    /// Uniform map of the given state. Dimensions must be nonzero.
    pub fn filled(width: usize, height: usize, state: CellState) -> Result<Self, GridError> {
        if width == 0 || height == 0 {
            return Err(GridError::DegenerateDims {
                width,
                height,
                min: 1,
            });
        }
        Ok(GridMap {
            width,
            height,
            cells: vec![state; width * height],
        })
    }

    pub fn from_cells(
        width: usize,
        height: usize,
        cells: Vec<CellState>,
    ) -> Result<Self, GridError> {
        if width == 0 || height == 0 {
            return Err(GridError::DegenerateDims {
                width,
                height,
                min: 1,
            });
        }
        if cells.len() != width * height {
            return Err(GridError::CellCountMismatch {
                got: cells.len(),
                width,
                height,
                expected: width * height,
            });
        }
        Ok(GridMap {
            width,
            height,
            cells,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn in_bounds(&self, c: Cell) -> bool {
        c.x < self.width && c.y < self.height
    }

    fn idx(&self, c: Cell) -> usize {
        c.y * self.width + c.x
    }

    /// Cell state, `None` when out of bounds. Never wraps around.
    pub fn get(&self, c: Cell) -> Option<CellState> {
        if self.in_bounds(c) {
            Some(self.cells[self.idx(c)])
        } else {
            None
        }
    }

    /// Checked access that reports out-of-bounds queries as errors.
    pub fn state(&self, c: Cell) -> Result<CellState, GridError> {
        self.get(c).ok_or(GridError::OutOfBounds {
            x: c.x,
            y: c.y,
            width: self.width,
            height: self.height,
        })
    }

    pub fn set(&mut self, c: Cell, state: CellState) {
        assert!(
            self.in_bounds(c),
            "set out of bounds: {c} on {}x{}",
            self.width,
            self.height
        );
        let i = self.idx(c);
        self.cells[i] = state;
    }

    pub fn is_obstacle(&self, c: Cell) -> bool {
        self.get(c) == Some(CellState::Obstacle)
    }

    /// A cell planners may stand on or cross: in bounds and not an obstacle.
    /// Unknown cells count as traversable.
    pub fn is_traversable(&self, c: Cell) -> bool {
        matches!(self.get(c), Some(CellState::Free) | Some(CellState::Unknown))
    }

    /// Row-major iterator over (cell, state).
    pub fn iter(&self) -> impl Iterator<Item = (Cell, CellState)> + '_ {
        let width = self.width;
        self.cells
            .iter()
            .enumerate()
            .map(move |(i, &s)| (Cell::new(i % width, i / width), s))
    }

    pub fn count(&self, state: CellState) -> usize {
        self.cells.iter().filter(|&&s| s == state).count()
    }

    /// Free cells in row-major (y, x) scan order.
    pub fn free_cells(&self) -> Vec<Cell> {
        self.iter()
            .filter(|&(_, s)| s == CellState::Free)
            .map(|(c, _)| c)
            .collect()
    }

    /// Whether the Moore move from `c` along `dir` is legal: the target must
    /// be in bounds and not an obstacle, and a diagonal move is blocked when
    /// both adjacent cardinal cells are obstacles (no corner cutting).
    pub fn can_step(&self, c: Cell, dir: Direction) -> bool {
        let (dx, dy) = dir.offset();
        let target = match c.offset(dx, dy) {
            Some(t) => t,
            None => return false,
        };
        if !self.is_traversable(target) {
            return false;
        }
        if dir.is_diagonal() {
            let side_a = c.offset(dx, 0).map(|s| self.is_obstacle(s)).unwrap_or(true);
            let side_b = c.offset(0, dy).map(|s| self.is_obstacle(s)).unwrap_or(true);
            if side_a && side_b {
                return false;
            }
        }
        true
    }

    /// Legal Moore neighbours of `c` in canonical direction order.
    ///
    /// Returns only in-bounds, non-obstacle targets, with corner cutting
    /// forbidden. Errors when `c` itself is out of bounds.
    pub fn neighbors(&self, c: Cell) -> Result<Vec<(Direction, Cell)>, GridError> {
        self.state(c)?;
        let mut out = Vec::with_capacity(8);
        for dir in Direction::ALL {
            if self.can_step(c, dir) {
                let (dx, dy) = dir.offset();
                out.push((dir, c.offset(dx, dy).expect("checked by can_step")));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_offsets_round_trip() {
        for dir in Direction::ALL {
            let (dx, dy) = dir.offset();
            assert_eq!(Direction::from_offset(dx, dy), Some(dir));
            assert_eq!(Direction::from_index(dir.index()), Some(dir));
        }
        // All eight offsets are distinct.
        let mut offsets: Vec<_> = Direction::ALL.iter().map(|d| d.offset()).collect();
        offsets.sort();
        offsets.dedup();
        assert_eq!(offsets.len(), 8);
    }

    #[test]
    fn canonical_direction_order() {
        assert_eq!(Direction::North.index(), 0);
        assert_eq!(Direction::NorthEast.index(), 1);
        assert_eq!(Direction::East.index(), 2);
        assert_eq!(Direction::SouthEast.index(), 3);
        assert_eq!(Direction::South.index(), 4);
        assert_eq!(Direction::SouthWest.index(), 5);
        assert_eq!(Direction::West.index(), 6);
        assert_eq!(Direction::NorthWest.index(), 7);
        assert_eq!(Direction::North.offset(), (0, -1));
        assert_eq!(Direction::South.offset(), (0, 1));
    }

    #[test]
    fn neighbors_open_center_has_eight() {
        let map = GridMap::filled(3, 3, CellState::Free).unwrap();
        let n = map.neighbors(Cell::new(1, 1)).unwrap();
        assert_eq!(n.len(), 8);
    }

    #[test]
    fn neighbors_corner_has_three() {
        let map = GridMap::filled(3, 3, CellState::Free).unwrap();
        let n = map.neighbors(Cell::new(0, 0)).unwrap();
        let dirs: Vec<Direction> = n.iter().map(|&(d, _)| d).collect();
        assert_eq!(
            dirs,
            vec![Direction::East, Direction::SouthEast, Direction::South]
        );
    }

    #[test]
    fn corner_cut_is_forbidden() {
        // Obstacles at (1,0) and (0,1) seal the diagonal toward (0,0).
        let mut map = GridMap::filled(3, 3, CellState::Free).unwrap();
        map.set(Cell::new(1, 0), CellState::Obstacle);
        map.set(Cell::new(0, 1), CellState::Obstacle);
        let n = map.neighbors(Cell::new(1, 1)).unwrap();

        // Oracle: enumerate all 8 offsets against the rule directly.
        let mut expected = Vec::new();
        for dir in Direction::ALL {
            let (dx, dy) = dir.offset();
            let t = match Cell::new(1, 1).offset(dx, dy) {
                Some(t) => t,
                None => continue,
            };
            if map.get(t) != Some(CellState::Free) {
                continue;
            }
            if dx != 0 && dy != 0 {
                let a = map.is_obstacle(Cell::new((1 + dx) as usize, 1));
                let b = map.is_obstacle(Cell::new(1, (1 + dy) as usize));
                if a && b {
                    continue;
                }
            }
            expected.push(dir);
        }
        let got: Vec<Direction> = n.iter().map(|&(d, _)| d).collect();
        assert_eq!(got, expected);
        assert!(!got.contains(&Direction::NorthWest));
    }

    #[test]
    fn neighbors_never_returns_obstacles() {
        let mut map = GridMap::filled(5, 5, CellState::Free).unwrap();
        map.set(Cell::new(2, 2), CellState::Obstacle);
        map.set(Cell::new(3, 2), CellState::Unknown);
        for (c, s) in map.clone().iter() {
            if s == CellState::Obstacle {
                continue;
            }
            for (_, t) in map.neighbors(c).unwrap() {
                assert_ne!(map.get(t), Some(CellState::Obstacle));
            }
        }
    }

    #[test]
    fn out_of_bounds_is_an_error() {
        let map = GridMap::filled(3, 3, CellState::Free).unwrap();
        assert!(map.state(Cell::new(3, 0)).is_err());
        assert!(map.neighbors(Cell::new(0, 3)).is_err());
        assert_eq!(map.get(Cell::new(9, 9)), None);
    }
}
