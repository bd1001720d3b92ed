//! Discrete ray traversal: the supercover walk shared by line-of-sight checks
//! and the laser sensor.

use crate::error::GridError;
use crate::grid::{Cell, GridMap};

/// All cells a continuous segment between the centers of `a` and `b`
/// intersects, in traversal order starting at `a`.
///
/// Exact integer arithmetic; when the segment passes through a lattice
/// corner, all four touching cells are included (the two side cells appear
/// before the diagonal one).
pub fn supercover_line(a: Cell, b: Cell) -> Vec<Cell> {
    let (x0, y0) = (a.x as i64, a.y as i64);
    let (x1, y1) = (b.x as i64, b.y as i64);
    let dx = x1 - x0;
    let dy = y1 - y0;
    let nx = dx.abs();
    let ny = dy.abs();
    let sx: i64 = if dx > 0 { 1 } else { -1 };
    let sy: i64 = if dy > 0 { 1 } else { -1 };

    let mut out = Vec::with_capacity((nx + ny + 1) as usize);
    let (mut x, mut y) = (x0, y0);
    out.push(a);
    let (mut ix, mut iy) = (0i64, 0i64);
    while ix < nx || iy < ny {
        // Compare the parametric crossing times of the next vertical and
        // horizontal cell boundaries: (ix + 1/2)/nx vs (iy + 1/2)/ny,
        // cross-multiplied to stay in integers.
        let tx = (2 * ix + 1) * ny;
        let ty = (2 * iy + 1) * nx;
        if ix < nx && (iy >= ny || tx < ty) {
            x += sx;
            ix += 1;
        } else if iy < ny && (ix >= nx || ty < tx) {
            y += sy;
            iy += 1;
        } else {
            // Exact corner crossing: the segment touches both side cells.
            out.push(Cell::new((x + sx) as usize, y as usize));
            out.push(Cell::new(x as usize, (y + sy) as usize));
            x += sx;
            y += sy;
            ix += 1;
            iy += 1;
        }
        out.push(Cell::new(x as usize, y as usize));
    }
    out
}

/// True iff the discrete ray from `a` to `b` crosses no obstacle cell
/// (endpoints included). Errors on out-of-bounds endpoints.
pub fn line_of_sight(map: &GridMap, a: Cell, b: Cell) -> Result<bool, GridError> {
    map.state(a)?;
    map.state(b)?;
    Ok(supercover_line(a, b).iter().all(|&c| !map.is_obstacle(c)))
}

/// Cells crossed by a ray from the center of `from` along the unit direction
/// `(dx, dy)`, in order, up to Euclidean distance `range` (in cell units) or
/// the map border. The starting cell is not included.
pub fn ray_march(map: &GridMap, from: Cell, dx: f64, dy: f64, range: f64) -> Vec<Cell> {
    let mut out = Vec::new();
    let (mut cx, mut cy) = (from.x as i64, from.y as i64);
    let ox = from.x as f64 + 0.5;
    let oy = from.y as f64 + 0.5;

    let step_x: i64 = if dx > 0.0 { 1 } else { -1 };
    let step_y: i64 = if dy > 0.0 { 1 } else { -1 };
    // Distance along the ray to the first vertical / horizontal boundary.
    let mut t_max_x = if dx.abs() < 1e-12 {
        f64::INFINITY
    } else {
        let next = if dx > 0.0 {
            (cx + 1) as f64 - ox
        } else {
            ox - cx as f64
        };
        next / dx.abs()
    };
    let mut t_max_y = if dy.abs() < 1e-12 {
        f64::INFINITY
    } else {
        let next = if dy > 0.0 {
            (cy + 1) as f64 - oy
        } else {
            oy - cy as f64
        };
        next / dy.abs()
    };
    let t_delta_x = if dx.abs() < 1e-12 {
        f64::INFINITY
    } else {
        1.0 / dx.abs()
    };
    let t_delta_y = if dy.abs() < 1e-12 {
        f64::INFINITY
    } else {
        1.0 / dy.abs()
    };

    loop {
        let t = t_max_x.min(t_max_y);
        if t > range {
            break;
        }
        if t_max_x <= t_max_y {
            cx += step_x;
            t_max_x += t_delta_x;
        } else {
            cy += step_y;
            t_max_y += t_delta_y;
        }
        if cx < 0 || cy < 0 {
            break;
        }
        let cell = Cell::new(cx as usize, cy as usize);
        if !map.in_bounds(cell) {
            break;
        }
        out.push(cell);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::CellState;

    #[test]
    fn degenerate_segment_is_its_own_cell() {
        let map = GridMap::filled(3, 3, CellState::Free).unwrap();
        assert_eq!(supercover_line(Cell::new(1, 1), Cell::new(1, 1)), vec![Cell::new(1, 1)]);
        assert!(line_of_sight(&map, Cell::new(1, 1), Cell::new(1, 1)).unwrap());
    }

    #[test]
    fn corridor_obstacle_blocks_sight() {
        let mut map = GridMap::filled(5, 1, CellState::Free).unwrap();
        map.set(Cell::new(2, 0), CellState::Obstacle);
        assert!(!line_of_sight(&map, Cell::new(0, 0), Cell::new(4, 0)).unwrap());
        assert!(line_of_sight(&map, Cell::new(0, 0), Cell::new(1, 0)).unwrap());
    }

    #[test]
    fn exact_diagonal_touches_corner_cells() {
        let cells = supercover_line(Cell::new(0, 0), Cell::new(2, 2));
        // Every corner crossing contributes both side cells.
        assert!(cells.contains(&Cell::new(1, 0)));
        assert!(cells.contains(&Cell::new(0, 1)));
        assert!(cells.contains(&Cell::new(1, 1)));
        assert_eq!(*cells.last().unwrap(), Cell::new(2, 2));
    }

    #[test]
    fn unknown_cells_do_not_block_sight() {
        let mut map = GridMap::filled(4, 1, CellState::Free).unwrap();
        map.set(Cell::new(2, 0), CellState::Unknown);
        assert!(line_of_sight(&map, Cell::new(0, 0), Cell::new(3, 0)).unwrap());
    }
}
