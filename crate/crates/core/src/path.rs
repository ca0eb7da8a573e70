//! Lattice paths: cell sequences stepping north/east or south/west.
//!
//! Head `α` and tail `ω` do not depend on the orientation: `α` is always the
//! south-west end and `ω` the north-east end. Length counts cells.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Cell;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// Each step goes north or east.
    NorthEast,
    /// Each step goes south or west.
    SouthWest,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    cells: Vec<Cell>,
    orientation: Orientation,
}

impl LatticePath {
    pub fn new(cells: Vec<Cell>, orientation: Orientation) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::MalformedPath("a path has at least one cell".into()));
        }
        for w in cells.windows(2) {
            let ok = match orientation {
                Orientation::NorthEast => w[1] == w[0].north() || w[1] == w[0].east(),
                Orientation::SouthWest => w[1] == w[0].south() || w[1] == w[0].west(),
            };
            if !ok {
                return Err(Error::MalformedPath(format!(
                    "step {} -> {} is not {:?}",
                    w[0], w[1], orientation
                )));
            }
        }
        Ok(LatticePath { cells, orientation })
    }

    pub(crate) fn from_parts_unchecked(cells: Vec<Cell>, orientation: Orientation) -> Self {
        debug_assert!(LatticePath::new(cells.clone(), orientation).is_ok());
        LatticePath { cells, orientation }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// South-west end `α`.
    pub fn head(&self) -> Cell {
        match self.orientation {
            Orientation::NorthEast => self.cells[0],
            Orientation::SouthWest => *self.cells.last().unwrap(),
        }
    }

    /// North-east end `ω`.
    pub fn tail(&self) -> Cell {
        match self.orientation {
            Orientation::NorthEast => *self.cells.last().unwrap(),
            Orientation::SouthWest => self.cells[0],
        }
    }

    pub fn contains(&self, u: Cell) -> bool {
        self.cells.contains(&u)
    }

    /// The same cells walked the other way.
    pub fn reversed(&self) -> LatticePath {
        let mut cells = self.cells.clone();
        cells.reverse();
        let orientation = match self.orientation {
            Orientation::NorthEast => Orientation::SouthWest,
            Orientation::SouthWest => Orientation::NorthEast,
        };
        LatticePath { cells, orientation }
    }

    /// Cells sorted so that paths with the same cell set compare equal.
    pub fn cell_set(&self) -> Vec<Cell> {
        let mut v = self.cells.clone();
        v.sort();
        v
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(Cell::to_string).collect();
        f.write_str(&cells.join(","))
    }
}
