//! Reverse plane partitions: fillings of a diagram by naturals, weakly
//! increasing along rows and down columns.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{self, GridJson};
use crate::geometry::{content_compare, Cell, Partition, Region};

/// A value of the extended filling: zero above and left of the diagram,
/// infinite below and right of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtValue {
    Finite(u32),
    Infinite,
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(v) => write!(f, "{v}"),
            ExtValue::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rpp {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Rpp {
    /// Validates `rows` against `shape`. Monotonicity failures report the
    /// first offending cell in row-major order.
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        format::check_fits(&shape, &rows)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let left = j > 0 && row[j - 1] > v;
                let above = i > 0 && rows[i - 1][j] > v;
                if left || above {
                    return Err(Error::NotMonotone {
                        cell: Cell::new(i as i32 + 1, j as i32 + 1),
                    });
                }
            }
        }
        Ok(Rpp { shape, rows })
    }

    /// Shape inferred from the row lengths.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        Rpp::new(format::shape_of(&rows)?, rows)
    }

    pub fn zero(shape: &Partition) -> Self {
        Rpp {
            rows: shape.parts().iter().map(|&p| vec![0; p]).collect(),
            shape: shape.clone(),
        }
    }

    pub(crate) fn from_rows_unchecked(shape: Partition, rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Rpp::new(shape.clone(), rows.clone()).is_ok());
        Rpp { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// Entry at a cell of the diagram.
    pub fn get(&self, u: Cell) -> Option<u32> {
        if self.shape.contains(u) {
            Some(self.rows[u.row as usize - 1][u.col as usize - 1])
        } else {
            None
        }
    }

    /// `π(i,j)` under the extension convention.
    pub fn value_ext(&self, u: Cell) -> ExtValue {
        if u.row <= 0 || u.col <= 0 {
            ExtValue::Finite(0)
        } else {
            match self.get(u) {
                Some(v) => ExtValue::Finite(v),
                None => ExtValue::Infinite,
            }
        }
    }

    /// Sum of all entries, `|π|`.
    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| v as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|&v| v == 0)
    }

    /// Sum along the diagonal of content `k`.
    pub fn trace(&self, k: i32) -> u64 {
        self.shape
            .diagonal(k)
            .into_iter()
            .map(|u| self.rows[u.row as usize - 1][u.col as usize - 1] as u64)
            .sum()
    }

    /// Traces for every content of the shape, lowest content first.
    pub fn traces(&self) -> Vec<u64> {
        (self.shape.min_content()..=self.shape.max_content())
            .map(|k| self.trace(k))
            .collect()
    }

    /// Entries along diagonal `k`, north-west first.
    pub fn diagonal_entries(&self, k: i32) -> Vec<u32> {
        self.shape
            .diagonal(k)
            .into_iter()
            .map(|u| self.rows[u.row as usize - 1][u.col as usize - 1])
            .collect()
    }

    pub(crate) fn at(&self, u: Cell) -> u32 {
        self.rows[u.row as usize - 1][u.col as usize - 1]
    }

    pub(crate) fn at_mut(&mut self, u: Cell) -> &mut u32 {
        &mut self.rows[u.row as usize - 1][u.col as usize - 1]
    }

    /// Whether `u` is a candidate: an `O` cell above its west neighbour, or an
    /// `A` cell above both its west and north neighbours.
    pub fn is_candidate(&self, u: Cell) -> bool {
        let Some(v) = self.get(u) else {
            return false;
        };
        let v = ExtValue::Finite(v);
        match self.shape.region_unchecked(u) {
            Region::OuterDiag => v > self.value_ext(u.west()),
            Region::RegionA => v > self.value_ext(u.west()) && v > self.value_ext(u.north()),
            _ => false,
        }
    }

    /// Candidates, sorted by the content order (minimum first).
    pub fn candidates(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = self
            .shape
            .cells()
            .filter(|&u| self.is_candidate(u))
            .collect();
        out.sort_by(|&a, &b| content_compare(a, b));
        out
    }

    /// The content-order minimum of the candidates; `None` exactly for the
    /// zero filling.
    pub fn min_candidate(&self) -> Option<Cell> {
        // scanning diagonals from the largest content, bottom cell first,
        // visits cells in content order
        for k in (self.shape.min_content()..=self.shape.max_content()).rev() {
            if !self.shape.region_of_content(k)?.is_a_or_outer() {
                continue;
            }
            for u in self.shape.diagonal(k).into_iter().rev() {
                if self.is_candidate(u) {
                    return Some(u);
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> GridJson {
        format::to_json(&self.shape, &self.rows)
    }

    pub fn from_json(g: &GridJson) -> Result<Self> {
        let (shape, rows) = format::from_json(g)?;
        Rpp::new(shape, rows)
    }
}

impl fmt::Debug for Rpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rpp{:?}", self.rows)
    }
}

impl fmt::Display for Rpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::grid_to_string(&self.rows))
    }
}

impl FromStr for Rpp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rpp::from_rows(format::parse_grid(s)?)
    }
}

impl Serialize for Rpp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rpp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let g = GridJson::deserialize(d)?;
        Rpp::from_json(&g).map_err(serde::de::Error::custom)
    }
}
