//! Unconstrained fillings `t: λ → ℕ`, read as multisets of rim-hooks: `t(u)`
//! copies of the rim-hook anchored at `u`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{self, GridJson};
use crate::geometry::{revlex_compare, Cell, Partition};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        format::check_fits(&shape, &rows)?;
        Ok(Tableau { shape, rows })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::new(format::shape_of(&rows)?, rows)
    }

    pub fn zero(shape: &Partition) -> Self {
        Tableau {
            rows: shape.parts().iter().map(|&p| vec![0; p]).collect(),
            shape: shape.clone(),
        }
    }

    /// Tableau counting each anchor of the multiset.
    pub fn from_anchors(shape: &Partition, anchors: &[Cell]) -> Result<Self> {
        let mut t = Tableau::zero(shape);
        for &u in anchors {
            if !shape.contains(u) {
                return Err(Error::CellOutsideShape {
                    cell: u,
                    shape: shape.clone(),
                });
            }
            *t.at_mut(u) += 1;
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, u: Cell) -> Option<u32> {
        self.shape
            .contains(u)
            .then(|| self.rows[u.row as usize - 1][u.col as usize - 1])
    }

    pub fn set(&mut self, u: Cell, v: u32) -> Result<()> {
        if !self.shape.contains(u) {
            return Err(Error::CellOutsideShape {
                cell: u,
                shape: self.shape.clone(),
            });
        }
        *self.at_mut(u) = v;
        Ok(())
    }

    pub(crate) fn at(&self, u: Cell) -> u32 {
        self.rows[u.row as usize - 1][u.col as usize - 1]
    }

    pub(crate) fn at_mut(&mut self, u: Cell) -> &mut u32 {
        &mut self.rows[u.row as usize - 1][u.col as usize - 1]
    }

    /// Number of rim-hooks, `Σ t(u)`.
    pub fn count(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| v as u64).sum()
    }

    /// `Σ t(u)·h(u)`, the size of the matching reverse plane partition.
    pub fn weighted_size(&self) -> u64 {
        self.shape
            .cells()
            .map(|u| self.at(u) as u64 * self.shape.hook_length_unchecked(u) as u64)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|&v| v == 0)
    }

    /// The multiset as a weakly increasing anchor sequence in rim-hook order.
    pub fn anchors(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for u in self.shape.cells_revlex() {
            out.extend(std::iter::repeat_n(u, self.at(u) as usize));
        }
        out
    }

    /// Entrywise transpose, on the conjugate shape.
    pub fn transpose(&self) -> Tableau {
        let conj = self.shape.conjugate();
        let rows = conj
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &len)| (0..len).map(|i| self.rows[i][j]).collect())
            .collect();
        Tableau { shape: conj, rows }
    }

    pub fn to_json(&self) -> GridJson {
        format::to_json(&self.shape, &self.rows)
    }

    pub fn from_json(g: &GridJson) -> Result<Self> {
        let (shape, rows) = format::from_json(g)?;
        Tableau::new(shape, rows)
    }
}

/// Sorts anchors weakly increasing in rim-hook order.
pub fn sort_anchors(anchors: &mut [Cell]) {
    anchors.sort_by(|&a, &b| revlex_compare(a, b));
}

/// One anchor per line, `(i,j)`.
pub fn anchors_to_string(anchors: &[Cell]) -> String {
    anchors.iter().map(|u| format!("{u}\n")).collect()
}

pub fn parse_anchors(text: &str) -> Result<Vec<Cell>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect()
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::grid_to_string(&self.rows))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tableau::from_rows(format::parse_grid(s)?)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let g = GridJson::deserialize(d)?;
        Tableau::from_json(&g).map_err(serde::de::Error::custom)
    }
}
