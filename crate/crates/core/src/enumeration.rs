//! Exhaustive streams used as ground truth: reverse plane partitions by size,
//! tableaux by weighted size, and south-west paths by tail and length.
//!
//! Every stream is deterministic, duplicate free, and refuses up front when
//! its projected length exceeds the budget ceiling.

use crate::error::{Error, Result};
use crate::geometry::{Cell, Partition};
use crate::path::{LatticePath, Orientation};
use crate::rpp::Rpp;
use crate::tableau::Tableau;

pub const DEFAULT_CEILING: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct EnumBudget {
    /// Largest number of items a stream may produce.
    pub ceiling: u128,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl EnumBudget {
    pub fn new(ceiling: u128) -> Self {
        EnumBudget { ceiling }
    }

    fn admit(&self, projected: u128) -> Result<()> {
        if projected > self.ceiling {
            Err(Error::BudgetExceeded {
                projected,
                ceiling: self.ceiling,
            })
        } else {
            Ok(())
        }
    }
}

/// Number of fillings with weighted size at most `n`, where each cell has
/// the given weight: the sum of the first `n + 1` coefficients of
/// `∏ 1/(1 − q^w)`. Saturates instead of overflowing.
pub fn count_weighted(weights: &[usize], n: usize) -> u128 {
    let mut coeffs = vec![0u128; n + 1];
    coeffs[0] = 1;
    for &w in weights {
        for d in w..=n {
            coeffs[d] = coeffs[d].saturating_add(coeffs[d - w]);
        }
    }
    coeffs.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

fn hook_weights(shape: &Partition) -> Vec<usize> {
    shape
        .cells()
        .map(|u| shape.hook_length_unchecked(u))
        .collect()
}

/// Projected number of reverse plane partitions of `shape` with `|π| ≤ n`.
pub fn projected_rpp_count(shape: &Partition, n: usize) -> u128 {
    count_weighted(&hook_weights(shape), n)
}

/// Row-major lexicographic stream of all reverse plane partitions of `shape`
/// with `|π| ≤ n`.
pub fn enumerate_rpps(shape: &Partition, n: usize, budget: &EnumBudget) -> Result<RppStream> {
    budget.admit(projected_rpp_count(shape, n))?;
    Ok(RppStream::new(shape, n as u64))
}

/// Row-major lexicographic stream of all tableaux with `Σ t(u)h(u) ≤ n`.
pub fn enumerate_tableaux(
    shape: &Partition,
    n: usize,
    budget: &EnumBudget,
) -> Result<TableauStream> {
    budget.admit(projected_rpp_count(shape, n))?;
    Ok(TableauStream::new(shape, n as u64))
}

#[derive(Debug, Clone)]
pub struct RppStream {
    shape: Partition,
    bound: u64,
    // row-major cells and, for each, the flat index of its west/north neighbour
    west: Vec<Option<usize>>,
    north: Vec<Option<usize>>,
    values: Vec<u32>,
    started: bool,
    done: bool,
}

impl RppStream {
    fn new(shape: &Partition, bound: u64) -> Self {
        let cells: Vec<Cell> = shape.cells().collect();
        let index = |u: Cell| cells.iter().position(|&v| v == u);
        RppStream {
            west: cells.iter().map(|&u| index(u.west())).collect(),
            north: cells.iter().map(|&u| index(u.north())).collect(),
            values: vec![0; cells.len()],
            shape: shape.clone(),
            bound,
            started: false,
            done: false,
        }
    }

    /// Smallest monotone completion of positions after `p`; returns its sum.
    fn complete_from(&mut self, p: usize) -> u64 {
        let mut sum = 0;
        for k in p + 1..self.values.len() {
            let w = self.west[k].map_or(0, |i| self.values[i]);
            let n = self.north[k].map_or(0, |i| self.values[i]);
            self.values[k] = w.max(n);
            sum += self.values[k] as u64;
        }
        sum
    }

    fn advance(&mut self) -> bool {
        for p in (0..self.values.len()).rev() {
            let prefix: u64 = self.values[..=p].iter().map(|&v| v as u64).sum::<u64>() + 1;
            if prefix > self.bound {
                continue;
            }
            self.values[p] += 1;
            if prefix + self.complete_from(p) <= self.bound {
                return true;
            }
            self.values[p] -= 1;
            self.complete_from(p);
        }
        false
    }

    fn current(&self) -> Rpp {
        let mut it = self.values.iter().copied();
        let rows = self
            .shape
            .parts()
            .iter()
            .map(|&len| (&mut it).take(len).collect())
            .collect();
        Rpp::from_rows_unchecked(self.shape.clone(), rows)
    }
}

impl Iterator for RppStream {
    type Item = Rpp;

    fn next(&mut self) -> Option<Rpp> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current())
    }
}

#[derive(Debug, Clone)]
pub struct TableauStream {
    shape: Partition,
    bound: u64,
    weights: Vec<u64>,
    values: Vec<u32>,
    started: bool,
    done: bool,
}

impl TableauStream {
    fn new(shape: &Partition, bound: u64) -> Self {
        let weights: Vec<u64> = hook_weights(shape).into_iter().map(|w| w as u64).collect();
        TableauStream {
            values: vec![0; weights.len()],
            weights,
            shape: shape.clone(),
            bound,
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        for p in (0..self.values.len()).rev() {
            let prefix: u64 = (0..=p)
                .map(|k| self.values[k] as u64 * self.weights[k])
                .sum::<u64>()
                + self.weights[p];
            if prefix <= self.bound {
                self.values[p] += 1;
                self.values[p + 1..].iter_mut().for_each(|v| *v = 0);
                return true;
            }
        }
        false
    }
}

impl Iterator for TableauStream {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        let mut it = self.values.iter().copied();
        let rows = self
            .shape
            .parts()
            .iter()
            .map(|&len| (&mut it).take(len).collect())
            .collect();
        Some(Tableau::new(self.shape.clone(), rows).expect("rows fit the shape"))
    }
}

/// All south-west paths inside `shape` starting at `tail` with `len` cells,
/// ordered by their step word read as a binary number (west = 0, south = 1).
pub fn enumerate_sw_paths(
    shape: &Partition,
    tail: Cell,
    len: usize,
    budget: &EnumBudget,
) -> Result<impl Iterator<Item = LatticePath>> {
    if len == 0 {
        return Err(Error::MalformedPath("a path has at least one cell".into()));
    }
    if len > 64 {
        return Err(Error::BudgetExceeded {
            projected: u128::MAX,
            ceiling: budget.ceiling,
        });
    }
    let words = 1u128 << (len - 1);
    budget.admit(words)?;
    let shape = shape.clone();
    let start_ok = shape.contains(tail);
    Ok((0..words).filter_map(move |word| {
        if !start_ok {
            return None;
        }
        let mut cells = Vec::with_capacity(len);
        let mut u = tail;
        cells.push(u);
        for k in (0..len - 1).rev() {
            u = if word >> k & 1 == 1 {
                u.south()
            } else {
                u.west()
            };
            if !shape.contains(u) {
                return None;
            }
            cells.push(u);
        }
        Some(LatticePath::from_parts_unchecked(
            cells,
            Orientation::SouthWest,
        ))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(i: i32, j: i32) -> Cell {
        Cell::new(i, j)
    }

    #[test]
    fn single_cell() {
        let b = EnumBudget::default();
        let got: Vec<String> = enumerate_rpps(&p("1"), 3, &b)
            .unwrap()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(got, vec!["0\n", "1\n", "2\n", "3\n"]);
        let got: Vec<String> = enumerate_tableaux(&p("1"), 2, &b)
            .unwrap()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(got, vec!["0\n", "1\n", "2\n"]);
    }

    #[test]
    fn two_by_two_up_to_two() {
        let all: Vec<Rpp> = enumerate_rpps(&p("2,2"), 2, &EnumBudget::default())
            .unwrap()
            .collect();
        let sizes: Vec<u64> = all.iter().map(Rpp::size).collect();
        assert_eq!(sizes.len(), 5);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 3);
        let twos: HashSet<String> = all
            .iter()
            .filter(|r| r.size() == 2)
            .map(|r| r.to_string())
            .collect();
        let expect: HashSet<String> = ["0 0\n0 2\n", "0 0\n1 1\n", "0 1\n0 1\n"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(twos, expect);
    }

    /// Filter every grid with entries ≤ n for monotonicity and size.
    fn brute_rpps(shape: &Partition, n: u32) -> Vec<Vec<u32>> {
        let k = shape.size();
        let mut out = Vec::new();
        let mut digits = vec![0u32; k];
        loop {
            let mut it = digits.iter().copied();
            let rows: Vec<Vec<u32>> = shape
                .parts()
                .iter()
                .map(|&len| (&mut it).take(len).collect())
                .collect();
            if digits.iter().sum::<u32>() <= n && Rpp::new(shape.clone(), rows).is_ok() {
                out.push(digits.clone());
            }
            let Some(pos) = digits.iter().rposition(|&d| d < n) else {
                return out;
            };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        }
    }

    #[test]
    fn rpp_stream_is_complete_sorted_and_unique() {
        for (shape, n) in [
            ("2,2", 4),
            ("3,1", 4),
            ("2,1,1", 3),
            ("3,2", 3),
            ("1,1,1", 5),
        ] {
            let shape = p(shape);
            let got: Vec<Vec<u32>> = enumerate_rpps(&shape, n as usize, &EnumBudget::default())
                .unwrap()
                .map(|r| r.rows().concat())
                .collect();
            // brute force visits grids in lexicographic order too
            assert_eq!(got, brute_rpps(&shape, n));
            assert_eq!(got.len() as u128, projected_rpp_count(&shape, n as usize));
        }
    }

    #[test]
    fn rpp_count_matches_hook_series_for_431() {
        let shape = p("4,3,1");
        let n = enumerate_rpps(&shape, 10, &EnumBudget::default())
            .unwrap()
            .count();
        assert_eq!(n as u128, projected_rpp_count(&shape, 10));
    }

    #[test]
    fn tableau_stream() {
        let shape = p("2,2");
        let all: Vec<Tableau> = enumerate_tableaux(&shape, 5, &EnumBudget::default())
            .unwrap()
            .collect();
        let unique: HashSet<Vec<u32>> = all.iter().map(|t| t.rows().concat()).collect();
        assert_eq!(unique.len(), all.len());
        assert!(all
            .windows(2)
            .all(|w| w[0].rows().concat() < w[1].rows().concat()));
        assert!(all.iter().all(|t| t.weighted_size() <= 5));
        // weighted-size histogram equals the size histogram of the RPPs
        let mut a = [0usize; 6];
        let mut b = [0usize; 6];
        for t in &all {
            a[t.weighted_size() as usize] += 1;
        }
        for r in enumerate_rpps(&shape, 5, &EnumBudget::default()).unwrap() {
            b[r.size() as usize] += 1;
        }
        assert_eq!(a, b);
    }

    #[test]
    fn streams_are_deterministic() {
        let shape = p("3,2");
        let b = EnumBudget::default();
        let x: Vec<Rpp> = enumerate_rpps(&shape, 5, &b).unwrap().collect();
        let y: Vec<Rpp> = enumerate_rpps(&shape, 5, &b).unwrap().collect();
        assert_eq!(x, y);
    }

    #[test]
    fn budget_refusal() {
        let err = enumerate_rpps(&p("4,3,1"), 10, &EnumBudget::new(100)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { ceiling: 100, .. }));
        assert!(enumerate_sw_paths(&p("9"), c(1, 9), 9, &EnumBudget::new(10)).is_err());
    }

    #[test]
    fn sw_paths() {
        let b = EnumBudget::default();
        let sq = p("3,3,3");
        let one: Vec<LatticePath> = enumerate_sw_paths(&sq, c(1, 3), 1, &b).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].cells(), &[c(1, 3)]);
        let three: Vec<LatticePath> = enumerate_sw_paths(&sq, c(1, 3), 3, &b).unwrap().collect();
        assert_eq!(three.len(), 4);
        for path in &three {
            assert_eq!(path.tail(), c(1, 3));
            assert_eq!(path.len(), 3);
        }
        // paths running off the diagram are dropped
        assert_eq!(
            enumerate_sw_paths(&p("2"), c(1, 2), 3, &b).unwrap().count(),
            0
        );
        assert_eq!(
            enumerate_sw_paths(&p("2,2"), c(1, 2), 3, &b)
                .unwrap()
                .count(),
            2
        );
    }
}
