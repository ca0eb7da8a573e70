//! Young diagrams: cells, partitions, hooks, contents, the four diagonal
//! regions, the two total orders on cells and the cell/rim-hook bijection.
//!
//! Cells are 1-indexed `(row, col)` pairs, rows growing downward. Lengths of
//! paths and rim-hooks are always counted in cells, so a rim-hook anchored at
//! `u` has exactly `hook_length(u)` cells.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(row, col)`. Coordinates may be zero or negative when a path is
/// walked past the left or top edge of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub const fn north(self) -> Cell {
        Cell::new(self.row - 1, self.col)
    }

    pub const fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub const fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub const fn west(self) -> Cell {
        Cell::new(self.row, self.col - 1)
    }

    /// `col - row`; constant along each diagonal.
    pub const fn content(self) -> i32 {
        self.col - self.row
    }
}

impl From<(i32, i32)> for Cell {
    fn from((row, col): (i32, i32)) -> Self {
        Cell::new(row, col)
    }
}

impl From<Cell> for (i32, i32) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner);
        let mut it = inner.split(',').map(|p| p.trim().parse::<i32>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(row)), Some(Ok(col)), None) => Ok(Cell::new(row, col)),
            _ => Err(Error::Parse(format!(
                "expected a cell like (i,j), got {s:?}"
            ))),
        }
    }
}

/// The reverse lexicographic order: columns right to left, and within a
/// column bottom to top. `Less` means `u` comes first.
pub fn revlex_compare(u: Cell, v: Cell) -> Ordering {
    v.col.cmp(&u.col).then(v.row.cmp(&u.row))
}

/// The content order: larger content first, ties broken bottom to top.
pub fn content_compare(u: Cell, v: Cell) -> Ordering {
    v.content().cmp(&u.content()).then(v.row.cmp(&u.row))
}

/// Label of a cell according to the diagonal it sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// Content of an inner corner.
    InnerDiag,
    /// Content of an outer corner.
    OuterDiag,
    /// Below the lowest outer corner, or strictly between an inner corner and
    /// the next outer corner above it.
    RegionA,
    /// Strictly between an outer corner and the next inner corner above it, or
    /// above the highest outer corner.
    RegionB,
}

impl Region {
    /// `I ∪ A`: cells whose rim-hook always continues east.
    pub fn is_inner_or_a(self) -> bool {
        matches!(self, Region::InnerDiag | Region::RegionA)
    }

    /// `B ∪ I`: cells whose rim-hook always continues south.
    pub fn is_b_or_inner(self) -> bool {
        matches!(self, Region::RegionB | Region::InnerDiag)
    }

    /// `O ∪ B`.
    pub fn is_outer_or_b(self) -> bool {
        matches!(self, Region::OuterDiag | Region::RegionB)
    }

    /// `A ∪ O`.
    pub fn is_a_or_outer(self) -> bool {
        matches!(self, Region::RegionA | Region::OuterDiag)
    }

    pub fn letter(self) -> char {
        match self {
            Region::InnerDiag => 'I',
            Region::OuterDiag => 'O',
            Region::RegionA => 'A',
            Region::RegionB => 'B',
        }
    }
}

/// Inner and outer corners of a nonempty partition, each sorted by content.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corners {
    pub inner: Vec<Cell>,
    pub outer: Vec<Cell>,
}

/// A weakly decreasing sequence of positive parts, identified with its Young
/// diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    conj: Vec<usize>,
    // region of each content in [1 - len, parts[0] - 1], indexed from the lowest
    regions: Vec<Region>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(k) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", k + 1)));
        }
        if let Some(k) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must weakly decrease, but part {} < part {}",
                k + 1,
                k + 2
            )));
        }
        let conj = conjugate_parts(&parts);
        let regions = region_table(&parts);
        Ok(Partition {
            parts,
            conj,
            regions,
        })
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            conj: Vec::new(),
            regions: Vec::new(),
        }
    }

    /// Square `n × n` shape.
    pub fn square(n: usize) -> Self {
        Partition::new(vec![n; n]).expect("a square is a partition")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` for a 1-indexed row; zero outside.
    pub fn row_len(&self, row: i32) -> usize {
        if row < 1 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    /// `λ'_j` for a 1-indexed column; zero outside.
    pub fn col_len(&self, col: i32) -> usize {
        if col < 1 {
            return 0;
        }
        self.conj.get(col as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, u: Cell) -> bool {
        u.row >= 1 && u.col >= 1 && (u.col as usize) <= self.row_len(u.row)
    }

    fn require(&self, u: Cell) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::CellOutsideShape {
                cell: u,
                shape: self.clone(),
            })
        }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as i32).map(move |j| Cell::new(i as i32 + 1, j)))
    }

    /// Cells sorted by the reverse lexicographic order (minimum first).
    pub fn cells_revlex(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.cells().collect();
        cells.sort_by(|&a, &b| revlex_compare(a, b));
        cells
    }

    /// Cells sorted by the content order (minimum first).
    pub fn cells_content_order(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.cells().collect();
        cells.sort_by(|&a, &b| content_compare(a, b));
        cells
    }

    pub fn conjugate(&self) -> Partition {
        Partition::new(self.conj.clone()).expect("conjugate of a partition is a partition")
    }

    /// `h(u) = λ_i + λ'_j − i − j + 1`.
    pub fn hook_length(&self, u: Cell) -> Result<usize> {
        self.require(u)?;
        Ok(self.hook_length_unchecked(u))
    }

    pub(crate) fn hook_length_unchecked(&self, u: Cell) -> usize {
        self.row_len(u.row) + self.col_len(u.col) + 1 - u.row as usize - u.col as usize
    }

    pub fn is_outer_corner(&self, u: Cell) -> bool {
        self.contains(u) && !self.contains(u.east()) && !self.contains(u.south())
    }

    pub fn is_inner_corner(&self, u: Cell) -> bool {
        self.contains(u.east()) && self.contains(u.south()) && !self.contains(u.east().south())
    }

    pub fn outer_corners(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = (1..=self.len() as i32)
            .filter(|&i| self.row_len(i + 1) < self.row_len(i))
            .map(|i| Cell::new(i, self.row_len(i) as i32))
            .collect();
        out.sort_by_key(|c| c.content());
        out
    }

    pub fn inner_corners(&self) -> Vec<Cell> {
        let mut inner: Vec<Cell> = (1..self.len() as i32)
            .filter(|&i| self.row_len(i + 1) < self.row_len(i))
            .map(|i| Cell::new(i, self.row_len(i + 1) as i32))
            .collect();
        inner.sort_by_key(|c| c.content());
        inner
    }

    pub fn corners(&self) -> Result<Corners> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(Corners {
            inner: self.inner_corners(),
            outer: self.outer_corners(),
        })
    }

    /// Smallest content present, `1 − ℓ(λ)`.
    pub fn min_content(&self) -> i32 {
        1 - self.len() as i32
    }

    /// Largest content present, `λ_1 − 1`.
    pub fn max_content(&self) -> i32 {
        self.row_len(1) as i32 - 1
    }

    /// Region of a diagonal; `None` if the diagram has no cell of that content.
    pub fn region_of_content(&self, content: i32) -> Option<Region> {
        let idx = content - self.min_content();
        if idx < 0 {
            return None;
        }
        self.regions.get(idx as usize).copied()
    }

    pub fn region(&self, u: Cell) -> Result<Region> {
        self.require(u)?;
        Ok(self.region_unchecked(u))
    }

    pub(crate) fn region_unchecked(&self, u: Cell) -> Region {
        self.region_of_content(u.content())
            .expect("cell inside the diagram has a region")
    }

    /// Anchor of the rim-hook with the given tail `(i, λ_i)` and cell count.
    pub fn anchor_for(&self, tail: Cell, len: usize) -> Option<Cell> {
        if !self.contains(tail) || tail.col as usize != self.row_len(tail.row) {
            return None;
        }
        (1..=tail.col)
            .map(|j| Cell::new(tail.row, j))
            .find(|&u| self.hook_length_unchecked(u) == len)
    }

    /// The rim-hook `h^u`: head `(λ'_j, j)`, tail `(i, λ_i)`.
    pub fn rim_hook(&self, u: Cell) -> Result<RimHook> {
        self.require(u)?;
        Ok(RimHook {
            anchor: u,
            cells: self.rim_cells(u),
            shape: self.clone(),
        })
    }

    pub(crate) fn rim_cells(&self, u: Cell) -> Vec<Cell> {
        let tail = self.rim_tail(u);
        let mut cur = self.rim_head(u);
        let mut cells = Vec::with_capacity(self.hook_length_unchecked(u));
        cells.push(cur);
        while cur != tail {
            // east while the cell below-right stays outside, otherwise north
            let e = cur.east();
            cur = if self.contains(e) && !self.contains(e.south()) {
                e
            } else {
                cur.north()
            };
            cells.push(cur);
        }
        cells
    }

    pub(crate) fn rim_head(&self, u: Cell) -> Cell {
        Cell::new(self.col_len(u.col) as i32, u.col)
    }

    pub(crate) fn rim_tail(&self, u: Cell) -> Cell {
        Cell::new(u.row, self.row_len(u.row) as i32)
    }

    /// All rim-hooks in increasing rim-hook order.
    pub fn rim_hooks(&self) -> Vec<RimHook> {
        self.cells_revlex()
            .into_iter()
            .map(|u| self.rim_hook(u).expect("cell of the diagram"))
            .collect()
    }

    /// The diagram with the outer corner `x` removed.
    pub fn remove_corner(&self, x: Cell) -> Result<Partition> {
        if !self.is_outer_corner(x) {
            return Err(Error::NotAnOuterCorner {
                cell: x,
                shape: self.clone(),
            });
        }
        let mut parts = self.parts.clone();
        let r = x.row as usize - 1;
        parts[r] -= 1;
        if parts[r] == 0 {
            parts.pop();
        }
        Partition::new(parts)
    }

    /// Lowest cell of the rightmost column: the revlex minimum, always an
    /// outer corner.
    pub fn revlex_min_corner(&self) -> Option<Cell> {
        let last = self.row_len(1) as i32;
        (last > 0).then(|| Cell::new(self.col_len(last) as i32, last))
    }

    /// The south-easternmost cell of content `k`, if any.
    pub fn diagonal_end(&self, k: i32) -> Option<Cell> {
        (1..=self.len() as i32)
            .rev()
            .map(|i| Cell::new(i, i + k))
            .find(|&c| self.contains(c))
    }

    /// Cells of content `k`, north-west to south-east.
    pub fn diagonal(&self, k: i32) -> Vec<Cell> {
        (1..=self.len() as i32)
            .map(|i| Cell::new(i, i + k))
            .filter(|&c| self.contains(c))
            .collect()
    }
}

/// Partitions of `n`, parts in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()).expect("built decreasing"));
            return;
        }
        for k in (1..=n.min(cap)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition of size at most `max`, including the empty one.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().take_while(|&&p| p >= j).count())
        .collect()
}

fn region_table(parts: &[usize]) -> Vec<Region> {
    if parts.is_empty() {
        return Vec::new();
    }
    let row_len = |i: usize| parts.get(i.wrapping_sub(1)).copied().unwrap_or(0);
    let n = parts.len();
    let outer: Vec<i32> = (1..=n)
        .filter(|&i| row_len(i + 1) < row_len(i))
        .map(|i| row_len(i) as i32 - i as i32)
        .rev()
        .collect();
    let inner: Vec<i32> = (1..n)
        .filter(|&i| row_len(i + 1) < row_len(i))
        .map(|i| row_len(i + 1) as i32 - i as i32)
        .rev()
        .collect();
    debug_assert_eq!(outer.len(), inner.len() + 1);
    let lo = 1 - n as i32;
    let hi = parts[0] as i32 - 1;
    (lo..=hi)
        .map(|c| {
            if inner.contains(&c) {
                Region::InnerDiag
            } else if outer.contains(&c) {
                Region::OuterDiag
            } else if c < outer[0] {
                Region::RegionA
            } else if c > *outer.last().unwrap() {
                Region::RegionB
            } else {
                // o_k < c < o_{k+1}; compare with i_k in between
                let k = outer.iter().rposition(|&o| o < c).unwrap();
                if c < inner[k] {
                    Region::RegionB
                } else {
                    Region::RegionA
                }
            }
        })
        .collect()
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A rim-hook of a fixed shape, identified by its anchor cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    anchor: Cell,
    // north-east order, head first
    cells: Vec<Cell>,
    shape: Partition,
}

impl RimHook {
    pub fn anchor(&self) -> Cell {
        self.anchor
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// South-west end `α(h) = (λ'_j, j)`.
    pub fn head(&self) -> Cell {
        self.cells[0]
    }

    /// North-east end `ω(h) = (i, λ_i)`.
    pub fn tail(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, u: Cell) -> bool {
        self.cells.contains(&u)
    }

    /// Contents covered by the hook, `j − λ'_j ..= λ_i − i`.
    pub fn content_range(&self) -> std::ops::RangeInclusive<i32> {
        self.head().content()..=self.tail().content()
    }
}

/// The rim-hook order `h^u ≤ h^v ⟺ u ≤ v` in reverse lexicographic order.
pub fn rim_hook_compare(f: &RimHook, h: &RimHook) -> Result<Ordering> {
    if f.shape != h.shape {
        return Err(Error::ShapeMismatch {
            left: f.shape.clone(),
            right: h.shape.clone(),
        });
    }
    Ok(revlex_compare(f.anchor, h.anchor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(i: i32, j: i32) -> Cell {
        Cell::new(i, j)
    }

    fn all_partitions(max: usize) -> Vec<Partition> {
        partitions_up_to(max)
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,3,1").parts(), &[4, 3, 1]);
        assert_eq!(p("").parts(), &[] as &[usize]);
        assert_eq!(p("4,3,1").to_string(), "4,3,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert_eq!("(2,3)".parse::<Cell>().unwrap(), c(2, 3));
        assert_eq!(c(2, 3).to_string(), "(2,3)");
        assert!("(2,3,4)".parse::<Cell>().is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
        assert_eq!(p("1").conjugate(), p("1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_an_involution() {
        for lam in all_partitions(12) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().size(), lam.size());
        }
    }

    #[test]
    fn hook_lengths_of_431() {
        let lam = p("4,3,1");
        assert_eq!(lam.hook_length(c(1, 2)).unwrap(), 4);
        let hooks: Vec<usize> = lam.cells().map(|u| lam.hook_length(u).unwrap()).collect();
        assert_eq!(hooks, vec![6, 4, 3, 1, 4, 2, 1, 1]);
        assert!(lam.hook_length(c(2, 4)).is_err());
        for x in lam.outer_corners() {
            assert_eq!(lam.hook_length(x).unwrap(), 1);
        }
    }

    #[test]
    fn hook_length_counts_hook_cells() {
        for lam in all_partitions(10) {
            for u in lam.cells() {
                let arm = (u.col + 1..)
                    .take_while(|&j| lam.contains(c(u.row, j)))
                    .count();
                let leg = (u.row + 1..)
                    .take_while(|&i| lam.contains(c(i, u.col)))
                    .count();
                assert_eq!(lam.hook_length(u).unwrap(), arm + leg + 1);
            }
        }
    }

    #[test]
    fn corners_of_a_large_shape() {
        let lam = p("10,10,10,7,6,3,3,3");
        let k = lam.corners().unwrap();
        let outer: Vec<i32> = k.outer.iter().map(|u| u.content()).collect();
        let inner: Vec<i32> = k.inner.iter().map(|u| u.content()).collect();
        assert_eq!(outer, vec![-5, 1, 3, 7]);
        assert_eq!(inner, vec![-2, 2, 4]);
    }

    #[test]
    fn corners_small() {
        let k = p("5").corners().unwrap();
        assert_eq!(k.outer, vec![c(1, 5)]);
        assert!(k.inner.is_empty());
        let k = p("4,3,1").corners().unwrap();
        let outer: Vec<i32> = k.outer.iter().map(|u| u.content()).collect();
        let inner: Vec<i32> = k.inner.iter().map(|u| u.content()).collect();
        assert_eq!(outer, vec![-2, 1, 3]);
        assert_eq!(inner, vec![-1, 2]);
        assert_eq!(Partition::empty().corners(), Err(Error::EmptyPartition));
    }

    #[test]
    fn corner_contents_interleave() {
        for lam in all_partitions(12).into_iter().skip(1) {
            let k = lam.corners().unwrap();
            assert_eq!(k.outer.len(), k.inner.len() + 1);
            for (idx, i) in k.inner.iter().enumerate() {
                assert!(k.outer[idx].content() < i.content());
                assert!(i.content() < k.outer[idx + 1].content());
            }
            for u in lam.cells() {
                assert_eq!(lam.is_outer_corner(u), k.outer.contains(&u));
                assert_eq!(lam.is_inner_corner(u), k.inner.contains(&u));
            }
        }
    }

    #[test]
    fn regions() {
        let lam = p("10,10,10,7,6,3,3,3");
        assert_eq!(lam.region(c(8, 1)).unwrap(), Region::RegionA);
        assert_eq!(lam.region(c(5, 3)).unwrap(), Region::InnerDiag);
        assert_eq!(lam.region(c(5, 6)).unwrap(), Region::OuterDiag);
        // contents 5, 6 lie between i=4 and o=7; content 0 between i=-2 and
        // o=1; content -3 between o=-5 and i=-2
        assert_eq!(lam.region(c(1, 6)).unwrap(), Region::RegionA);
        assert_eq!(lam.region(c(1, 9)).unwrap(), Region::RegionB);
        assert_eq!(lam.region(c(3, 3)).unwrap(), Region::RegionA);
        assert_eq!(lam.region(c(5, 2)).unwrap(), Region::RegionB);

        let sq = p("3,3,3");
        for u in sq.cells() {
            let expect = match u.content().cmp(&0) {
                Ordering::Equal => Region::OuterDiag,
                Ordering::Greater => Region::RegionB,
                Ordering::Less => Region::RegionA,
            };
            assert_eq!(sq.region(u).unwrap(), expect);
        }
        assert!(sq.region(c(4, 1)).is_err());
    }

    #[test]
    fn revlex_order_of_431() {
        let order = p("4,3,1").cells_revlex();
        assert_eq!(
            order,
            vec![
                c(1, 4),
                c(2, 3),
                c(1, 3),
                c(2, 2),
                c(1, 2),
                c(3, 1),
                c(2, 1),
                c(1, 1)
            ]
        );
        assert_eq!(revlex_compare(c(2, 3), c(1, 3)), Ordering::Less);
        assert_eq!(revlex_compare(c(3, 1), c(2, 1)), Ordering::Less);
        assert_eq!(revlex_compare(c(2, 2), c(2, 2)), Ordering::Equal);
    }

    #[test]
    fn content_order_of_431() {
        let order = p("4,3,1").cells_content_order();
        assert_eq!(
            order,
            vec![
                c(1, 4),
                c(1, 3),
                c(2, 3),
                c(1, 2),
                c(2, 2),
                c(1, 1),
                c(2, 1),
                c(3, 1)
            ]
        );
        assert_eq!(content_compare(c(2, 3), c(1, 2)), Ordering::Less);
        assert_eq!(content_compare(c(1, 1), c(1, 1)), Ordering::Equal);
    }

    #[test]
    fn rim_hooks_of_431() {
        let lam = p("4,3,1");
        assert_eq!(
            lam.rim_hook(c(1, 3)).unwrap().cells(),
            &[c(2, 3), c(1, 3), c(1, 4)]
        );
        assert_eq!(lam.rim_hook(c(1, 4)).unwrap().cells(), &[c(1, 4)]);
        // listing in increasing order, as cell sets
        let listed: Vec<Vec<Cell>> = lam.rim_hooks().iter().map(|h| h.cells().to_vec()).collect();
        let expected = vec![
            vec![c(1, 4)],
            vec![c(2, 3)],
            vec![c(2, 3), c(1, 3), c(1, 4)],
            vec![c(2, 2), c(2, 3)],
            vec![c(2, 2), c(2, 3), c(1, 3), c(1, 4)],
            vec![c(3, 1)],
            vec![c(3, 1), c(2, 1), c(2, 2), c(2, 3)],
            vec![c(3, 1), c(2, 1), c(2, 2), c(2, 3), c(1, 3), c(1, 4)],
        ];
        assert_eq!(listed, expected);
    }

    #[test]
    fn rim_hook_order_small() {
        let lam = p("2,2");
        let hooks = lam.rim_hooks();
        let anchors: Vec<Cell> = hooks.iter().map(|h| h.anchor()).collect();
        assert_eq!(anchors, vec![c(2, 2), c(1, 2), c(2, 1), c(1, 1)]);
        assert_eq!(
            rim_hook_compare(&hooks[0], &hooks[0]).unwrap(),
            Ordering::Equal
        );
        let other = p("2,1").rim_hook(c(1, 1)).unwrap();
        assert!(rim_hook_compare(&hooks[0], &other).is_err());
    }

    #[test]
    fn rim_hook_invariants_exhaustive() {
        for lam in all_partitions(12) {
            let mut anchors = Vec::new();
            for u in lam.cells() {
                let h = lam.rim_hook(u).unwrap();
                anchors.push(h.anchor());
                assert_eq!(h.len(), lam.hook_length(u).unwrap());
                assert_eq!(h.head(), c(lam.col_len(u.col) as i32, u.col));
                assert_eq!(h.tail(), c(u.row, lam.row_len(u.row) as i32));
                assert!(!lam.contains(h.head().south()));
                assert!(!lam.contains(h.tail().east()));
                for w in h.cells().windows(2) {
                    assert!(w[1] == w[0].north() || w[1] == w[0].east());
                }
                for &v in h.cells() {
                    assert!(lam.contains(v));
                    assert!(!lam.contains(v.east().south()));
                    let r = lam.region(v).unwrap();
                    if r.is_inner_or_a() {
                        assert!(h.contains(v.east()), "{lam} {u} {v}");
                    }
                    if r.is_b_or_inner() {
                        assert!(h.contains(v.south()), "{lam} {u} {v}");
                    }
                }
                assert!(lam.region(h.head()).unwrap().is_a_or_outer());
                assert!(lam.region(h.tail()).unwrap().is_outer_or_b());
                assert_eq!(lam.anchor_for(h.tail(), h.len()), Some(u));
            }
            anchors.sort();
            anchors.dedup();
            assert_eq!(anchors.len(), lam.size());
            // the head/tail content criterion agrees with the anchor order
            let hooks = lam.rim_hooks();
            for f in &hooks {
                for h in &hooks {
                    let by_anchor = rim_hook_compare(f, h).unwrap() != Ordering::Greater;
                    let (fa, ha) = (f.head().content(), h.head().content());
                    let by_contents =
                        fa > ha || (fa == ha && f.tail().content() <= h.tail().content());
                    assert_eq!(by_anchor, by_contents);
                }
            }
        }
    }

    #[test]
    fn region_labels_cover_every_cell() {
        for lam in all_partitions(12).into_iter().skip(1) {
            for u in lam.cells() {
                assert!(lam.region(u).is_ok());
            }
        }
    }

    mod orders {
        use super::*;
        use proptest::prelude::*;

        fn cell() -> impl Strategy<Value = Cell> {
            (-5i32..8, -5i32..8).prop_map(|(i, j)| Cell::new(i, j))
        }

        proptest! {
            #[test]
            fn total_orders(a in cell(), b in cell(), d in cell()) {
                for cmp in [revlex_compare as fn(Cell, Cell) -> Ordering, content_compare] {
                    prop_assert_eq!(cmp(a, b), cmp(b, a).reverse());
                    prop_assert_eq!(cmp(a, b) == Ordering::Equal, a == b);
                    if cmp(a, b) != Ordering::Greater && cmp(b, d) != Ordering::Greater {
                        prop_assert!(cmp(a, d) != Ordering::Greater);
                    }
                }
            }
        }
    }
}
