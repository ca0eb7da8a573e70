//! Rim-hook insertion `h * π` and its inverse.
//!
//! Insertion walks a south-west path `P(h, π)` from the tail of `h` and adds
//! one along it; extraction walks a north-east path `Q(v, π)` from a candidate
//! `v` and subtracts one. Both walks are greedy and deterministic: at every
//! cell exactly one of the two step rules applies, so no tie-breaking is ever
//! needed.
//!
//! Repeatedly extracting from the content-minimal candidate yields the unique
//! weakly increasing factorisation `π = h_1 * h_2 * … * h_s * 0`; [`build`]
//! inverts it by inserting `h_s` first and `h_1` last.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{content_compare, revlex_compare, Cell, Partition, RimHook};
use crate::path::{LatticePath, Orientation};
use crate::rpp::Rpp;
use crate::tableau::{self, Tableau};

/// Compatibility of a path with `π`: along `cells`, every `I ∪ A` cell continues east
/// at equal value, and every south step is flat.
pub fn is_compatible(path: &LatticePath, pi: &Rpp) -> Result<bool> {
    if let Some(&u) = path.cells().iter().find(|&&u| !pi.shape().contains(u)) {
        return Err(Error::PathLeavesShape { cell: u });
    }
    Ok(compatible_cells(path.cells(), pi))
}

/// As [`is_compatible`] for a cell set known to lie in the shape.
pub fn compatible_cells(cells: &[Cell], pi: &Rpp) -> bool {
    let shape = pi.shape();
    cells.iter().all(|&u| {
        let v = pi.at(u);
        if shape.region_unchecked(u).is_inner_or_a() {
            let e = u.east();
            if !cells.contains(&e) || pi.at(e) != v {
                return false;
            }
        }
        let s = u.south();
        !cells.contains(&s) || pi.at(s) == v
    })
}

/// Whether `π + P` stays a reverse plane partition. Only entries next to `P`
/// can break monotonicity, and only towards the east and south.
pub fn plus_is_rpp(cells: &[Cell], pi: &Rpp) -> bool {
    let shape = pi.shape();
    cells.iter().all(|&u| {
        let v = pi.at(u);
        [u.east(), u.south()]
            .into_iter()
            .all(|x| !shape.contains(x) || cells.contains(&x) || v < pi.at(x))
    })
}

/// Whether `π − Q` stays a reverse plane partition.
pub fn minus_is_rpp(cells: &[Cell], pi: &Rpp) -> bool {
    let shape = pi.shape();
    cells.iter().all(|&u| {
        let v = pi.at(u);
        v >= 1
            && [u.west(), u.north()]
                .into_iter()
                .all(|x| !shape.contains(x) || cells.contains(&x) || pi.at(x) < v)
    })
}

fn add_along(pi: &Rpp, cells: &[Cell]) -> Rpp {
    let mut out = pi.clone();
    for &u in cells {
        *out.at_mut(u) += 1;
    }
    out
}

fn sub_along(pi: &Rpp, cells: &[Cell]) -> Rpp {
    let mut out = pi.clone();
    for &u in cells {
        *out.at_mut(u) -= 1;
    }
    out
}

fn check_hook_shape(h: &RimHook, pi: &Rpp) -> Result<()> {
    if h.shape() != pi.shape() {
        return Err(Error::ShapeMismatch {
            left: h.shape().clone(),
            right: pi.shape().clone(),
        });
    }
    Ok(())
}

/// Cells of `P(h^anchor, π)`, tail first. The walk may leave the diagram to
/// the west; it never leaves it to the south, since the entry below the
/// diagram is infinite.
pub fn insertion_cells(pi: &Rpp, anchor: Cell) -> Vec<Cell> {
    let shape = pi.shape();
    let len = shape.hook_length_unchecked(anchor);
    let mut u = shape.rim_tail(anchor);
    let mut cells = Vec::with_capacity(len);
    cells.push(u);
    while cells.len() < len {
        let down = shape.contains(u)
            && shape.region_unchecked(u).is_b_or_inner()
            && pi.value_ext(u) == pi.value_ext(u.south());
        u = if down { u.south() } else { u.west() };
        cells.push(u);
    }
    cells
}

/// The insertion path `P(h, π)`; defined even when insertion fails.
pub fn insertion_path(h: &RimHook, pi: &Rpp) -> Result<LatticePath> {
    check_hook_shape(h, pi)?;
    Ok(LatticePath::from_parts_unchecked(
        insertion_cells(pi, h.anchor()),
        Orientation::SouthWest,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailureReason {
    /// The path walked past the left edge of the diagram.
    LeavesShape { cell: Cell },
    /// The path is not compatible with `π`.
    Incompatible,
    /// `π + P` is not monotone.
    NotReversePlanePartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsertFailure {
    pub path: LatticePath,
    pub reason: FailureReason,
    /// A candidate strictly before the head of the path in content order.
    /// Always present; `None` would contradict the theory.
    pub witness: Option<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insertion {
    Inserted { path: LatticePath, result: Rpp },
    Failed(InsertFailure),
}

impl Insertion {
    pub fn ok(self) -> Option<Rpp> {
        match self {
            Insertion::Inserted { result, .. } => Some(result),
            Insertion::Failed(_) => None,
        }
    }

    pub fn is_inserted(&self) -> bool {
        matches!(self, Insertion::Inserted { .. })
    }

    pub fn path(&self) -> &LatticePath {
        match self {
            Insertion::Inserted { path, .. } => path,
            Insertion::Failed(f) => &f.path,
        }
    }
}

/// Inserts the rim-hook anchored at `anchor` into `π`.
pub fn try_insert_at(pi: &Rpp, anchor: Cell) -> Result<Insertion> {
    if !pi.shape().contains(anchor) {
        return Err(Error::CellOutsideShape {
            cell: anchor,
            shape: pi.shape().clone(),
        });
    }
    let cells = insertion_cells(pi, anchor);
    let shape = pi.shape();
    let reason = if let Some(&u) = cells.iter().find(|&&u| !shape.contains(u)) {
        Some(FailureReason::LeavesShape { cell: u })
    } else if !compatible_cells(&cells, pi) {
        Some(FailureReason::Incompatible)
    } else if !plus_is_rpp(&cells, pi) {
        Some(FailureReason::NotReversePlanePartition)
    } else {
        None
    };
    let path = LatticePath::from_parts_unchecked(cells, Orientation::SouthWest);
    Ok(match reason {
        None => Insertion::Inserted {
            result: add_along(pi, path.cells()),
            path,
        },
        Some(reason) => {
            let head = path.head();
            let witness = pi
                .min_candidate()
                .filter(|&u| content_compare(u, head).is_lt());
            Insertion::Failed(InsertFailure {
                path,
                reason,
                witness,
            })
        }
    })
}

/// `h * π`, or a failure report carrying a candidate before `α(P(h, π))`.
pub fn try_insert(h: &RimHook, pi: &Rpp) -> Result<Insertion> {
    check_hook_shape(h, pi)?;
    try_insert_at(pi, h.anchor())
}

/// Cells of `Q(v, π)` from `v` north-east; `v` must be a candidate.
pub fn extraction_cells(pi: &Rpp, v: Cell) -> Vec<Cell> {
    let shape = pi.shape();
    let mut u = v;
    let mut cells = vec![u];
    loop {
        let region = shape.region_unchecked(u);
        let flat_north = pi.value_ext(u) == pi.value_ext(u.north());
        if region.is_outer_or_b() && flat_north {
            u = u.north();
        } else if region.is_inner_or_a() || shape.contains(u.east()) {
            u = u.east();
        } else {
            return cells;
        }
        // entries along the walk stay positive, so it never passes row 1
        debug_assert!(shape.contains(u), "extraction left the shape at {u}");
        cells.push(u);
    }
}

/// The extraction path `Q(v, π)`.
pub fn extraction_path(v: Cell, pi: &Rpp) -> Result<LatticePath> {
    if !pi.is_candidate(v) {
        return Err(Error::NotACandidate { cell: v });
    }
    Ok(LatticePath::from_parts_unchecked(
        extraction_cells(pi, v),
        Orientation::NorthEast,
    ))
}

/// The rim-hook `h(v, π)` with the same tail and cell count as `Q`.
pub fn rim_hook_of_path(shape: &Partition, q: &LatticePath) -> Result<RimHook> {
    let (tail, len) = (q.tail(), q.len());
    let anchor = shape
        .anchor_for(tail, len)
        .ok_or(Error::NoMatchingRimHook { tail, len })?;
    shape.rim_hook(anchor)
}

fn anchor_of_cells(shape: &Partition, cells: &[Cell]) -> Option<Cell> {
    shape.anchor_for(*cells.last()?, cells.len())
}

/// Whether `h` is a factor of `π`: some candidate `v` has `h(v, π) = h`
/// with `Q(v, π)` compatible and `π − Q(v, π)` monotone.
pub fn is_factor(h: &RimHook, pi: &Rpp) -> Result<bool> {
    check_hook_shape(h, pi)?;
    Ok(factor_anchors(pi).contains(&h.anchor()))
}

/// Anchors of all factors of `π`, ascending in rim-hook order.
pub fn factor_anchors(pi: &Rpp) -> Vec<Cell> {
    let mut out: Vec<Cell> = pi
        .candidates()
        .into_iter()
        .filter_map(|v| {
            let q = extraction_cells(pi, v);
            (compatible_cells(&q, pi) && minus_is_rpp(&q, pi))
                .then(|| anchor_of_cells(pi.shape(), &q))
                .flatten()
        })
        .collect();
    out.sort_by(|&a, &b| revlex_compare(a, b));
    out.dedup();
    out
}

/// One step of the lexicographic factorisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionStep {
    pub candidate: Cell,
    pub path: LatticePath,
    pub anchor: Cell,
    pub result: Rpp,
}

fn extract_min_step(pi: &Rpp) -> Option<ExtractionStep> {
    let v = pi.min_candidate()?;
    let cells = extraction_cells(pi, v);
    let anchor = anchor_of_cells(pi.shape(), &cells)
        .unwrap_or_else(|| panic!("no rim-hook matches Q({v}, π) for π =\n{pi}"));
    debug_assert!(compatible_cells(&cells, pi) && minus_is_rpp(&cells, pi));
    let result = sub_along(pi, &cells);
    Some(ExtractionStep {
        candidate: v,
        path: LatticePath::from_parts_unchecked(cells, Orientation::NorthEast),
        anchor,
        result,
    })
}

/// Extracts along the content-minimal candidate: `(h(v, π), π − Q(v, π))`.
pub fn extract_min(pi: &Rpp) -> Option<(RimHook, Rpp)> {
    extract_min_step(pi).map(|s| {
        let h = pi
            .shape()
            .rim_hook(s.anchor)
            .expect("anchor lies in the shape");
        (h, s.result)
    })
}

/// Anchors `h_1 ≤ … ≤ h_s` of the lexicographic factorisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub shape: Partition,
    pub anchors: Vec<Cell>,
}

impl Factorization {
    pub fn tableau(&self) -> Tableau {
        Tableau::from_anchors(&self.shape, &self.anchors).expect("anchors lie in the shape")
    }

    pub fn hooks(&self) -> Vec<RimHook> {
        self.anchors
            .iter()
            .map(|&u| self.shape.rim_hook(u).expect("anchor lies in the shape"))
            .collect()
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.anchors
            .windows(2)
            .all(|w| revlex_compare(w[0], w[1]).is_le())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&tableau::anchors_to_string(&self.anchors))
    }
}

/// The steps of the lexicographic factorisation, in extraction order.
pub fn factorize_steps(pi: &Rpp) -> Vec<ExtractionStep> {
    let mut steps: Vec<ExtractionStep> = Vec::new();
    let mut cur = pi.clone();
    while let Some(step) = extract_min_step(&cur) {
        cur = step.result.clone();
        steps.push(step);
    }
    steps
}

/// `Φ⁻¹`: the lexicographic factorisation of `π`.
pub fn factorize(pi: &Rpp) -> Factorization {
    let mut anchors = Vec::new();
    let mut cur = pi.clone();
    while let Some(step) = extract_min_step(&cur) {
        anchors.push(step.anchor);
        cur = step.result;
    }
    Factorization {
        shape: pi.shape().clone(),
        anchors,
    }
}

/// `Φ`: sorts the anchors increasingly and inserts from the largest down.
///
/// # Panics
/// If an insertion fails; lexicographic insertion into zero always succeeds.
pub fn build_from_anchors(shape: &Partition, anchors: &[Cell]) -> Result<Rpp> {
    let mut sorted = anchors.to_vec();
    tableau::sort_anchors(&mut sorted);
    let mut pi = Rpp::zero(shape);
    for (step, &u) in sorted.iter().enumerate().rev() {
        pi = match try_insert_at(&pi, u)? {
            Insertion::Inserted { result, .. } => result,
            Insertion::Failed(f) => panic!(
                "lexicographic insertion failed: shape {shape}, anchors {sorted:?}, \
                 step {step} ({u}), into\n{pi}reason {:?}, path {}",
                f.reason, f.path
            ),
        };
    }
    Ok(pi)
}

/// `Φ` on a tableau.
pub fn build(t: &Tableau) -> Rpp {
    build_from_anchors(t.shape(), &t.anchors()).expect("tableau anchors lie in the shape")
}
