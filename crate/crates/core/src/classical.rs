//! Hillman–Grassl, RSK, Greene–Kleitman chain statistics, and their relation
//! to the rim-hook bijection.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Cell, Partition};
use crate::insertion::build;
use crate::rpp::Rpp;
use crate::tableau::Tableau;

/// Hillman–Grassl: repeatedly strip a hook path and record its hook.
///
/// Each round starts at the bottom of the leftmost column `s` holding a
/// nonzero entry, walks north while the entry above is equal and east
/// otherwise, stops at the end `(f, λ_f)` of a row, subtracts one along the
/// path and records the hook `(f, s)`.
pub fn hg(pi: &Rpp) -> Tableau {
    hg_with_order(pi).0
}

/// As [`hg`], also returning the recorded hooks in extraction order.
pub fn hg_with_order(pi: &Rpp) -> (Tableau, Vec<Cell>) {
    let shape = pi.shape().clone();
    let mut cur = pi.clone();
    let mut t = Tableau::zero(&shape);
    let mut order = Vec::new();
    let width = shape.row_len(1) as i32;
    let mut s = 1;
    while s <= width {
        let bottom = Cell::new(shape.col_len(s) as i32, s);
        // the bottom of a column holds its largest entry
        if cur.at(bottom) == 0 {
            s += 1;
            continue;
        }
        let mut u = bottom;
        let mut path = vec![u];
        loop {
            if cur.value_ext(u.north()) == cur.value_ext(u) {
                u = u.north();
            } else if shape.contains(u.east()) {
                u = u.east();
            } else {
                break;
            }
            path.push(u);
        }
        for &v in &path {
            *cur.at_mut(v) -= 1;
        }
        let hook = Cell::new(u.row, s);
        debug_assert_eq!(path.len(), shape.hook_length_unchecked(hook));
        *t.at_mut(hook) += 1;
        order.push(hook);
    }
    debug_assert!(cur.is_zero());
    (t, order)
}

/// Inverse of [`hg`]: replays the hooks in reverse extraction order (columns
/// right to left, rows top to bottom), each time walking from `(f, λ_f)`
/// south along equal entries and west otherwise until column `s`, then adding
/// one along the walk.
pub fn hg_inv(t: &Tableau) -> Rpp {
    let shape = t.shape().clone();
    let mut hooks: Vec<Cell> = shape.cells().collect();
    hooks.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    let mut pi = Rpp::zero(&shape);
    for hook in hooks {
        for _ in 0..t.at(hook) {
            let mut u = Cell::new(hook.row, shape.row_len(hook.row) as i32);
            let mut path = vec![u];
            loop {
                if pi.value_ext(u.south()) == pi.value_ext(u) {
                    u = u.south();
                } else if u.col == hook.col {
                    break;
                } else {
                    u = u.west();
                }
                path.push(u);
            }
            debug_assert_eq!(path.len(), shape.hook_length_unchecked(hook));
            for &v in &path {
                *pi.at_mut(v) += 1;
            }
        }
    }
    debug_assert!(Rpp::new(shape, pi.rows().to_vec()).is_ok());
    pi
}

/// Two-line array of a tableau: `(i, j)` repeated `t(i, j)` times, sorted.
pub fn biword(t: &Tableau) -> Vec<(u32, u32)> {
    t.shape()
        .cells()
        .flat_map(|u| std::iter::repeat_n((u.row as u32, u.col as u32), t.at(u) as usize))
        .collect()
}

/// Insertion tableau `P` and recording tableau `Q`, both semistandard.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsytPair {
    pub p: Rpp,
    pub q: Rpp,
}

impl SsytPair {
    pub fn shape(&self) -> &Partition {
        self.p.shape()
    }

    /// Both tableaux transposed.
    pub fn conjugate(&self) -> SsytPair {
        SsytPair {
            p: transpose(&self.p),
            q: transpose(&self.q),
        }
    }
}

/// The entrywise transpose of a filling, on the conjugate shape.
pub fn transpose(pi: &Rpp) -> Rpp {
    let conj = pi.shape().conjugate();
    let rows = conj
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &len)| (0..len).map(|i| pi.rows()[i][j]).collect())
        .collect();
    Rpp::new(conj, rows).expect("transposing keeps monotonicity")
}

/// Row-inserts `x`; returns the row (0-based) that grew.
fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

fn rows_to_rpp(rows: Vec<Vec<u32>>) -> Rpp {
    Rpp::from_rows(rows).expect("insertion keeps a semistandard tableau")
}

/// RSK by row insertion of the biword's bottom line, recording the top line.
pub fn rsk(t: &Tableau) -> SsytPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (i, j) in biword(t) {
        let r = row_insert(&mut p, j);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i);
    }
    SsytPair {
        p: rows_to_rpp(p),
        q: rows_to_rpp(q),
    }
}

/// Positive entries, strictly increasing down columns.
pub fn is_semistandard(pi: &Rpp) -> bool {
    pi.shape().cells().all(|u| {
        let v = pi.at(u);
        v >= 1 && (u.row == 1 || pi.at(u.north()) < v)
    })
}

/// Inverse of [`rsk`], producing a tableau on `shape`.
pub fn rsk_inv(pair: &SsytPair, shape: &Partition) -> Result<Tableau> {
    if pair.p.shape() != pair.q.shape() {
        return Err(Error::ShapeMismatch {
            left: pair.p.shape().clone(),
            right: pair.q.shape().clone(),
        });
    }
    for (name, x) in [("P", &pair.p), ("Q", &pair.q)] {
        if !is_semistandard(x) {
            return Err(Error::NotSemistandard(format!(
                "{name} is not column-strict"
            )));
        }
    }
    let mut p: Vec<Vec<u32>> = pair.p.rows().to_vec();
    let mut q: Vec<Vec<u32>> = pair.q.rows().to_vec();
    let mut t = Tableau::zero(shape);
    while !q.is_empty() {
        // the largest entry of Q, rightmost copy, sits at a corner
        let (r, _) = q
            .iter()
            .enumerate()
            .map(|(r, row)| (r, *row.last().unwrap()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .unwrap();
        let i = q[r].pop().unwrap();
        let mut x = p[r].pop().unwrap();
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        for row in p[..r].iter_mut().rev() {
            let k = row.iter().rposition(|&y| y < x).expect("column-strict");
            x = std::mem::replace(&mut row[k], x);
        }
        let cell = Cell::new(i as i32, x as i32);
        if !shape.contains(cell) {
            return Err(Error::CellOutsideShape {
                cell,
                shape: shape.clone(),
            });
        }
        *t.at_mut(cell) += 1;
    }
    Ok(t)
}

/// Nonzero entries of diagonal `k`, sorted decreasingly.
pub fn diag_partition(pi: &Rpp, k: i32) -> Partition {
    let mut parts: Vec<usize> = pi
        .diagonal_entries(k)
        .into_iter()
        .filter(|&v| v > 0)
        .map(|v| v as usize)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted positive parts")
}

/// `R_k`: cells weakly north-west of the south-easternmost cell of content `k`.
pub fn rectangle(shape: &Partition, k: i32) -> Vec<Cell> {
    match shape.diagonal_end(k) {
        None => Vec::new(),
        Some(end) => shape
            .cells()
            .filter(|u| u.row <= end.row && u.col <= end.col)
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainKind {
    /// Rows and columns weakly increase; cells may repeat.
    WeakSouthEast,
    /// Rows strictly decrease while columns strictly increase.
    StrictNorthEast,
}

impl ChainKind {
    fn precedes(self, y: Cell, x: Cell) -> bool {
        match self {
            ChainKind::WeakSouthEast => y.row <= x.row && y.col <= x.col,
            ChainKind::StrictNorthEast => y.row > x.row && y.col < x.col,
        }
    }
}

/// Largest `|C_1| + … + |C_r|` over families of `r` chains of the given kind in
/// `R_k` that use each cell `u` at most `t(u)` times, by exhaustive search.
/// Refuses when the projected search exceeds `budget` assignments.
pub fn gk_chain_max(t: &Tableau, k: i32, r: usize, kind: ChainKind, budget: u128) -> Result<u64> {
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    let mut elems: Vec<Cell> = Vec::new();
    for u in rectangle(t.shape(), k) {
        elems.extend(std::iter::repeat_n(u, t.at(u) as usize));
    }
    // a linear extension of the chain order
    match kind {
        ChainKind::WeakSouthEast => elems.sort(),
        ChainKind::StrictNorthEast => {
            elems.sort_by(|a, b| a.col.cmp(&b.col).then(b.row.cmp(&a.row)))
        }
    }
    let r = r.min(elems.len().max(1));
    let projected = (r as u128 + 1)
        .checked_pow(elems.len() as u32)
        .unwrap_or(u128::MAX);
    if projected > budget {
        return Err(Error::BudgetExceeded {
            projected,
            ceiling: budget,
        });
    }

    fn search(elems: &[Cell], kind: ChainKind, lasts: &mut Vec<Option<Cell>>) -> u64 {
        let Some((&x, rest)) = elems.split_first() else {
            return 0;
        };
        let mut best = search(rest, kind, lasts);
        let mut tried_empty = false;
        for c in 0..lasts.len() {
            let ok = match lasts[c] {
                None if tried_empty => false,
                None => {
                    tried_empty = true;
                    true
                }
                Some(y) => kind.precedes(y, x),
            };
            if ok {
                let prev = lasts[c].replace(x);
                best = best.max(1 + search(rest, kind, lasts));
                lasts[c] = prev;
            }
        }
        best
    }

    Ok(search(&elems, kind, &mut vec![None; r]))
}

/// RSK shape of `t` restricted to `R_k`. By Greene's theorem its partial
/// sums are the weak south-east maxima and those of its conjugate the strict
/// north-east maxima.
pub fn gk_rsk_shape(t: &Tableau, k: i32) -> Partition {
    let mut restricted = Tableau::zero(t.shape());
    for u in rectangle(t.shape(), k) {
        *restricted.at_mut(u) = t.at(u);
    }
    rsk(&restricted).shape().clone()
}

fn is_square(shape: &Partition) -> Option<usize> {
    let n = shape.len();
    shape.parts().iter().all(|&p| p == n).then_some(n)
}

/// Checks that `Φ ∘ HG(π)` carries in each diagonal the conjugate of the
/// partition in the same diagonal of `π`, for square `π` with
/// `tr_k = tr_{−k} = n − k`.
pub fn check_syt(pi: &Rpp) -> Result<bool> {
    let n = is_square(pi.shape())
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Precondition(format!("shape {} is not a square", pi.shape())))?;
    for k in 0..n as i32 {
        let want = (n as i32 - k) as u64;
        if pi.trace(k) != want || pi.trace(-k) != want {
            return Err(Error::Precondition(format!(
                "traces at ±{k} must both be {want}"
            )));
        }
    }
    let rho = build(&hg(pi));
    Ok((1 - n as i32..n as i32)
        .all(|k| diag_partition(&rho, k) == diag_partition(pi, k).conjugate()))
}

/// Whether `t` is a square 0/1 matrix with exactly one 1 per row and column.
pub fn is_permutation_matrix(t: &Tableau) -> bool {
    let Some(n) = is_square(t.shape()) else {
        return false;
    };
    let rows = t.rows();
    rows.iter()
        .all(|r| r.iter().all(|&v| v <= 1) && r.iter().sum::<u32>() == 1)
        && (0..n).all(|j| rows.iter().map(|r| r[j]).sum::<u32>() == 1)
}

/// Matrix of a permutation in one-line notation: `σ(i, w_i) = 1`.
pub fn permutation_matrix(w: &[usize]) -> Result<Tableau> {
    let n = w.len();
    let mut seen = vec![false; n];
    for &x in w {
        if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
            return Err(Error::NotAPermutationMatrix);
        }
    }
    let rows = w
        .iter()
        .map(|&x| (1..=n).map(|j| (j == x) as u32).collect())
        .collect();
    Tableau::new(Partition::square(n), rows)
}

/// Parses one-line notation such as `3,1,2`.
pub fn parse_permutation(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse()
                .map_err(|_| Error::Parse(format!("bad permutation entry {x:?}")))
        })
        .collect()
}

/// `HG ∘ Φ`.
pub fn hg_phi(t: &Tableau) -> Tableau {
    hg(&build(t))
}

/// Checks `RSK ∘ HG ∘ Φ(σ) = (P′, Q′)` where `RSK(σ) = (P, Q)`.
pub fn check_rsk_theorem(sigma: &Tableau) -> Result<bool> {
    if !is_permutation_matrix(sigma) {
        return Err(Error::NotAPermutationMatrix);
    }
    Ok(rsk(&hg_phi(sigma)) == rsk(sigma).conjugate())
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x + 1);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Trace vector keyed by content, for reporting.
pub fn trace_map(pi: &Rpp) -> BTreeMap<i32, u64> {
    (pi.shape().min_content()..=pi.shape().max_content())
        .map(|k| (k, pi.trace(k)))
        .collect()
}
