//! Pak's corner toggle `ζ_{λ,x}` and the corner-peeling recursion `ξ_λ`.
//!
//! `ξ` is computed straight from the recursion, independently of
//! [`crate::insertion`], so comparing the two is a genuine differential test.

use crate::error::{Error, Result};
use crate::geometry::Cell;
use crate::rpp::{ExtValue, Rpp};
use crate::tableau::Tableau;

fn finite(v: ExtValue) -> u32 {
    match v {
        ExtValue::Finite(v) => v,
        ExtValue::Infinite => panic!("infinite value where a finite one is required"),
    }
}

fn require_corner(pi: &Rpp, x: Cell) -> Result<()> {
    if pi.shape().is_outer_corner(x) {
        Ok(())
    } else {
        Err(Error::NotAnOuterCorner {
            cell: x,
            shape: pi.shape().clone(),
        })
    }
}

/// `max{π(n x), π(w x)}`, the smallest value `x` could hold.
fn floor_at(pi: &Rpp, x: Cell) -> u32 {
    finite(pi.value_ext(x.north()).max(pi.value_ext(x.west())))
}

/// `ζ_{λ,x}`: removes the outer corner `x` and toggles the rest of its
/// diagonal by `u ↦ max{π(n u), π(w u)} + min{π(e u), π(s u)} − π(u)`.
pub fn zeta(pi: &Rpp, x: Cell) -> Result<Rpp> {
    require_corner(pi, x)?;
    let mu = pi.shape().remove_corner(x)?;
    let mut rows: Vec<Vec<u32>> = pi.rows().to_vec();
    let r = x.row as usize - 1;
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
    for u in pi.shape().diagonal(x.content()) {
        if u == x {
            continue;
        }
        // cells north-west of a corner on its diagonal have finite e and s
        let hi = pi.value_ext(u.east()).min(pi.value_ext(u.south()));
        assert!(hi != ExtValue::Infinite, "min of two infinities at {u}");
        let v = floor_at(pi, u) + finite(hi) - pi.at(u);
        rows[u.row as usize - 1][u.col as usize - 1] = v;
    }
    Rpp::new(mu, rows)
}

/// Whether `π ∈ RPP_{λ,x}`: `π(x) = max{π(n x), π(w x)}`.
pub fn in_rpp_lx(pi: &Rpp, x: Cell) -> Result<bool> {
    require_corner(pi, x)?;
    Ok(pi.at(x) == floor_at(pi, x))
}

/// `ξ_λ`, peeling the revlex-minimal outer corner at every step.
pub fn xi(pi: &Rpp) -> Tableau {
    xi_with(pi, |_| 0)
}

/// `ξ_λ` with the first corner fixed to `x`; later corners are revlex-minimal.
pub fn xi_via(pi: &Rpp, x: Cell) -> Result<Tableau> {
    require_corner(pi, x)?;
    let mut first = true;
    Ok(xi_with(pi, |corners| {
        if std::mem::take(&mut first) {
            corners.iter().position(|&c| c == x).expect("x is a corner")
        } else {
            0
        }
    }))
}

/// `ξ_λ` where `choose` picks the next corner's index among the current
/// outer corners, listed in revlex order.
pub fn xi_with(pi: &Rpp, mut choose: impl FnMut(&[Cell]) -> usize) -> Tableau {
    let mut t = Tableau::zero(pi.shape());
    let mut cur = pi.clone();
    while !cur.shape().is_empty() {
        let mut corners = cur.shape().outer_corners();
        corners.sort_by(|&a, &b| crate::geometry::revlex_compare(a, b));
        let x = corners[choose(&corners) % corners.len()];
        *t.at_mut(x) = cur.at(x) - floor_at(&cur, x);
        cur = zeta(&cur, x).expect("toggling a corner keeps a valid filling");
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_rpps, EnumBudget};
    use crate::geometry::Partition;
    use crate::insertion::factorize;

    fn rpp(rows: &[&[u32]]) -> Rpp {
        Rpp::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn c(i: i32, j: i32) -> Cell {
        Cell::new(i, j)
    }

    fn square_sample() -> Rpp {
        rpp(&[&[1, 1, 4], &[2, 3, 4], &[4, 4, 4]])
    }

    #[test]
    fn first_toggle_on_the_square() {
        let out = zeta(&square_sample(), c(3, 3)).unwrap();
        assert_eq!(out, rpp(&[&[0, 1, 4], &[2, 3, 4], &[4, 4]]));
        assert!(in_rpp_lx(&square_sample(), c(3, 3)).unwrap());
    }

    #[test]
    fn corner_peeling_chain() {
        // corners peeled in the order shown: (3,3), (2,3), (1,3), (3,2), (2,2), ...
        let seq = [c(3, 3), c(2, 3), c(1, 3), c(3, 2), c(2, 2)];
        let mut cur = square_sample();
        for x in seq {
            assert_eq!(cur.shape().revlex_min_corner(), Some(x));
            cur = zeta(&cur, x).unwrap();
        }
        let t = xi(&square_sample());
        assert_eq!(t.rows(), &[vec![1, 1, 2], vec![0, 1, 0], vec![3, 0, 0]]);
        assert_eq!(factorize(&square_sample()).tableau(), t);
    }

    #[test]
    fn trivia() {
        let shape: Partition = "3,2".parse().unwrap();
        let zero = Rpp::zero(&shape);
        assert_eq!(
            zeta(&zero, c(2, 2)).unwrap(),
            Rpp::zero(&"3,1".parse().unwrap())
        );
        assert!(xi(&zero).is_zero());
        for x in shape.outer_corners() {
            assert!(in_rpp_lx(&zero, x).unwrap());
        }
        let single = rpp(&[&[5]]);
        let out = zeta(&single, c(1, 1)).unwrap();
        assert!(out.shape().is_empty());
        assert_eq!(xi(&single).rows(), &[vec![5]]);
        assert!(!in_rpp_lx(&rpp(&[&[0, 1], &[1, 2]]), c(2, 2)).unwrap());
        assert!(matches!(
            zeta(&zero, c(1, 1)),
            Err(Error::NotAnOuterCorner { .. })
        ));
        assert!(in_rpp_lx(&zero, c(1, 2)).is_err());
    }

    #[test]
    fn zeta_fixes_other_diagonals() {
        let shape: Partition = "4,3,1".parse().unwrap();
        for pi in enumerate_rpps(&shape, 6, &EnumBudget::default()).unwrap() {
            for x in shape.outer_corners() {
                let out = zeta(&pi, x).unwrap();
                for u in out.shape().cells() {
                    if u.content() != x.content() {
                        assert_eq!(out.get(u), pi.get(u));
                    }
                }
                assert_eq!(
                    in_rpp_lx(&pi, x).unwrap(),
                    xi_via(&pi, x).unwrap().get(x) == Some(0)
                );
            }
        }
    }

    #[test]
    fn matches_factorisation_and_is_corner_independent() {
        for shape in ["2,2", "3,2", "3,3,3", "4,3,1", "5,2,1,1"] {
            let shape: Partition = shape.parse().unwrap();
            for pi in enumerate_rpps(&shape, 5, &EnumBudget::default()).unwrap() {
                let t = xi(&pi);
                assert_eq!(t, factorize(&pi).tableau());
                for x in shape.outer_corners() {
                    assert_eq!(xi_via(&pi, x).unwrap(), t);
                }
                // always the last corner instead of the first
                assert_eq!(xi_with(&pi, |cs| cs.len() - 1), t);
            }
        }
    }
}
