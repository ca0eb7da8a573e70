//! Rim-hook insertion into reverse plane partitions.
//!
//! The crate implements the insertion `h * π` of a rim-hook into a reverse
//! plane partition and the bijection it induces between reverse plane
//! partitions of shape `λ` and multisets of rim-hooks of `λ` (stored as
//! [`Tableau`]s). Around it sit Pak's corner-toggle recursion, Hillman–Grassl,
//! RSK, and exact truncated series that check the Stanley and Gansner
//! hook-product formulas against brute-force enumeration.

pub mod classical;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod geometry;
pub mod insertion;
pub mod pakmap;
pub mod path;
pub mod rpp;
pub mod series;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{Cell, Partition, Region, RimHook};
pub use insertion::{build, factorize, try_insert, Factorization, Insertion};
pub use path::{LatticePath, Orientation};
pub use rpp::{ExtValue, Rpp};
pub use tableau::Tableau;
