//! Tiered trees, their weight statistic, and the q-Eulerian polynomials
//! built from weighted maxmin trees.
//!
//! Everything is computed with exact arithmetic: big integers for counts and
//! polynomial coefficients, big rationals for power series.
//!
//! Module map:
//! - [`algebra`]: polynomials, truncated series, classical number sequences.
//! - [`trees`]: tiered trees, complete tiered graphs and exhaustive enumeration.
//! - [`weight`]: the weight recursion, Tutte activities and generating polynomials.
//! - [`counting`]: closed-form and generating-function counts of tiered trees.
//! - [`bijections`]: permutations, cycle insertion and complete nonambiguous trees.
//! - [`permweight`]: weights of permutations and the polynomials `E_n(x, q)`.
//! - [`verify`]: the check suites driven by the command-line `verify` command.

pub mod algebra;
pub mod bijections;
pub mod counting;
mod error;
pub mod permweight;
pub mod trees;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};

/// Default vertex limit for exhaustive tree enumeration.
pub const TREE_CAPACITY: usize = 7;
/// Limit on `n` and `m` for the closed-form count, a sum over weak compositions.
pub const COUNT_CAPACITY: usize = 12;
/// Default length limit for full sweeps over the symmetric group.
pub const PERM_CAPACITY: usize = 9;
/// Default internal-vertex limit for complete nonambiguous tree enumeration.
pub const CNAT_CAPACITY: usize = 5;
