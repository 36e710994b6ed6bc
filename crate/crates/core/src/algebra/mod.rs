//! Exact arithmetic foundation: integer polynomials in one and two
//! variables, truncated rational power series, and the classical
//! combinatorial number sequences used throughout the crate.

mod numbers;
mod partitions;
mod poly;
mod series;

pub use numbers::{
    bell, binomial, eulerian, factorial, multinomial, partition_count, stirling1_unsigned,
    stirling2,
};
pub use partitions::{partitions, Partitions};
pub use poly::{BivarPoly, IntPoly, PolyJson};
pub use series::RatSeries;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Serializes big integers as decimal strings.
pub(crate) fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}
