//! Exact q-series computations: truncated theta identities, partition
//! function tables, combinatorial oracles, and inequality scanners.
//!
//! Everything is computed over exact coefficient rings (arbitrary-precision
//! integers, or bivariate integer polynomials for the identities with free
//! symbols), so a reported equality is an equality of integers, never an
//! approximation.
//!
//! The crate is organized bottom-up:
//!
//! - [`ring`] / [`bivar`] — coefficient rings;
//! - [`series`] — dense truncated power series in `q`;
//! - [`qobjects`] — q-shifted factorials, Gaussian binomials, sparse theta
//!   expansions;
//! - [`partitions`] — value tables by recurrence and by product expansion,
//!   cross-checked;
//! - [`combinatorics`] — brute-force enumeration oracles and the
//!   overpartition-shrinking map;
//! - [`identities`] — coefficientwise verification of the identity zoo;
//! - [`inequalities`] — sign and strictness scans over `(k, n)` grids.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so anything here may be shared freely across threads.

pub mod bivar;
pub mod combinatorics;
pub mod identities;
pub mod inequalities;
pub mod partitions;
pub mod qobjects;
pub mod ring;
pub mod series;

pub use bivar::BivarPoly;
pub use combinatorics::Overpartition;
pub use identities::{verify, IdentityId, IdentityReport};
pub use inequalities::{family_value, scan, FamilyId, InequalityReport};
pub use partitions::{
    pf_by_product, pf_by_recurrence, pf_crosscheck, pf_table_checked, PartitionFunctionId,
    ValueTable,
};
pub use qobjects::{poch, q_binomial, PochSpec, ThetaExpansion};
pub use ring::Ring;
pub use series::{IntSeries, TruncSeries};
