//! Exact symbolic engine for a dynamical quantum group on GL(n).
//!
//! The algebra is generated by `n^2` generators `t_ij`, a localized inverse
//! determinant, and two moment maps of rational functions in dynamical
//! parameters. All arithmetic is exact; every identity the crate verifies
//! is checked as an equality of canonical normal forms.

pub mod scalars;

pub mod coalg;
pub mod extcorep;
pub mod hopf;
pub mod minors;
pub mod nfcore;
pub mod pairing;
pub mod report;
pub mod rmatrix;
pub mod suites;

pub use scalars::{CoeffFn, GaussRat, ShiftVector};
