//! Exact support-size uncertainty bounds for the Fourier transform on finite
//! abelian groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`groups`]: finite abelian groups, characters, subgroups, quotients.
//! * [`cyclo`]: exact arithmetic in cyclotomic fields and exact linear algebra.
//! * [`fourier`]: the transform, its inverse, supports, and the coset path.
//! * [`bounds`]: neighbouring divisors, `u(n, k)`, the hull polyline and the
//!   submultiplicativity sweep.
//! * [`search`]: the brute-force `theta(G, k)` oracle, minor certification and
//!   extremal constructions.
//! * [`report`] and [`cli`]: CSV/JSON output and the command-line front end.

pub mod bounds;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod fourier;
pub mod groups;
pub mod report;
pub mod search;

pub use error::{Error, Result};
