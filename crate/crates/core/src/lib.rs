//! Exact computation of Hilbert coefficients, Ratliff–Rush closures,
//! reduction numbers and associated graded invariants for ideals acting on
//! fractional modules over numerical semigroup rings `k[[S]]`, with `k = Q`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod bounds;
pub mod checks;
pub mod error;
pub mod graded;
pub mod hilbert;
pub mod module;
pub mod rational;
pub mod reductions;
pub mod semigroup;
pub mod valuation;

pub use analysis::{analyze, Analysis, AnalysisOptions, InstanceInvariants};
pub use bounds::{evaluate, BoundEntry, BoundReport, Characterization};
pub use error::{Error, Result};
pub use module::{FractionalModule, PowerCache, ValueSet};
pub use rational::Rational;
pub use semigroup::NumericalSemigroup;
pub use valuation::{reduce, standard_basis, truncated_solve, SeriesElement, StandardBasis};
