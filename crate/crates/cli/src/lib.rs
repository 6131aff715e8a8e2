//! Instance files, reports, the curated corpus and randomized sweeps for
//! `hilbound-core`.

pub mod corpus;
pub mod instance;
pub mod report;
pub mod reproduce;
pub mod search;

pub use instance::{InstanceError, InstanceFile};
pub use report::{run, Outcome, Overrides, RunError};
