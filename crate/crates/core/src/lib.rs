//! Exact survival functions over a finite ground set `[n]`.
//!
//! The crate computes the standard survival function `α ↦ μ({x > α})` of a
//! nonnegative vector with respect to a monotone measure, and its
//! generalization built from a family of conditional aggregation operators.
//! It decides when the two coincide, checks the sufficient and necessary
//! conditions relating them, and searches for counterexamples.
//!
//! All arithmetic is exact over rationals; operators that need roots are
//! evaluated in floating point and must be given an explicit tolerance.

pub mod aggops;
pub mod characterize;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod io;
pub mod render;
pub mod setfun;
pub mod survival;
pub mod value;

pub use aggops::{CaoDescriptor, CollectionSpec, Fca, FamilySpec, XVector};
pub use error::{Error, Result};
pub use setfun::{GroundSet, MonotoneMeasure, Subset};
pub use survival::{gsf, step_compare, survival_standard, StepFn, StepOrder, SurvivalMethod};
pub use value::Value;
