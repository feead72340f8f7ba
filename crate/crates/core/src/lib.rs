//! Coverings of the k-subsets of `[n]` by non-trivial intersecting families
//! (equivalently, proper colorings of Kneser graphs without star colors).
//!
//! The crate builds and verifies the block construction of such coverings,
//! certifies the classical counting bounds with exact arithmetic, instruments
//! the set-cover and pair-decomposition machinery used to bound `n(k)` from
//! above, and searches for coverings at tiny parameters.

pub mod error;
pub mod bounds;
pub mod cli;
pub mod construction;
pub mod decompose;
pub mod graphs;
pub mod io;
pub mod report;
pub mod search;
pub mod sets;

pub use error::{Error, Result};
pub use sets::{Color, ElementSet, LabeledCover, SetFamily, TraceFamily, Universe};
