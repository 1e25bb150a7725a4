//! Codes in graphs: construction, parameter computation and symmetry
//! verification for codes in Hamming, Johnson, Kneser, forms, Grassmann,
//! cycle and incidence graphs.
//!
//! Group actions compose left to right throughout: `x.compose(y)` acts as
//! `x` first, then `y`.

pub mod algebra;
pub mod battery;
pub mod budget;
pub mod codecore;
pub mod constructions;
pub mod error;
pub mod graphs;
pub mod structure;
pub mod symmetry;

pub use budget::Budget;
pub use error::{Error, Result};
