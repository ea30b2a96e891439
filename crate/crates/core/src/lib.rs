//! Exact computations around the Markoff tree: Cohn matrices, Markoff forms
//! and their roots, continued-fraction digit streams, Lagrange values, and
//! the extremal numbers obtained as limits along maximal zigzags.

pub mod contfrac;
pub mod error;
pub mod exactnum;
pub mod extremal;
pub mod markoff;
pub mod spectrum;
pub mod words;

pub use error::{Error, Result};
