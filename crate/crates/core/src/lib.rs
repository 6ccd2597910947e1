//! Generalized complete elliptic integrals, generalized modular functions,
//! and an inequality certification harness for them.

// `!(x >= y)` is used throughout to reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod config;
pub mod elliptic;
pub mod error;
pub mod harness;
pub mod hypergeometric;
pub mod modular;
pub mod special;

pub use config::{EvalConfig, ModularSolveConfig};
pub use error::{Error, Result};
