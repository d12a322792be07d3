//! Finn's unicycle-track construction: iterates the bicycle front-track map on
//! a flat bump and measures the resulting curves.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
pub mod error;
pub mod finn_map;
pub mod io;
pub mod jets;
pub mod metrics;
pub mod quad;
pub mod verify;

pub use error::{Error, Result};
