//! Exact symbolic computation for mod-p characteristic-class calculus:
//! truncated Chow rings of projective presets, Chern/Segre and related
//! multiplicative classes, Steenrod operations driven by divisor seeds,
//! Z/pZ-graded algebra analysis over finite fields, and Milnor K-theory
//! residue checks over F_q(t).
//!
//! The companion guide under `book/` walks through each subsystem; its code
//! snippets are compiled and run as doc-tests (see [`guide`]).

pub mod arith;
pub mod chow;
pub mod classes;
pub mod error;
pub mod expr;
pub mod guide;
pub mod input;
pub mod milnor;
pub mod mup;
pub mod steenrod;
pub mod suites;

pub use error::{Error, Result};
