//! The guide under `book/`, compiled chapter by chapter as doc-tests so
//! `cargo test` keeps the book's code samples in sync with the library.
//! One module per chapter makes a failing snippet easy to locate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/arithmetic.md")]
pub mod arithmetic {}

#[doc = include_str!("../../../book/src/chow-rings.md")]
pub mod chow_rings {}

#[doc = include_str!("../../../book/src/characteristic-classes.md")]
pub mod characteristic_classes {}

#[doc = include_str!("../../../book/src/steenrod.md")]
pub mod steenrod_operations {}

#[doc = include_str!("../../../book/src/torsors.md")]
pub mod torsors {}

#[doc = include_str!("../../../book/src/milnor-k.md")]
pub mod milnor_k {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
