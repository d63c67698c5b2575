//! The chapters of the guide in `book/src`, one module each, so that
//! `cargo test` runs their code blocks as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/trees.md")]
pub mod trees {}

#[doc = include_str!("../../../book/src/balance.md")]
pub mod balance {}

#[doc = include_str!("../../../book/src/equitable.md")]
pub mod equitable {}

#[doc = include_str!("../../../book/src/random-trees.md")]
pub mod random_trees {}

#[doc = include_str!("../../../book/src/experiments.md")]
pub mod experiments {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
