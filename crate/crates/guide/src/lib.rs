//! Doc-test shim for the guide.
//!
//! mdbook does not run a book's Rust snippets against the workspace
//! crates, so each chapter is included here as module documentation and
//! `cargo test --doc` picks every code block up. A snippet that drifts
//! from the library breaks the build.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod diagrams {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/measures.md")]
pub mod measures {}

#[doc = include_str!("../../../book/src/kerov.md")]
pub mod kerov {}

#[doc = include_str!("../../../book/src/sampling.md")]
pub mod sampling {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
