//! Compiles and runs the code blocks of the guide under `book/src` as
//! doctests, so the chapters cannot drift from the API.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/gyrogroups.md")]
pub mod gyrogroups {}

#[doc = include_str!("../../../book/src/linear-algebra.md")]
pub mod linear_algebra {}

#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}

#[doc = include_str!("../../../book/src/regular.md")]
pub mod regular {}

#[doc = include_str!("../../../book/src/modular.md")]
pub mod modular {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
