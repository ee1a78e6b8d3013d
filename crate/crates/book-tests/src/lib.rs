//! Runs every Rust snippet in the guide as a doc-test, one module per chapter
//! so a failure points at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/quivers.md")]
pub mod quivers {}
#[doc = include_str!("../../../book/src/dimension.md")]
pub mod dimension {}
#[doc = include_str!("../../../book/src/facets.md")]
pub mod facets {}
#[doc = include_str!("../../../book/src/faces.md")]
pub mod faces {}
#[doc = include_str!("../../../book/src/symmetric.md")]
pub mod symmetric {}
#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
