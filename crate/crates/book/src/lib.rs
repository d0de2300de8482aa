//! The `theta-trace` guide. Each module holds one chapter, so that its code
//! listings run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/burnside.md")]
pub mod burnside {}

#[doc = include_str!("../../../book/src/representations.md")]
pub mod representations {}

#[doc = include_str!("../../../book/src/cyclic-homology.md")]
pub mod cyclic_homology {}

#[doc = include_str!("../../../book/src/trace.md")]
pub mod trace {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
