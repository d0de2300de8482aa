pub mod error;
pub mod exactla;
pub mod burnside;
pub mod cyclic;
pub mod grp;
pub mod harness;
pub mod rep;
pub mod trace;

pub use error::{Error, Result};
