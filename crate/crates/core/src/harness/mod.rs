//! Group and algebra catalog, the verification suite and its reports.

mod catalog;
mod config;
mod fixtures;
pub mod oracles;
mod report;
mod suite;

pub use catalog::{catalog, parse_algebra, parse_group, AlgebraEntry, GroupEntry, CATALOG_NAMES};
pub use config::{Format, GroupSpec, SuiteConfig};
pub use fixtures::{FieldFixture, Fixtures, GroupFixture, FIELD_DEGREE, FIXTURES_PATH, UNNORMALIZED_ORDER_BOUND};
pub use report::{CheckRecord, Provenance, SuiteReport, Verdict};
pub use suite::{verify_builtin, verify_with};
