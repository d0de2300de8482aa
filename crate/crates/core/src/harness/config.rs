use serde::{Deserialize, Serialize};

use super::catalog::{catalog, GroupEntry};
use crate::cyclic::Budget;
use crate::grp::GroupDescriptor;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    #[serde(alias = "markdown")]
    Md,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Md),
            _ => Err(Error::Parse(format!("unknown format {s:?}, expected json or md"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub descriptor: GroupDescriptor,
}

/// What `verify` runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub groups: Vec<GroupSpec>,
    /// Orders `d` of the cyclotomic fields `Q(ζ_d)` whose homology is checked.
    pub fields: Vec<u64>,
    /// Truncation degree for HH/HC; `None` picks 4 for `|G| ≤ 8` and 3
    /// otherwise.
    pub degree: Option<usize>,
    /// Column cutoff for HP/HN.
    pub cutoff: usize,
    pub budget: Budget,
    pub format: Format,
    pub jobs: usize,
}

impl Default for SuiteConfig {
    /// The full catalog and the fields `Q`, `Q(ζ_3)`, `Q(ζ_4)`.
    fn default() -> Self {
        SuiteConfig {
            groups: catalog().into_iter().map(|e| GroupSpec { name: e.name, descriptor: e.descriptor }).collect(),
            fields: vec![1, 3, 4],
            degree: None,
            cutoff: 3,
            budget: Budget::default(),
            format: Format::Json,
            jobs: default_jobs(),
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

impl SuiteConfig {
    /// Only the given groups, no fields.
    pub fn for_groups(groups: &[GroupEntry]) -> Self {
        SuiteConfig {
            groups: groups.iter().map(|e| GroupSpec { name: e.name.clone(), descriptor: e.descriptor.clone() }).collect(),
            fields: Vec::new(),
            ..SuiteConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if matches!(self.degree, Some(n) if n < 2) {
            return Err(Error::Domain("truncation degree N must be at least 2".into()));
        }
        if self.cutoff < 1 {
            return Err(Error::Domain("cutoff P must be at least 1".into()));
        }
        if self.budget.0 == 0 {
            return Err(Error::Domain("budget must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(Error::Domain("jobs must be positive".into()));
        }
        Ok(())
    }

    pub fn degree_for(&self, order: usize) -> usize {
        self.degree.unwrap_or(if order <= 8 { 4 } else { 3 })
    }

    pub fn group_names(&self) -> Vec<String> {
        self.groups.iter().map(|g| g.name.clone()).collect()
    }

    pub fn entries(&self) -> Result<Vec<GroupEntry>> {
        self.groups.iter().map(|g| GroupEntry::new(g.name.clone(), g.descriptor.clone())).collect()
    }
}
