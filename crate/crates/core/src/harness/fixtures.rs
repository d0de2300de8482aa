//! Expected values of the derived checks, precomputed by the brute-force
//! oracles and stored in `fixtures/oracles.json`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::{parse_algebra, GroupEntry};
use super::config::SuiteConfig;
use super::oracles;
use crate::cyclic::{AlgebraPresentation, Budget};
use crate::exactla::Field;
use crate::grp::GroupDescriptor;
use crate::{Error, Result};

/// Largest group order whose group algebra gets an unnormalized HH oracle.
pub const UNNORMALIZED_ORDER_BOUND: usize = 6;

/// Truncation degree of the cyclotomic-field oracles.
pub const FIELD_DEGREE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFixture {
    pub descriptor: GroupDescriptor,
    pub conjugacy_classes: usize,
    pub cyclic_subgroup_classes: usize,
    /// Canonical representatives, in the row order of `marks`.
    pub subgroup_classes: Vec<Vec<usize>>,
    pub marks: Vec<Vec<u64>>,
    /// `(N, HH_0..HH_{N-1})` of `QG` from the unnormalized complex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hh_unnormalized: Option<(usize, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldFixture {
    pub degree: usize,
    pub hh_unnormalized: Vec<usize>,
    pub hc_bicomplex: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixtures {
    pub groups: BTreeMap<String, GroupFixture>,
    /// Keyed by the cyclotomic order `d` of `Q(ζ_d)`.
    pub fields: BTreeMap<u64, FieldFixture>,
}

const BUILTIN: &str = include_str!("../../fixtures/oracles.json");

/// Default location of the fixtures file inside the source tree.
pub const FIXTURES_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/oracles.json");

pub fn field_algebra(d: u64) -> Result<Arc<AlgebraPresentation>> {
    Ok(parse_algebra(&format!("cyclotomic:{d}"))?.algebra)
}

impl Fixtures {
    /// The fixtures compiled into the crate.
    pub fn builtin() -> Self {
        serde_json::from_str(BUILTIN).expect("built-in fixtures parse")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("fixtures serialize") + "\n";
        std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// Runs every oracle for the groups and fields of `config`.
    pub fn regenerate(config: &SuiteConfig) -> Result<Self> {
        let entries = config.entries()?;
        let groups = entries
            .par_iter()
            .map(|e| Ok((e.name.clone(), group_fixture(e, config)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let fields = config
            .fields
            .par_iter()
            .map(|&d| Ok((d, field_fixture(d, config.budget)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Fixtures { groups, fields })
    }

    /// The stored fixture for `entry` if its descriptor matches.
    pub fn group(&self, entry: &GroupEntry) -> Option<&GroupFixture> {
        self.groups.get(&entry.name).filter(|f| f.descriptor == entry.descriptor)
    }

    pub fn field(&self, d: u64) -> Option<&FieldFixture> {
        self.fields.get(&d)
    }
}

pub fn group_fixture(e: &GroupEntry, config: &SuiteConfig) -> Result<GroupFixture> {
    let g = &e.group;
    let reps = oracles::subgroup_classes(g);
    let hh_unnormalized = if g.order() <= UNNORMALIZED_ORDER_BOUND {
        let n = config.degree_for(g.order());
        let a = Arc::new(AlgebraPresentation::group_algebra(g, Field::Rational)?);
        Some((n, oracles::unnormalized_hh(&a, n, config.budget)?))
    } else {
        None
    };
    Ok(GroupFixture {
        descriptor: e.descriptor.clone(),
        conjugacy_classes: oracles::conjugacy_class_count(g),
        cyclic_subgroup_classes: oracles::cyclic_subgroup_class_count(g),
        marks: oracles::fixed_point_marks(g, &reps),
        subgroup_classes: reps,
        hh_unnormalized,
    })
}

pub fn field_fixture(d: u64, budget: Budget) -> Result<FieldFixture> {
    let a = field_algebra(d)?;
    Ok(FieldFixture {
        degree: FIELD_DEGREE,
        hh_unnormalized: oracles::unnormalized_hh(&a, FIELD_DEGREE, budget)?,
        hc_bicomplex: oracles::bicomplex_hc(&a, FIELD_DEGREE)?,
    })
}
