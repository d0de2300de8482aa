//! Named groups and algebras, and the textual descriptors accepted on the
//! command line.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::cyclic::{AlgebraJson, AlgebraPresentation, FieldJson};
use crate::exactla::{cyclotomic_field, Field};
use crate::grp::{FiniteGroup, GroupDescriptor};
use crate::{Error, Result};

/// A group together with the descriptor it was built from.
#[derive(Clone, Debug)]
pub struct GroupEntry {
    pub name: String,
    pub descriptor: GroupDescriptor,
    pub group: FiniteGroup,
}

impl GroupEntry {
    pub fn new(name: impl Into<String>, descriptor: GroupDescriptor) -> Result<Self> {
        let group = FiniteGroup::build(&descriptor)?;
        Ok(GroupEntry { name: name.into(), descriptor, group })
    }
}

fn perm(degree: usize, gens: &[&[usize]]) -> GroupDescriptor {
    GroupDescriptor::Perm { degree, gens: gens.iter().map(|g| g.to_vec()).collect() }
}

fn named(name: &str) -> Option<GroupDescriptor> {
    let upper = name.to_ascii_uppercase();
    let d = match upper.as_str() {
        "V4" => perm(4, &[&[1, 0, 3, 2], &[2, 3, 0, 1]]),
        "S3" => perm(3, &[&[1, 0, 2], &[1, 2, 0]]),
        "D4" => perm(4, &[&[1, 2, 3, 0], &[3, 2, 1, 0]]),
        "Q8" => perm(8, &[&[1, 4, 3, 6, 5, 0, 7, 2], &[2, 7, 4, 1, 6, 3, 0, 5]]),
        "A4" => perm(4, &[&[1, 2, 0, 3], &[0, 2, 3, 1]]),
        _ => {
            let n: usize = upper.strip_prefix('C')?.parse().ok()?;
            GroupDescriptor::Cyclic { n }
        }
    };
    Some(d)
}

/// Names of the default catalog, in report order.
pub const CATALOG_NAMES: [&str; 14] =
    ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C12", "V4", "S3", "D4", "Q8", "A4"];

pub fn catalog() -> Vec<GroupEntry> {
    CATALOG_NAMES.iter().map(|n| GroupEntry::new(*n, named(n).expect("catalog name")).expect("catalog group")).collect()
}

/// Catalog name of a descriptor, or a name derived from its JSON.
fn name_for(descriptor: &GroupDescriptor) -> String {
    if let GroupDescriptor::Cyclic { n } = descriptor {
        return format!("C{n}");
    }
    CATALOG_NAMES
        .iter()
        .find(|n| named(n).as_ref() == Some(descriptor))
        .map(|n| n.to_string())
        .unwrap_or_else(|| serde_json::to_string(descriptor).expect("descriptor serializes"))
}

fn read_source(s: &str) -> Result<Option<String>> {
    let t = s.trim();
    if t.starts_with('{') {
        return Ok(Some(t.to_string()));
    }
    if Path::new(t).is_file() {
        return std::fs::read_to_string(t).map(Some).map_err(|e| Error::Parse(format!("{t}: {e}")));
    }
    Ok(None)
}

/// Parses `cyclic:n`, a catalog name (`C6`, `S3`, `D4`, `Q8`, `V4`, `A4`),
/// a JSON descriptor, or a path to a JSON descriptor.
pub fn parse_group(s: &str) -> Result<GroupEntry> {
    let descriptor = if let Some(text) = read_source(s)? {
        serde_json::from_str::<GroupDescriptor>(&text).map_err(|e| Error::Parse(format!("group descriptor: {e}")))?
    } else if let Some(n) = s.trim().strip_prefix("cyclic:") {
        let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad cyclic order in {s:?}")))?;
        GroupDescriptor::Cyclic { n }
    } else {
        named(s.trim()).ok_or_else(|| Error::Parse(format!("unknown group {s:?}")))?
    };
    GroupEntry::new(name_for(&descriptor), descriptor)
}

#[derive(Clone, Debug)]
pub struct AlgebraEntry {
    pub name: String,
    pub algebra: Arc<AlgebraPresentation>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlgebraSource {
    Group { group: GroupDescriptor, field: Option<FieldJson> },
    Table(AlgebraJson),
}

fn number_field_entry(d: u64) -> Result<AlgebraEntry> {
    let f = cyclotomic_field(d)?;
    Ok(AlgebraEntry { name: format!("Q(zeta_{d})"), algebra: Arc::new(AlgebraPresentation::number_field(&f)?) })
}

fn group_algebra_entry(g: &GroupEntry, field: Field) -> Result<AlgebraEntry> {
    let name = format!("{field}[{}]", g.name);
    Ok(AlgebraEntry { name, algebra: Arc::new(AlgebraPresentation::group_algebra(&g.group, field)?) })
}

/// Parses `Q`, `cyclotomic:d` or `Q(zeta_d)` (the number field as a
/// `Q`-algebra), `Q[G]` or `group:G` with `G` any group descriptor, and
/// JSON structure-constant tables, inline or from a file.
pub fn parse_algebra(s: &str) -> Result<AlgebraEntry> {
    let t = s.trim();
    if let Some(text) = read_source(t)? {
        let src: AlgebraSource =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("algebra descriptor: {e}")))?;
        return match src {
            AlgebraSource::Group { group, field } => {
                let field = field.unwrap_or(FieldJson::Rational).to_field()?;
                group_algebra_entry(&GroupEntry::new(name_for(&group), group)?, field)
            }
            AlgebraSource::Table(j) => {
                let a = AlgebraPresentation::from_json(&j)?;
                Ok(AlgebraEntry { name: a.describe(), algebra: Arc::new(a) })
            }
        };
    }
    if t == "Q" {
        return Ok(AlgebraEntry { name: "Q".into(), algebra: Arc::new(AlgebraPresentation::ground(Field::Rational)) });
    }
    let cyclotomic = t
        .strip_prefix("cyclotomic:")
        .or_else(|| t.strip_prefix("Q(zeta_").and_then(|r| r.strip_suffix(')')))
        .or_else(|| t.strip_prefix("Q(zeta").and_then(|r| r.strip_suffix(')')));
    if let Some(d) = cyclotomic {
        let d = d.trim().parse().map_err(|_| Error::Parse(format!("bad cyclotomic order in {s:?}")))?;
        return number_field_entry(d);
    }
    let group = t.strip_prefix("group:").or_else(|| t.strip_prefix("Q[").and_then(|r| r.strip_suffix(']')));
    if let Some(g) = group {
        return group_algebra_entry(&parse_group(g)?, Field::Rational);
    }
    Err(Error::Parse(format!("unknown algebra {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let orders: Vec<usize> = catalog().iter().map(|e| e.group.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 5, 6, 7, 8, 12, 4, 6, 8, 8, 12]);
        let classes: Vec<usize> = catalog().iter().map(|e| e.group.num_classes()).collect();
        assert_eq!(&classes[9..], &[4, 3, 5, 5, 4]);
    }

    #[test]
    fn group_spellings() {
        assert_eq!(parse_group("cyclic:6").unwrap().name, "C6");
        assert_eq!(parse_group("s3").unwrap().group.order(), 6);
        let j = parse_group(r#"{"kind":"perm","degree":3,"gens":[[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(j.name, "S3");
        assert_eq!(parse_group(r#"{"kind":"cyclic","n":5}"#).unwrap().name, "C5");
        assert!(matches!(parse_group("{\"kind\":\"perm\""), Err(Error::Parse(_))));
        assert!(matches!(parse_group("nonsense"), Err(Error::Parse(_))));
    }

    #[test]
    fn algebra_spellings() {
        assert_eq!(parse_algebra("Q").unwrap().algebra.dim(), 1);
        assert_eq!(parse_algebra("cyclotomic:5").unwrap().algebra.dim(), 4);
        assert_eq!(parse_algebra("Q(zeta_3)").unwrap().algebra.dim(), 2);
        assert_eq!(parse_algebra("Q[S3]").unwrap().algebra.dim(), 6);
        let j = parse_algebra(r#"{"group":{"kind":"cyclic","n":3}}"#).unwrap();
        assert_eq!(j.name, "Q[C3]");
        let dual = r#"{"field":{"kind":"Q"},"dim":2,"unit":["1","0"],"mul":[[[[0,"1"]],[[1,"1"]]],[[[1,"1"]],[]]]}"#;
        assert_eq!(parse_algebra(dual).unwrap().algebra.dim(), 2);
    }
}
