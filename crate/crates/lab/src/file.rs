//! JSON group files.
//!
//! ```json
//! {"v":1,"name":"S3","permutations":{"degree":3,"generators":[[1,0,2],[1,2,0]]},
//!  "subgroups":{"A3":[0,2,5]}}
//! ```
//!
//! Element indices refer to the file's own enumeration: row order for a Cayley
//! table, breadth-first closure order for permutation generators (identity
//! first, then right multiplication by the generators in listed order).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use transversal_lab_core::group::{enumerate_permutations, fixture_corpus};
use transversal_lab_core::{Element, Group, Subgroup};

use crate::caps::Caps;
use crate::error::{LabError, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Prefix for loading a fixture by name instead of from disk.
pub const BUILTIN_PREFIX: &str = "builtin:";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<u32>,
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cayley: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    permutations: Option<RawPermutations>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    subgroups: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPermutations {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

/// A parsed group file.
#[derive(Debug, Clone)]
pub struct GroupFile {
    pub group: Group,
    /// Images of each element for permutation files, in enumeration order.
    pub permutations: Option<Vec<Vec<usize>>>,
    pub subgroups: BTreeMap<String, Subgroup>,
}

pub fn parse_group_str(text: &str, origin: &str, caps: &Caps) -> Result<GroupFile> {
    let schema = |message: String| LabError::Schema { path: origin.to_string(), message };
    let raw: RawFile = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    if let Some(v) = raw.v {
        if v != SCHEMA_VERSION {
            return Err(schema(format!("unsupported version {v}")));
        }
    }
    let not_a_group = |source| LabError::NotAGroup { path: origin.to_string(), source };
    let (group, permutations) = match (raw.cayley, raw.permutations) {
        (Some(rows), None) => (Group::from_cayley(raw.name, &rows).map_err(not_a_group)?, None),
        (None, Some(p)) => {
            let group = Group::from_permutations_capped(raw.name, p.degree, &p.generators, caps.closure)
                .map_err(not_a_group)?;
            let images = enumerate_permutations(p.degree, &p.generators, caps.closure).map_err(not_a_group)?;
            (group, Some(images))
        }
        _ => return Err(schema("exactly one of \"cayley\" and \"permutations\" is required".into())),
    };
    let mut subgroups = BTreeMap::new();
    for (name, members) in raw.subgroups {
        let elements: Vec<Element> = members.into_iter().map(Element::from).collect();
        let mut h = Subgroup::from_elements(&group, &elements).map_err(|source| LabError::NotASubgroup {
            path: origin.to_string(),
            name: name.clone(),
            source,
        })?;
        h.cache_flags(&group);
        subgroups.insert(name, h);
    }
    Ok(GroupFile { group, permutations, subgroups })
}

pub fn parse_group_file(path: &Path, caps: &Caps) -> Result<GroupFile> {
    let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    parse_group_str(&text, &path.display().to_string(), caps)
}

/// A file path, or `builtin:NAME` for a member of the fixture corpus.
pub fn load(source: &str, caps: &Caps) -> Result<GroupFile> {
    match source.strip_prefix(BUILTIN_PREFIX) {
        Some(name) => {
            let group = fixture_corpus()
                .into_iter()
                .find(|g| g.name() == name)
                .ok_or_else(|| LabError::Config(format!("no builtin group named {name:?}")))?;
            Ok(GroupFile { group, permutations: None, subgroups: BTreeMap::new() })
        }
        None => parse_group_file(Path::new(source), caps),
    }
}

/// Serializes as a version-1 Cayley file.
pub fn to_cayley_json(group: &Group, subgroups: &BTreeMap<String, Subgroup>) -> String {
    let raw = RawFile {
        v: Some(SCHEMA_VERSION),
        name: group.name().to_string(),
        cayley: Some(group.cayley_rows()),
        permutations: None,
        subgroups: subgroups
            .iter()
            .map(|(k, h)| (k.clone(), h.members().iter().map(|e| e.index()).collect()))
            .collect(),
    };
    let mut out = serde_json::to_string(&raw).expect("serializable");
    out.push('\n');
    out
}
