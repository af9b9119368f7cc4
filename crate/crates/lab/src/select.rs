//! Subgroup selectors: a named subgroup from the file, an element list
//! (`"2"`, `"1,4"`, `"[1, 4]"`; the generated subgroup is taken), or one of
//! `center`, `derived`, `all-normal-abelian`.

use transversal_lab_core::structure::{
    center, commutator_subgroup, is_abelian, normal_subgroups, subgroup_closure, DEFAULT_CLASS_CAP,
};
use transversal_lab_core::{Element, Group, Subgroup};

use crate::error::{LabError, Result};
use crate::file::GroupFile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Named(String),
    Elements(Vec<usize>),
    Center,
    Derived,
    AllNormalAbelian,
}

impl Selector {
    pub fn parse(text: &str) -> Result<Selector> {
        let trimmed = text.trim();
        match trimmed {
            "center" => return Ok(Selector::Center),
            "derived" => return Ok(Selector::Derived),
            "all-normal-abelian" => return Ok(Selector::AllNormalAbelian),
            "" => return Err(selector_error(text, "empty selector")),
            _ => {}
        }
        let inner = trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(trimmed);
        if inner.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace()) {
            let elements = inner
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| selector_error(text, "bad element index")))
                .collect::<Result<Vec<usize>>>()?;
            return Ok(Selector::Elements(elements));
        }
        Ok(Selector::Named(trimmed.to_string()))
    }
}

fn selector_error(selector: &str, message: impl Into<String>) -> LabError {
    LabError::Selector { selector: selector.to_string(), message: message.into() }
}

/// A resolved subgroup with a display label.
#[derive(Debug, Clone)]
pub struct Selected {
    pub label: String,
    pub subgroup: Subgroup,
}

/// `<g1,g2,...>` from the greedy generating set; `1` for the trivial subgroup.
pub fn describe(group: &Group, h: &Subgroup) -> String {
    let gens = h.generators(group);
    if gens.is_empty() {
        return "1".into();
    }
    let list: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", list.join(","))
}

pub fn resolve(file: &GroupFile, text: &str) -> Result<Vec<Selected>> {
    let group = &file.group;
    let single = |label: String, mut subgroup: Subgroup| {
        subgroup.cache_flags(group);
        vec![Selected { label, subgroup }]
    };
    Ok(match Selector::parse(text)? {
        Selector::Center => single("center".into(), center(group)),
        Selector::Derived => single("derived".into(), commutator_subgroup(group)),
        Selector::Named(name) => {
            let h = file
                .subgroups
                .get(&name)
                .ok_or_else(|| selector_error(text, "no subgroup with this name in the file"))?;
            single(name, h.clone())
        }
        Selector::Elements(indices) => {
            if let Some(&bad) = indices.iter().find(|&&i| i >= group.order()) {
                return Err(selector_error(text, format!("element {bad} out of range 0..{}", group.order())));
            }
            let seed: Vec<Element> = indices.into_iter().map(Element::from).collect();
            let h = subgroup_closure(group, &seed);
            single(describe(group, &h), h)
        }
        Selector::AllNormalAbelian => normal_subgroups(group, DEFAULT_CLASS_CAP)?
            .into_iter()
            .filter(|h| is_abelian(group, h))
            .map(|mut h| {
                h.cache_flags(group);
                Selected { label: describe(group, &h), subgroup: h }
            })
            .collect(),
    })
}

/// Like [`resolve`] but the selector must pick exactly one subgroup.
pub fn resolve_one(file: &GroupFile, text: &str) -> Result<Selected> {
    let mut all = resolve(file, text)?;
    if all.len() != 1 {
        return Err(selector_error(text, format!("selects {} subgroups, expected one", all.len())));
    }
    Ok(all.pop().unwrap())
}
