use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{is_normal, Subgroup};
use crate::error::{Error, Result};
use crate::group::{Element, Group, Provenance};

/// Right cosets `Hg`, numbered by increasing minimal member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    coset_of: Vec<u32>,
    representatives: Vec<Element>,
}

impl CosetPartition {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    #[inline]
    pub fn coset_of(&self, g: Element) -> usize {
        self.coset_of[g.index()] as usize
    }

    /// Minimal member of each coset.
    pub fn representatives(&self) -> &[Element] {
        &self.representatives
    }

    /// Members of coset `c`, ascending.
    pub fn members(&self, c: usize) -> impl Iterator<Item = Element> + '_ {
        self.coset_of.iter().enumerate().filter(move |(_, &id)| id as usize == c).map(|(i, _)| Element::from(i))
    }
}

pub fn right_cosets(group: &Group, h: &Subgroup) -> CosetPartition {
    const UNSET: u32 = u32::MAX;
    let mut coset_of = vec![UNSET; group.order()];
    let mut representatives = Vec::with_capacity(h.index_in_parent());
    for g in group.elements() {
        if coset_of[g.index()] != UNSET {
            continue;
        }
        let id = representatives.len() as u32;
        representatives.push(g);
        for &x in h.members() {
            coset_of[group.mul(x, g).index()] = id;
        }
    }
    CosetPartition { coset_of, representatives }
}

/// The canonical epimorphism `G → G/H`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub kernel: Subgroup,
    pub quotient: Group,
    /// Image of each source element.
    pub projection: Vec<Element>,
    /// Minimal-index preimage of each quotient element.
    pub section: Vec<Element>,
}

impl QuotientMap {
    #[inline]
    pub fn project(&self, g: Element) -> Element {
        self.projection[g.index()]
    }

    #[inline]
    pub fn lift(&self, x: Element) -> Element {
        self.section[x.index()]
    }

    /// Image of a set of source elements, sorted and deduplicated.
    pub fn image(&self, elements: &[Element]) -> Vec<Element> {
        let mut out: Vec<Element> = elements.iter().map(|&g| self.project(g)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `G/H` with cosets labeled by their minimal member; requires `H` normal.
pub fn quotient(group: &Group, h: &Subgroup) -> Result<QuotientMap> {
    if h.parent_order() != group.order() || !is_normal(group, h) {
        return Err(Error::NotNormal);
    }
    let cosets = right_cosets(group, h);
    let n = cosets.count();
    let section = cosets.representatives().to_vec();
    let projection: Vec<Element> = group.elements().map(|g| Element::from(cosets.coset_of(g))).collect();
    let mut table = Vec::with_capacity(n * n);
    for &a in &section {
        for &b in &section {
            table.push(projection[group.mul(a, b).index()].0);
        }
    }
    let quotient = Group::from_trusted_table(format!("{}/{}", group.name(), h.order()), Provenance::Quotient, n, table);
    Ok(QuotientMap { kernel: h.clone(), quotient, projection, section })
}
