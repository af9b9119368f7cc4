//! Structural subobjects of a finite group: subgroups, centralizers, classes,
//! quotients, the normal subgroup lattice, Sylow subgroups and the linear
//! characters of abelian subgroups.

mod character;
mod classes;
mod lattice;
mod quotient;
mod sylow;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Element, Group, Provenance};

pub use character::{linear_characters, LinearCharacter};
pub use classes::{conjugacy_classes, conjugation_orbits, ClassPartition};
pub use lattice::{normal_subgroups, DEFAULT_CLASS_CAP};
pub use quotient::{quotient, right_cosets, CosetPartition, QuotientMap};
pub use sylow::{is_prime, normalizer, sylow_subgroup};

/// A subgroup of a parent group, stored as a sorted list of element indices.
///
/// The subgroup does not borrow its parent; every operation takes the parent
/// group explicitly. `parent_order` guards against mixing groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<Element>,
    mask: Vec<bool>,
    normal: Option<bool>,
    abelian: Option<bool>,
    central: Option<bool>,
}

impl Subgroup {
    fn from_mask(mask: Vec<bool>) -> Subgroup {
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| Element::from(i)).collect();
        Subgroup { parent_order: mask.len(), members, mask, normal: None, abelian: None, central: None }
    }

    pub fn trivial(group: &Group) -> Subgroup {
        let mut mask = vec![false; group.order()];
        mask[0] = true;
        let mut h = Subgroup::from_mask(mask);
        h.normal = Some(true);
        h.abelian = Some(true);
        h.central = Some(true);
        h
    }

    pub fn whole(group: &Group) -> Subgroup {
        let mut h = Subgroup::from_mask(vec![true; group.order()]);
        h.normal = Some(true);
        h
    }

    /// Validates that `elements` is exactly a subgroup of `group`.
    pub fn from_elements(group: &Group, elements: &[Element]) -> Result<Subgroup> {
        let mut mask = vec![false; group.order()];
        for &e in elements {
            if !group.contains(e) {
                return Err(Error::NotASubgroup(format!("element {e} out of range")));
            }
            mask[e.index()] = true;
        }
        if !mask[0] {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let h = Subgroup::from_mask(mask);
        for &a in &h.members {
            for &b in &h.members {
                let p = group.mul(a, b);
                if !h.contains(p) {
                    return Err(Error::NotASubgroup(format!("{a}·{b} = {p} not in set")));
                }
            }
        }
        if !group.order().is_multiple_of(h.order()) {
            return Err(Error::NotASubgroup("order does not divide the group order".into()));
        }
        Ok(h)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, g: Element) -> bool {
        self.mask.get(g.index()).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent_order
    }

    /// Position of `g` in the sorted member list.
    pub fn position(&self, g: Element) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect();
        Subgroup::from_mask(mask)
    }

    /// Cached flags: `Some` once known.
    pub fn normal_flag(&self) -> Option<bool> {
        self.normal
    }

    pub fn abelian_flag(&self) -> Option<bool> {
        self.abelian
    }

    pub fn central_flag(&self) -> Option<bool> {
        self.central
    }

    /// Computes and stores the normal/abelian/central flags.
    pub fn cache_flags(&mut self, group: &Group) {
        self.normal = Some(is_normal(group, self));
        self.abelian = Some(is_abelian(group, self));
        self.central = Some(is_central(group, self));
    }

    pub(crate) fn mark_normal(mut self) -> Subgroup {
        self.normal = Some(true);
        self
    }

    /// Greedy generating set of the subgroup.
    pub fn generators(&self, group: &Group) -> Vec<Element> {
        let mut inside = vec![false; group.order()];
        inside[0] = true;
        let mut closure = vec![Element::IDENTITY];
        let mut gens = Vec::new();
        for &g in &self.members {
            if inside[g.index()] {
                continue;
            }
            gens.push(g);
            inside[g.index()] = true;
            closure.push(g);
            let mut i = 0;
            while i < closure.len() {
                let m = closure[i];
                for &s in &gens {
                    let p = group.mul(m, s);
                    if !inside[p.index()] {
                        inside[p.index()] = true;
                        closure.push(p);
                    }
                }
                i += 1;
            }
        }
        gens
    }

    /// The subgroup as a standalone group, elements renumbered by their
    /// position in the sorted member list.
    pub fn to_group(&self, group: &Group) -> Group {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                table.push(self.position(group.mul(a, b)).unwrap() as u32);
            }
        }
        Group::from_trusted_table(format!("{}<{}>", group.name(), n), Provenance::Subgroup, n, table)
    }
}

/// Least subgroup containing `seed`, by breadth-first closure.
pub fn subgroup_closure(group: &Group, seed: &[Element]) -> Subgroup {
    let mut mask = vec![false; group.order()];
    mask[0] = true;
    let mut gens: Vec<Element> = seed.iter().copied().filter(|g| !g.is_identity()).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut queue = vec![Element::IDENTITY];
    let mut i = 0;
    while i < queue.len() {
        let m = queue[i];
        for &s in &gens {
            let p = group.mul(m, s);
            if !mask[p.index()] {
                mask[p.index()] = true;
                queue.push(p);
            }
        }
        i += 1;
    }
    Subgroup::from_mask(mask)
}

/// Subgroup generated by two subgroups.
pub fn join(group: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seed = a.generators(group);
    seed.extend(b.generators(group));
    subgroup_closure(group, &seed)
}

pub fn centralizer_of(group: &Group, x: Element) -> Subgroup {
    centralizer(group, &[x])
}

/// Elements commuting with every target.
pub fn centralizer(group: &Group, targets: &[Element]) -> Subgroup {
    let mask = group.elements().map(|x| targets.iter().all(|&t| group.commute(x, t))).collect();
    Subgroup::from_mask(mask)
}

/// Centralizer of a subgroup, computed against its generators.
pub fn centralizer_of_subgroup(group: &Group, h: &Subgroup) -> Subgroup {
    centralizer(group, &h.generators(group))
}

pub fn center(group: &Group) -> Subgroup {
    let mut z = centralizer(group, &group.generating_set());
    z.normal = Some(true);
    z.abelian = Some(true);
    z.central = Some(true);
    z
}

/// `G'`, the closure of all commutators.
pub fn commutator_subgroup(group: &Group) -> Subgroup {
    let mut seen = BTreeSet::new();
    for g in group.elements() {
        for x in group.elements() {
            seen.insert(group.commutator(g, x));
        }
    }
    let seed: Vec<Element> = seen.into_iter().collect();
    subgroup_closure(group, &seed).mark_normal()
}

/// Derived subgroup of a subgroup `K`, as a subgroup of `G`.
pub fn derived_subgroup_of(group: &Group, k: &Subgroup) -> Subgroup {
    let mut seen = BTreeSet::new();
    for &a in k.members() {
        for &b in k.members() {
            seen.insert(group.commutator(a, b));
        }
    }
    let seed: Vec<Element> = seen.into_iter().collect();
    subgroup_closure(group, &seed)
}

pub fn is_normal(group: &Group, h: &Subgroup) -> bool {
    if let Some(flag) = h.normal {
        return flag;
    }
    let gens = group.generating_set();
    h.generators(group).iter().all(|&a| gens.iter().all(|&x| h.contains(group.conjugate(a, x))))
}

pub fn is_abelian(group: &Group, h: &Subgroup) -> bool {
    if let Some(flag) = h.abelian {
        return flag;
    }
    let gens = h.generators(group);
    gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| group.commute(a, b)))
}

/// `H ≤ Z(G)`.
pub fn is_central(group: &Group, h: &Subgroup) -> bool {
    if let Some(flag) = h.central {
        return flag;
    }
    let gens = group.generating_set();
    h.generators(group).iter().all(|&a| gens.iter().all(|&x| group.commute(a, x)))
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(group: &Group, seed: &[Element]) -> Subgroup {
    let mut orbit: BTreeSet<Element> = BTreeSet::new();
    for &s in seed {
        for x in group.elements() {
            orbit.insert(group.conjugate(s, x));
        }
    }
    let seed: Vec<Element> = orbit.into_iter().collect();
    subgroup_closure(group, &seed).mark_normal()
}
