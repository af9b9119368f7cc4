//! Right transversals `H\G` and the question of when one can be chosen
//! invariant under conjugation.

mod conditions;
mod conjecture;
mod construct;
mod descent;
mod loops;
mod search;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::structure::{right_cosets, Subgroup};

pub use conditions::{check_conditions, ClassCounts, ConditionsVerdict};
pub use conjecture::{counterexample_status, CounterexampleStatus};
pub use construct::{
    construct_invariant_transversal, construct_via_derived, derived_section, h_invariant_exists, reduce_to_centralizer,
};
pub use descent::{descend_to_sylow, Descent};
pub use loops::{loop_from_transversal, LoopReport};
pub use search::{brute_force_invariant_transversal, SearchOutcome, DEFAULT_SEARCH_CAP};

/// One representative per right coset `Hg`, stored in coset order (cosets
/// numbered by increasing minimal member, so the representative of `H`
/// itself comes first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    subgroup: Subgroup,
    members: Vec<Element>,
}

impl Transversal {
    pub fn new(group: &Group, h: &Subgroup, set: &[Element]) -> Result<Transversal> {
        if !is_transversal(group, h, set) {
            return Err(Error::NotATransversal);
        }
        let cosets = right_cosets(group, h);
        let mut members = vec![Element::IDENTITY; cosets.count()];
        for &t in set {
            members[cosets.coset_of(t)] = t;
        }
        Ok(Transversal { subgroup: h.clone(), members })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Representatives in coset order.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn sorted(&self) -> Vec<Element> {
        let mut out = self.members.clone();
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: Element) -> bool {
        self.members.contains(&g)
    }

    /// Same transversal with the representative of `H` replaced by the identity.
    pub fn with_identity(&self) -> Transversal {
        let mut out = self.clone();
        out.members[0] = Element::IDENTITY;
        out
    }
}

/// True iff `set` meets every right coset `Hg` exactly once.
pub fn is_transversal(group: &Group, h: &Subgroup, set: &[Element]) -> bool {
    is_transversal_in(group, &Subgroup::whole(group), h, set)
}

/// True iff `set ⊆ ambient` meets every right coset `Hx`, `x ∈ ambient`,
/// exactly once. Requires `H ≤ ambient`.
pub fn is_transversal_in(group: &Group, ambient: &Subgroup, h: &Subgroup, set: &[Element]) -> bool {
    if h.parent_order() != group.order() || !h.is_subgroup_of(ambient) {
        return false;
    }
    if set.len() != ambient.order() / h.order() {
        return false;
    }
    if set.iter().any(|&t| !group.contains(t) || !ambient.contains(t)) {
        return false;
    }
    let cosets = right_cosets(group, h);
    let mut hit = vec![false; cosets.count()];
    for &t in set {
        let c = cosets.coset_of(t);
        if hit[c] {
            return false;
        }
        hit[c] = true;
    }
    true
}

/// True iff `t^x ∈ set` for every `t ∈ set` and `x ∈ acting`.
pub fn is_invariant_under(group: &Group, acting: &Subgroup, set: &[Element]) -> bool {
    let mut inside = vec![false; group.order()];
    for &t in set {
        if !group.contains(t) {
            return false;
        }
        inside[t.index()] = true;
    }
    let gens = acting.generators(group);
    set.iter().all(|&t| gens.iter().all(|&x| inside[group.conjugate(t, x).index()]))
}

/// `set` is an `acting`-invariant transversal for `H\G`.
pub fn is_invariant_transversal(group: &Group, h: &Subgroup, acting: &Subgroup, set: &[Element]) -> bool {
    is_transversal(group, h, set) && is_invariant_under(group, acting, set)
}

/// All transversals of `H\G` in mixed-radix order over the cosets' members,
/// first coset varying fastest.
pub fn enumerate_transversals(group: &Group, h: &Subgroup) -> TransversalIter {
    let cosets = right_cosets(group, h);
    let choices: Vec<Vec<Element>> = (0..cosets.count()).map(|c| cosets.members(c).collect()).collect();
    TransversalIter { digits: vec![0; choices.len()], choices, done: false }
}

pub struct TransversalIter {
    choices: Vec<Vec<Element>>,
    digits: Vec<usize>,
    done: bool,
}

impl TransversalIter {
    /// `|H|^[G:H]`, saturating.
    pub fn total(&self) -> u64 {
        self.choices.iter().fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64))
    }
}

impl Iterator for TransversalIter {
    type Item = Vec<Element>;

    fn next(&mut self) -> Option<Vec<Element>> {
        if self.done {
            return None;
        }
        let item = self.digits.iter().zip(&self.choices).map(|(&d, c)| c[d]).collect();
        self.done = true;
        for (d, c) in self.digits.iter_mut().zip(&self.choices) {
            *d += 1;
            if *d < c.len() {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(item)
    }
}
