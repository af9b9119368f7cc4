use alloc::vec;
use alloc::vec::Vec;

use super::{check_conditions, is_invariant_transversal, is_transversal, Transversal};
use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::structure::{
    centralizer_of_subgroup, commutator_subgroup, conjugacy_classes, is_abelian, is_central, is_normal, join, quotient,
    right_cosets, Subgroup,
};

/// Builds a `G`-invariant transversal for `G/H` as a union of conjugacy
/// classes.
///
/// With `S` the minimal-index coset section inside `C_G(H)`, each class of
/// `G/H` receives the smallest `s ∈ S` projecting into it, and the result is
/// the union of the `G`-classes of those elements.
pub fn construct_invariant_transversal(group: &Group, h: &Subgroup) -> Result<Transversal> {
    let verdict = check_conditions(group, h)?;
    if let Some(failing) = verdict.failing_condition() {
        return Err(Error::ConditionsFail(failing));
    }
    let q = quotient(group, h)?;
    let centralizer_h = centralizer_of_subgroup(group, h);
    let mut section: Vec<Option<Element>> = vec![None; q.quotient.order()];
    for &c in centralizer_h.members() {
        let slot = &mut section[q.project(c).index()];
        if slot.is_none() {
            *slot = Some(c);
        }
    }
    let mut section: Vec<Element> = section.into_iter().map(|s| s.expect("G = H·C_G(H)")).collect();
    section.sort_unstable();

    let quotient_classes = conjugacy_classes(&q.quotient);
    let classes = conjugacy_classes(group);
    let mut chosen: Vec<Option<Element>> = vec![None; quotient_classes.count()];
    for &s in &section {
        let slot = &mut chosen[quotient_classes.class_of(q.project(s))];
        if slot.is_none() {
            *slot = Some(s);
        }
    }
    let mut set = Vec::with_capacity(q.quotient.order());
    for s in chosen {
        let s = s.expect("every quotient class meets the section");
        set.extend_from_slice(classes.class(classes.class_of(s)));
    }
    if !is_invariant_transversal(group, h, &Subgroup::whole(group), &set) {
        return Err(Error::InternalVerificationFailed("class-union construction".into()));
    }
    Transversal::new(group, h, &set)
}

/// Minimal-index representatives of the right cosets of `H·G'`.
pub fn derived_section(group: &Group, h: &Subgroup) -> Vec<Element> {
    let hd = join(group, h, &commutator_subgroup(group));
    right_cosets(group, &hd).representatives().to_vec()
}

/// `T = {g·s : g ∈ G', s ∈ S}` for a transversal `S` of `H·G'\G`; requires
/// `H ∩ G' = 1` but not normality of `H`.
pub fn construct_via_derived(group: &Group, h: &Subgroup, section: &[Element]) -> Result<Transversal> {
    let derived = commutator_subgroup(group);
    if !h.intersection(&derived).is_trivial() {
        return Err(Error::IntersectionNotTrivial);
    }
    let hd = join(group, h, &derived);
    if !is_transversal(group, &hd, section) {
        return Err(Error::NotATransversal);
    }
    let mut set = Vec::with_capacity(derived.order() * section.len());
    for &s in section {
        for &d in derived.members() {
            set.push(group.mul(d, s));
        }
    }
    if !is_invariant_transversal(group, h, &Subgroup::whole(group), &set) {
        return Err(Error::InternalVerificationFailed("derived-subgroup construction".into()));
    }
    Transversal::new(group, h, &set)
}

/// Whether an abelian normal `H` admits an `H`-invariant transversal, which
/// happens exactly when `H ≤ Z(G)`.
pub fn h_invariant_exists(group: &Group, h: &Subgroup) -> Result<bool> {
    if !is_normal(group, h) {
        return Err(Error::NotNormal);
    }
    if !is_abelian(group, h) {
        return Err(Error::NotAbelian);
    }
    Ok(is_central(group, h))
}

/// `(C_G(H), Z(H))` for a normal `H` with `G = H·C_G(H)`.
///
/// Under that factorization, `T` is a `G`-invariant transversal for `G/H`
/// exactly when `T ⊆ C_G(H)` and `T` is a `C_G(H)`-invariant transversal for
/// `C_G(H)/Z(H)`.
pub fn reduce_to_centralizer(group: &Group, h: &Subgroup) -> Result<(Subgroup, Subgroup)> {
    if !is_normal(group, h) {
        return Err(Error::NotNormal);
    }
    let l = centralizer_of_subgroup(group, h);
    if group.product_set(h.members(), l.members()).len() != group.order() {
        return Err(Error::FactorizationFails);
    }
    let z = h.intersection(&l);
    Ok((l, z))
}
