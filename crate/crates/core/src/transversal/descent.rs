use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{is_invariant_transversal, is_invariant_under, is_transversal_in, Transversal};
use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::structure::{derived_subgroup_of, is_central, is_prime, right_cosets, sylow_subgroup, Subgroup};

/// Result of pushing a `G`-invariant transversal for `G/H` down to `Q\P`.
#[derive(Debug, Clone)]
pub struct Descent {
    /// `G`-invariant transversal for `G/Q`.
    pub transversal_for_q: Transversal,
    pub sylow: Subgroup,
    /// `P`-invariant transversal for `Q\P`, ascending.
    pub sylow_transversal: Vec<Element>,
    /// `Q ≤ P'`.
    pub q_in_derived: bool,
}

/// For `Q ≤ H ≤ Z(G)` with `|Q| = p` and a `G`-invariant transversal `T` of
/// `G/H`: `{u·t : u ∈ U, t ∈ T}` with `U` the minimal-index transversal of
/// `H/Q` is a `G`-invariant transversal for `G/Q`, and its intersection with a
/// Sylow `p`-subgroup `P` is a `P`-invariant transversal for `Q\P`.
pub fn descend_to_sylow(group: &Group, h: &Subgroup, q: &Subgroup, p: usize, t: &[Element]) -> Result<Descent> {
    if !is_central(group, h) || !q.is_subgroup_of(h) {
        return Err(Error::NotCentralChain);
    }
    if q.order() != p || !is_prime(p) {
        return Err(Error::NotPrimeOrder(q.order()));
    }
    let whole = Subgroup::whole(group);
    if !is_invariant_transversal(group, h, &whole, t) {
        return Err(Error::NotInvariantTransversal);
    }

    let q_cosets = right_cosets(group, q);
    let mut seen = BTreeSet::new();
    let u: Vec<Element> = h.members().iter().copied().filter(|&x| seen.insert(q_cosets.coset_of(x))).collect();

    let mut lifted = Vec::with_capacity(u.len() * t.len());
    for &x in &u {
        for &y in t {
            lifted.push(group.mul(x, y));
        }
    }
    if !is_invariant_transversal(group, q, &whole, &lifted) {
        return Err(Error::InternalVerificationFailed("lifted transversal for G/Q".into()));
    }
    let transversal_for_q = Transversal::new(group, q, &lifted)?;

    let sylow = sylow_subgroup(group, p)?;
    let mut sylow_transversal: Vec<Element> = lifted.iter().copied().filter(|&x| sylow.contains(x)).collect();
    sylow_transversal.sort_unstable();
    if !is_transversal_in(group, &sylow, q, &sylow_transversal)
        || !is_invariant_under(group, &sylow, &sylow_transversal)
    {
        return Err(Error::InternalVerificationFailed("intersection with the Sylow subgroup".into()));
    }
    let q_in_derived = q.is_subgroup_of(&derived_subgroup_of(group, &sylow));
    Ok(Descent { transversal_for_q, sylow, sylow_transversal, q_in_derived })
}
