use alloc::vec::Vec;

use super::{subgroup_closure, Subgroup};
use crate::error::{Error, Result};
use crate::group::{Element, Group};

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `N_G(P)`.
pub fn normalizer(group: &Group, p: &Subgroup) -> Subgroup {
    let gens = p.generators(group);
    let members: Vec<Element> =
        group.elements().filter(|&x| gens.iter().all(|&a| p.contains(group.conjugate(a, x)))).collect();
    Subgroup::from_elements(group, &members).expect("normalizer is a subgroup")
}

/// A Sylow `p`-subgroup, grown one step at a time inside normalizers.
///
/// While `|P| < p^a`, the smallest `x ∈ N_G(P)` with `x ∉ P` and `xᵖ ∈ P` is
/// adjoined. Such an `x` exists because `p` divides `|N_G(P)/P|` whenever
/// `P` is a non-Sylow `p`-subgroup.
pub fn sylow_subgroup(group: &Group, p: usize) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut target = 1;
    let mut rest = group.order();
    while rest.is_multiple_of(p) {
        rest /= p;
        target *= p;
    }
    let mut sylow = Subgroup::trivial(group);
    while sylow.order() < target {
        let n = normalizer(group, &sylow);
        let x = n
            .members()
            .iter()
            .copied()
            .find(|&x| !sylow.contains(x) && sylow.contains(group.pow(x, p as u64)))
            .expect("p divides |N(P)/P| for a non-Sylow p-subgroup");
        let mut seed = sylow.generators(group);
        seed.push(x);
        sylow = subgroup_closure(group, &seed);
    }
    Ok(sylow)
}
