//! Factor sets of central extensions `1 → H → G → G/H → 1`.
//!
//! A transversal `{t_x̄}` with `t_1̄ = 1` gives the normalized 2-cocycle
//! `γ(x̄, ȳ) = t_x̄·t_ȳ·t_x̄ȳ⁻¹ ∈ H`. Composing with a linear character
//! `λ: H → Z/m` gives an additive cocycle `α = λ∘γ` with exact values.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::structure::{
    centralizer_of, commutator_subgroup, conjugacy_classes, is_central, quotient, LinearCharacter, QuotientMap,
    Subgroup,
};
use crate::transversal::Transversal;

/// `γ ∈ Z²(G/H, H)` read off a transversal.
#[derive(Debug, Clone)]
pub struct CocycleTable {
    map: QuotientMap,
    /// `t_x̄` for each quotient element, `t_1̄ = 1`.
    representatives: Vec<Element>,
    values: Vec<Element>,
}

impl CocycleTable {
    pub fn quotient(&self) -> &Group {
        &self.map.quotient
    }

    pub fn quotient_map(&self) -> &QuotientMap {
        &self.map
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.map.kernel
    }

    pub fn representatives(&self) -> &[Element] {
        &self.representatives
    }

    /// `γ(x̄, ȳ)` as an element of `G` lying in `H`.
    pub fn value(&self, x: Element, y: Element) -> Element {
        self.values[x.index() * self.map.quotient.order() + y.index()]
    }
}

/// Factor set of the transversal `set` of a central subgroup `H`.
///
/// The representative of `H` is replaced by the identity before reading off
/// `γ`, so the table is normalized.
pub fn cocycle_from_transversal(group: &Group, h: &Subgroup, set: &[Element]) -> Result<CocycleTable> {
    if !is_central(group, h) {
        return Err(Error::NotCentral);
    }
    let t = Transversal::new(group, h, set)?.with_identity();
    let map = quotient(group, h)?;
    let n = map.quotient.order();
    let mut representatives = alloc::vec![Element::IDENTITY; n];
    for &x in t.members() {
        representatives[map.project(x).index()] = x;
    }
    let mut values = Vec::with_capacity(n * n);
    for x in map.quotient.elements() {
        for y in map.quotient.elements() {
            let xy = map.quotient.mul(x, y);
            let product = group.mul(representatives[x.index()], representatives[y.index()]);
            let v = group.mul(product, group.inv(representatives[xy.index()]));
            if !h.contains(v) {
                return Err(Error::InternalVerificationFailed("factor set value outside H".into()));
            }
            values.push(v);
        }
    }
    let table = CocycleTable { map, representatives, values };
    let q = table.quotient();
    for x in q.elements() {
        for y in q.elements() {
            for z in q.elements() {
                let lhs = group.mul(table.value(x, y), table.value(q.mul(x, y), z));
                let rhs = group.mul(table.value(y, z), table.value(x, q.mul(y, z)));
                if lhs != rhs {
                    return Err(Error::CocycleIdentityFailed(x, y, z));
                }
            }
        }
    }
    Ok(table)
}

/// Outcome of [`symmetric_on_commuting`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symmetry {
    pub holds: bool,
    /// Least commuting pair `(x̄, ȳ)` with `γ(x̄, ȳ) ≠ γ(ȳ, x̄)`.
    pub witness: Option<(Element, Element)>,
}

/// Whether `γ(x̄, ȳ) = γ(ȳ, x̄)` for every commuting pair of `G/H`. For central
/// `H` this is the centralizer condition for `(G, H)`.
pub fn symmetric_on_commuting(gamma: &CocycleTable) -> Symmetry {
    let q = gamma.quotient();
    for x in q.elements() {
        for y in q.elements() {
            if q.commute(x, y) && gamma.value(x, y) != gamma.value(y, x) {
                return Symmetry { holds: false, witness: Some((x, y)) };
            }
        }
    }
    Symmetry { holds: true, witness: None }
}

/// `α = λ∘γ`, an additive cocycle with values in `Z/m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedCocycle {
    quotient: Group,
    modulus: u32,
    values: Vec<u32>,
}

impl TwistedCocycle {
    pub fn quotient(&self) -> &Group {
        &self.quotient
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn value(&self, x: Element, y: Element) -> u32 {
        self.values[x.index() * self.quotient.order() + y.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

pub fn twist_by_character(gamma: &CocycleTable, lambda: &LinearCharacter) -> Result<TwistedCocycle> {
    if lambda.subgroup().members() != gamma.subgroup().members() {
        return Err(Error::SubgroupMismatch);
    }
    let q = gamma.quotient();
    let m = lambda.modulus();
    let values = gamma.values.iter().map(|&h| lambda.value(h)).collect();
    let alpha = TwistedCocycle { quotient: q.clone(), modulus: m, values };
    for x in q.elements() {
        for y in q.elements() {
            for z in q.elements() {
                let lhs = (alpha.value(x, y) + alpha.value(q.mul(x, y), z)) % m;
                let rhs = (alpha.value(y, z) + alpha.value(x, q.mul(y, z))) % m;
                if lhs != rhs {
                    return Err(Error::CocycleIdentityFailed(x, y, z));
                }
            }
        }
    }
    Ok(alpha)
}

/// The `α`-regular elements of `G/H` and the number of classes made of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaRegularity {
    pub regular: Vec<Element>,
    pub regular_classes: usize,
}

impl AlphaRegularity {
    pub fn all_regular(&self, quotient_order: usize) -> bool {
        self.regular.len() == quotient_order
    }
}

/// `x̄` is `α`-regular when `α(x̄, ȳ) = α(ȳ, x̄)` for every `ȳ ∈ C(x̄)`.
pub fn alpha_regular_elements(alpha: &TwistedCocycle) -> AlphaRegularity {
    let q = alpha.quotient();
    let regular: Vec<Element> = q
        .elements()
        .filter(|&x| centralizer_of(q, x).members().iter().all(|&y| alpha.value(x, y) == alpha.value(y, x)))
        .collect();
    let mut is_regular = alloc::vec![false; q.order()];
    for &x in &regular {
        is_regular[x.index()] = true;
    }
    let regular_classes =
        conjugacy_classes(q).classes().iter().filter(|class| class.iter().all(|&x| is_regular[x.index()])).count();
    AlphaRegularity { regular, regular_classes }
}

/// Whether `[λ∘γ]` is trivial in `H²(G/H, ℂˣ)`: true iff
/// `H ∩ Z(G') ≤ ker λ`. Needs no transversal.
pub fn alpha_class_is_trivial(group: &Group, h: &Subgroup, lambda: &LinearCharacter) -> Result<bool> {
    if !is_central(group, h) {
        return Err(Error::NotCentral);
    }
    if lambda.subgroup().members() != h.members() {
        return Err(Error::SubgroupMismatch);
    }
    let derived = commutator_subgroup(group);
    let derived_gens = derived.generators(group);
    Ok(h.members()
        .iter()
        .filter(|&&x| derived.contains(x) && derived_gens.iter().all(|&d| group.commute(x, d)))
        .all(|&x| lambda.value(x) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, quaternion, Family};
    use crate::structure::{center, linear_characters, subgroup_closure};

    fn c4_over_c2() -> (Group, Subgroup, CocycleTable) {
        let g = builtin_group(Family::Cyclic(4)).unwrap();
        let h = subgroup_closure(&g, &[Element(2)]);
        let gamma = cocycle_from_transversal(&g, &h, &[Element(0), Element(1)]).unwrap();
        (g, h, gamma)
    }

    fn q8_over_center() -> (Group, Subgroup, CocycleTable) {
        use quaternion::{I, J, K, ONE};
        let g = builtin_group(Family::Quaternion).unwrap();
        let z = center(&g);
        let gamma = cocycle_from_transversal(&g, &z, &[ONE, I, J, K]).unwrap();
        (g, z, gamma)
    }

    fn faithful(g: &Group, h: &Subgroup) -> LinearCharacter {
        linear_characters(g, h).unwrap().into_iter().find(LinearCharacter::is_faithful).unwrap()
    }

    #[test]
    fn split_extension_has_trivial_cocycle() {
        let c2 = builtin_group(Family::Cyclic(2)).unwrap();
        let c3 = builtin_group(Family::Cyclic(3)).unwrap();
        let p = crate::group::direct_product(&c3, &c2).unwrap();
        let h = subgroup_closure(&p.group, &[p.right_embedding[1]]);
        let gamma = cocycle_from_transversal(&p.group, &h, &p.left_embedding).unwrap();
        let q = gamma.quotient();
        assert!(q.elements().all(|x| q.elements().all(|y| gamma.value(x, y).is_identity())));
        assert!(symmetric_on_commuting(&gamma).holds);
    }

    #[test]
    fn c4_over_c2_values() {
        let (_, _, gamma) = c4_over_c2();
        let (zero, one) = (Element(0), Element(1));
        assert_eq!(gamma.value(one, one), Element(2));
        assert_eq!(gamma.value(zero, one), zero);
        assert_eq!(gamma.value(one, zero), zero);
        assert_eq!(gamma.value(zero, zero), zero);
        assert!(symmetric_on_commuting(&gamma).holds);
    }

    #[test]
    fn q8_values_and_asymmetry() {
        let (_, _, gamma) = q8_over_center();
        // Quotient elements follow coset minima: 1̄, ī, j̄, k̄.
        let (i, j) = (Element(1), Element(2));
        assert_eq!(gamma.value(i, j), quaternion::ONE);
        assert_eq!(gamma.value(j, i), quaternion::MINUS_ONE);
        assert_eq!(symmetric_on_commuting(&gamma), Symmetry { holds: false, witness: Some((i, j)) });
    }

    #[test]
    fn twisting() {
        let (g, h, gamma) = c4_over_c2();
        let chars = linear_characters(&g, &h).unwrap();
        assert!(twist_by_character(&gamma, &chars[0]).unwrap().is_zero());
        let alpha = twist_by_character(&gamma, &faithful(&g, &h)).unwrap();
        assert_eq!(alpha.value(Element(1), Element(1)), 1);
        assert_eq!(alpha.modulus(), 2);
        assert_eq!(alpha.value(Element(0), Element(1)), 0);

        let (g, z, gamma) = q8_over_center();
        let alpha = twist_by_character(&gamma, &faithful(&g, &z)).unwrap();
        assert_eq!(alpha.value(Element(1), Element(2)), 0);
        assert_eq!(alpha.value(Element(2), Element(1)), 1);
    }

    #[test]
    fn mismatched_character_rejected() {
        let (_, _, gamma) = c4_over_c2();
        let g = builtin_group(Family::Cyclic(4)).unwrap();
        let whole = Subgroup::whole(&g);
        let chi = &linear_characters(&g, &whole).unwrap()[1];
        assert_eq!(twist_by_character(&gamma, chi).unwrap_err(), Error::SubgroupMismatch);
    }

    #[test]
    fn regularity() {
        let (g, h, gamma) = c4_over_c2();
        let chars = linear_characters(&g, &h).unwrap();
        let zero = alpha_regular_elements(&twist_by_character(&gamma, &chars[0]).unwrap());
        assert_eq!(zero.regular_classes, 2);
        let alpha = twist_by_character(&gamma, &faithful(&g, &h)).unwrap();
        let r = alpha_regular_elements(&alpha);
        assert_eq!(r.regular, [Element(0), Element(1)]);

        let (g, z, gamma) = q8_over_center();
        let alpha = twist_by_character(&gamma, &faithful(&g, &z)).unwrap();
        let r = alpha_regular_elements(&alpha);
        assert_eq!(r.regular, [Element(0)]);
        assert_eq!(r.regular_classes, 1);
    }

    #[test]
    fn class_triviality() {
        let (g, h, _) = c4_over_c2();
        assert!(alpha_class_is_trivial(&g, &h, &faithful(&g, &h)).unwrap());
        let (g, z, _) = q8_over_center();
        assert!(!alpha_class_is_trivial(&g, &z, &faithful(&g, &z)).unwrap());
        assert!(alpha_class_is_trivial(&g, &z, &linear_characters(&g, &z).unwrap()[0]).unwrap());
        let d8 = builtin_group(Family::Dihedral(8)).unwrap();
        let r = subgroup_closure(&d8, &[Element(1)]);
        let chi = &linear_characters(&d8, &r).unwrap()[0];
        assert_eq!(alpha_class_is_trivial(&d8, &r, chi).unwrap_err(), Error::NotCentral);
    }

    #[test]
    fn symmetry_and_regularity_do_not_depend_on_the_transversal() {
        use crate::transversal::{check_conditions, enumerate_transversals};
        for g in crate::group::fixture_corpus().into_iter().filter(|g| g.order() <= 16) {
            for h in crate::structure::normal_subgroups(&g, 64).unwrap() {
                if !is_central(&g, &h) {
                    continue;
                }
                let expected = check_conditions(&g, &h).unwrap().centralizer_condition_holds;
                let chars: Vec<_> =
                    linear_characters(&g, &h).unwrap().into_iter().filter(|c| c.is_faithful()).collect();
                let mut regular_counts = None;
                for t in enumerate_transversals(&g, &h).take(256) {
                    let gamma = cocycle_from_transversal(&g, &h, &t).unwrap();
                    assert_eq!(symmetric_on_commuting(&gamma).holds, expected, "{}", g.name());
                    let counts: Vec<usize> = chars
                        .iter()
                        .map(|l| alpha_regular_elements(&twist_by_character(&gamma, l).unwrap()).regular.len())
                        .collect();
                    if let Some(first) = &regular_counts {
                        assert_eq!(first, &counts);
                    }
                    regular_counts = Some(counts);
                }
            }
        }
    }

    #[test]
    fn non_central_rejected() {
        let d8 = builtin_group(Family::Dihedral(8)).unwrap();
        let r = subgroup_closure(&d8, &[Element(1)]);
        assert_eq!(cocycle_from_transversal(&d8, &r, &[Element(0), Element(4)]).unwrap_err(), Error::NotCentral);
        let z = center(&d8);
        assert_eq!(
            cocycle_from_transversal(&d8, &z, &[Element(0), Element(2), Element(4), Element(5)]).unwrap_err(),
            Error::NotATransversal
        );
    }
}
