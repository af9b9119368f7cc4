use alloc::vec;
use alloc::vec::Vec;

use super::{is_abelian, Subgroup};
use crate::error::{Error, Result};
use crate::group::{Element, Group};

/// A homomorphism `H → Z/m` standing for `λ: H → ℂˣ` with `λ(h) = e^{2πi·k/m}`,
/// where `m` is the exponent of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCharacter {
    subgroup: Subgroup,
    modulus: u32,
    /// Exponent of each member of `subgroup`, in member order.
    exponents: Vec<u32>,
}

impl LinearCharacter {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Exponent of `λ(h)`; panics if `h ∉ H`.
    pub fn value(&self, h: Element) -> u32 {
        self.exponents[self.subgroup.position(h).expect("element outside the character's subgroup")]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn kernel(&self) -> Vec<Element> {
        self.subgroup.members().iter().zip(&self.exponents).filter(|(_, &e)| e == 0).map(|(&h, _)| h).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.exponents.iter().filter(|&&e| e == 0).count() == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Pointwise sum of exponents; both characters must live on the same `H`.
    pub fn add(&self, other: &LinearCharacter) -> Result<LinearCharacter> {
        if self.subgroup.members() != other.subgroup.members() || self.modulus != other.modulus {
            return Err(Error::SubgroupMismatch);
        }
        let exponents = self.exponents.iter().zip(&other.exponents).map(|(a, b)| (a + b) % self.modulus).collect();
        Ok(LinearCharacter { subgroup: self.subgroup.clone(), modulus: self.modulus, exponents })
    }

    /// True iff the exponents define a homomorphism on `H`.
    pub fn is_homomorphism(&self, group: &Group) -> bool {
        let members = self.subgroup.members();
        members.iter().enumerate().all(|(i, &a)| {
            members
                .iter()
                .enumerate()
                .all(|(j, &b)| self.value(group.mul(a, b)) == (self.exponents[i] + self.exponents[j]) % self.modulus)
        })
    }
}

/// All `|H|` linear characters of an abelian subgroup.
///
/// `H` is built as a chain `1 = H₀ < H₁ < … = H`, each step adjoining the
/// element of largest order outside the current term (smallest index on
/// ties). If `d` is least with `gᵈ ∈ Hᵢ`, a character `χ` of `Hᵢ` extends in
/// exactly `d` ways: `λ(g) = v` with `d·v ≡ χ(gᵈ) (mod m)`. The trivial
/// character comes first; the rest follow in mixed-radix order of the choices.
pub fn linear_characters(group: &Group, h: &Subgroup) -> Result<Vec<LinearCharacter>> {
    if !is_abelian(group, h) {
        return Err(Error::NotAbelian);
    }
    let orders: Vec<usize> = h.members().iter().map(|&x| group.element_order(x)).collect();
    let modulus = orders.iter().copied().fold(1, crate::group::lcm);
    let m = modulus as u64;

    const UNSET: u32 = u32::MAX;
    // Characters on the current chain term, as full-length arrays over G.
    let mut chain = vec![Element::IDENTITY];
    let mut in_chain = vec![false; group.order()];
    in_chain[0] = true;
    let mut characters: Vec<Vec<u32>> = vec![{
        let mut values = vec![UNSET; group.order()];
        values[0] = 0;
        values
    }];

    while chain.len() < h.order() {
        let (g, _) = h
            .members()
            .iter()
            .zip(&orders)
            .filter(|(&x, _)| !in_chain[x.index()])
            .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
            .map(|(&x, &o)| (x, o))
            .expect("chain is a proper subgroup");
        let mut d = 1u64;
        let mut power = g;
        while !in_chain[power.index()] {
            power = group.mul(power, g);
            d += 1;
        }
        // power = gᵈ ∈ Hᵢ. New term: h·gʲ for h in Hᵢ, 0 ≤ j < d.
        let mut extended_chain = Vec::with_capacity(chain.len() * d as usize);
        let mut powers = Vec::with_capacity(d as usize);
        let mut gj = Element::IDENTITY;
        for _ in 0..d {
            powers.push(gj);
            gj = group.mul(gj, g);
        }
        for &pj in &powers {
            for &x in &chain {
                extended_chain.push(group.mul(x, pj));
            }
        }
        let mut next = Vec::with_capacity(characters.len() * d as usize);
        for chi in &characters {
            let c = chi[power.index()] as u64;
            debug_assert_eq!(c % d, 0);
            let base = c / d;
            let step = m / d;
            for k in 0..d {
                let v = (base + k * step) % m;
                let mut values = chi.clone();
                for (j, &pj) in powers.iter().enumerate() {
                    let shift = (j as u64 * v) % m;
                    for &x in &chain {
                        let y = group.mul(x, pj);
                        values[y.index()] = ((chi[x.index()] as u64 + shift) % m) as u32;
                    }
                }
                next.push(values);
            }
        }
        characters = next;
        for &y in &extended_chain {
            in_chain[y.index()] = true;
        }
        chain = extended_chain;
    }

    Ok(characters
        .into_iter()
        .map(|values| LinearCharacter {
            subgroup: h.clone(),
            modulus: modulus as u32,
            exponents: h.members().iter().map(|&x| values[x.index()]).collect(),
        })
        .collect())
}
