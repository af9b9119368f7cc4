use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{Element, Group, Provenance, DEFAULT_CLOSURE_CAP};
use crate::error::{Error, Result};
use crate::structure::{quotient, Subgroup};

/// `A × B` with its companion maps. Pair `(a, b)` has index `a·|B| + b`.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: Group,
    pub left_embedding: Vec<Element>,
    pub right_embedding: Vec<Element>,
    pub left_projection: Vec<Element>,
    pub right_projection: Vec<Element>,
}

pub fn direct_product(a: &Group, b: &Group) -> Result<DirectProduct> {
    let (na, nb) = (a.order(), b.order());
    let n = na
        .checked_mul(nb)
        .filter(|&n| n <= DEFAULT_CLOSURE_CAP)
        .ok_or(Error::ClosureTooLarge { cap: DEFAULT_CLOSURE_CAP })?;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (Element::from(x / nb), Element::from(x % nb));
        for y in 0..n {
            let (ya, yb) = (Element::from(y / nb), Element::from(y % nb));
            table.push((a.mul(xa, ya).index() * nb + b.mul(xb, yb).index()) as u32);
        }
    }
    let group = Group::from_trusted_table(format!("{}x{}", a.name(), b.name()), Provenance::Product, n, table);
    Ok(DirectProduct {
        group,
        left_embedding: (0..na).map(|x| Element::from(x * nb)).collect(),
        right_embedding: (0..nb).map(Element::from).collect(),
        left_projection: (0..n).map(|x| Element::from(x / nb)).collect(),
        right_projection: (0..n).map(|x| Element::from(x % nb)).collect(),
    })
}

/// `A ∘ B`, the quotient of `A × B` by `{(z, φ(z)⁻¹)}`.
#[derive(Debug, Clone)]
pub struct CentralProduct {
    pub group: Group,
    pub left_embedding: Vec<Element>,
    pub right_embedding: Vec<Element>,
}

/// Central product amalgamating `Z_A` with its image under `phi`.
///
/// `phi` lists `(z, φ(z))` for every `z` in a central subgroup `Z_A ≤ Z(A)`;
/// its image must be a central subgroup of `B`.
pub fn central_product(a: &Group, b: &Group, phi: &[(Element, Element)]) -> Result<CentralProduct> {
    let map: BTreeMap<Element, Element> = phi.iter().copied().collect();
    if map.len() != phi.len() {
        return Err(Error::NotIsomorphism("domain element listed twice".into()));
    }
    for (&z, &w) in &map {
        if !a.contains(z) || !b.contains(w) {
            return Err(Error::NotIsomorphism(format!("pair ({z}, {w}) out of range")));
        }
        if !a.elements().all(|x| a.commute(x, z)) || !b.elements().all(|x| b.commute(x, w)) {
            return Err(Error::NotCentral);
        }
    }
    if map.get(&Element::IDENTITY) != Some(&Element::IDENTITY) {
        return Err(Error::NotIsomorphism("identity must map to identity".into()));
    }
    for (&z1, &w1) in &map {
        for (&z2, &w2) in &map {
            match map.get(&a.mul(z1, z2)) {
                Some(&w) if w == b.mul(w1, w2) => {}
                Some(_) => return Err(Error::NotIsomorphism(format!("not a homomorphism at ({z1}, {z2})"))),
                None => return Err(Error::NotIsomorphism("domain is not a subgroup".into())),
            }
        }
    }
    let mut images: Vec<Element> = map.values().copied().collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != map.len() {
        return Err(Error::NotIsomorphism("map is not injective".into()));
    }

    let product = direct_product(a, b)?;
    let nb = b.order();
    let kernel: Vec<Element> = map.iter().map(|(&z, &w)| Element::from(z.index() * nb + b.inv(w).index())).collect();
    let kernel = Subgroup::from_elements(&product.group, &kernel)?;
    let q = quotient(&product.group, &kernel)?;
    let group = q.quotient.clone().with_name(format!("{}o{}", a.name(), b.name())).with_provenance(Provenance::Product);
    Ok(CentralProduct {
        left_embedding: product.left_embedding.iter().map(|&x| q.project(x)).collect(),
        right_embedding: product.right_embedding.iter().map(|&x| q.project(x)).collect(),
        group,
    })
}
