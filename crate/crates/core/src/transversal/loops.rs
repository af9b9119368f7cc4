use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{is_transversal, Transversal};
use crate::error::Result;
use crate::group::{Element, Group};
use crate::structure::{right_cosets, Subgroup};

/// The operation `a ∘ b` = the element of `T` in `H·a·b`, with its axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopReport {
    /// `T` in coset order, identity first.
    pub elements: Vec<Element>,
    /// Row-major `|T|×|T|` table of positions into `elements`.
    pub table: Vec<u32>,
    /// Whether the identity replaced the original representative of `H`.
    pub identity_swapped: bool,
    /// `T` is a transversal for every conjugate `x⁻¹Hx`.
    pub is_loop_transversal: bool,
    /// Two-sided identity and unique division (Latin square).
    pub is_loop: bool,
    pub is_associative: bool,
}

impl LoopReport {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }
}

pub fn loop_from_transversal(group: &Group, h: &Subgroup, set: &[Element]) -> Result<LoopReport> {
    let t = Transversal::new(group, h, set)?;
    let identity_swapped = !t.members()[0].is_identity();
    let t = t.with_identity();
    let elements = t.members().to_vec();
    let n = elements.len();
    let cosets = right_cosets(group, h);
    let mut table = Vec::with_capacity(n * n);
    for &a in &elements {
        for &b in &elements {
            table.push(cosets.coset_of(group.mul(a, b)) as u32);
        }
    }

    let mut conjugates: BTreeSet<Vec<Element>> = BTreeSet::new();
    for x in group.elements() {
        let mut c: Vec<Element> = h.members().iter().map(|&y| group.conjugate(y, x)).collect();
        c.sort_unstable();
        conjugates.insert(c);
    }
    let is_loop_transversal = conjugates.iter().all(|members| {
        let conj = Subgroup::from_elements(group, members).expect("conjugate of a subgroup");
        is_transversal(group, &conj, &elements)
    });

    let identity_ok = (0..n).all(|i| table[i] as usize == i && table[i * n] as usize == i);
    let is_loop = identity_ok && latin(n, &table);
    let is_associative = (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = table[a * n + b] as usize;
            (0..n).all(|c| table[ab * n + c] == table[a * n + table[b * n + c] as usize])
        })
    });
    Ok(LoopReport { elements, table, identity_swapped, is_loop_transversal, is_loop, is_associative })
}

fn latin(n: usize, table: &[u32]) -> bool {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == i {
                return false;
            }
            seen[v] = i;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == j {
                return false;
            }
            seen[v] = j;
        }
    }
    true
}
