use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Group, Provenance};
use crate::error::{Error, Result};

/// Default bound on the number of elements a closure may enumerate.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

struct Closure {
    elements: Vec<Vec<u32>>,
    /// For each element other than the identity: (parent index, generator index)
    /// with `element = parent · generator`.
    parents: Vec<(u32, u32)>,
    /// `right[s][x]` = index of `x · generator_s`.
    right: Vec<Vec<u32>>,
}

fn validate(degree: usize, generators: &[Vec<usize>]) -> Result<Vec<Vec<u32>>> {
    if degree == 0 {
        return Err(Error::UnsupportedParameter("degree must be positive".into()));
    }
    if generators.is_empty() {
        return Err(Error::UnsupportedParameter("generator list is empty".into()));
    }
    let mut out = Vec::with_capacity(generators.len());
    for (index, images) in generators.iter().enumerate() {
        let mut seen = alloc::vec![false; degree];
        if images.len() != degree {
            return Err(Error::NotAPermutation { index, degree });
        }
        for &image in images {
            if image >= degree || seen[image] {
                return Err(Error::NotAPermutation { index, degree });
            }
            seen[image] = true;
        }
        out.push(images.iter().map(|&i| i as u32).collect());
    }
    Ok(out)
}

/// Left-to-right composition: apply `a` first, then `b`.
fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn close(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Closure> {
    let gens = validate(degree, generators)?;
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut index: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = alloc::vec![identity];
    let mut parents = alloc::vec![(0, 0)];
    let mut right: Vec<Vec<u32>> = alloc::vec![Vec::new(); gens.len()];

    let mut i = 0;
    while i < elements.len() {
        for (s, gen) in gens.iter().enumerate() {
            let product = compose(&elements[i], gen);
            let next = elements.len() as u32;
            let j = *index.entry(product.clone()).or_insert(next);
            if j == next {
                if elements.len() >= cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                elements.push(product);
                parents.push((i as u32, s as u32));
            }
            right[s].push(j);
        }
        i += 1;
    }
    Ok(Closure { elements, parents, right })
}

/// Breadth-first enumeration of the permutation group generated by
/// `generators`: identity first, then right multiplication of each
/// enumerated element by the generators in listed order.
pub fn enumerate_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Vec<Vec<usize>>> {
    let closure = close(degree, generators, cap)?;
    Ok(closure.elements.into_iter().map(|p| p.into_iter().map(|x| x as usize).collect()).collect())
}

impl Group {
    /// Permutation group generated by image arrays, over the BFS enumeration
    /// of [`enumerate_permutations`], capped at [`DEFAULT_CLOSURE_CAP`].
    pub fn from_permutations(name: impl Into<String>, degree: usize, generators: &[Vec<usize>]) -> Result<Group> {
        Self::from_permutations_capped(name, degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_permutations_capped(
        name: impl Into<String>,
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Group> {
        let closure = close(degree, generators, cap)?;
        let n = closure.elements.len();
        let mut table = alloc::vec![0u32; n * n];
        // a·b = (a·parent(b))·s where b = parent(b)·s, filled in BFS order.
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u32;
            for b in 1..n {
                let (parent, s) = closure.parents[b];
                row[b] = closure.right[s as usize][row[parent as usize] as usize];
            }
        }
        Ok(Group::from_trusted_table(name.into(), Provenance::PermutationClosure, n, table))
    }
}
