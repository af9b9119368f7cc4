use alloc::vec;
use alloc::vec::Vec;

use super::Transversal;
use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::structure::{conjugation_orbits, right_cosets, ClassPartition, CosetPartition, Subgroup};

/// Default node budget for [`brute_force_invariant_transversal`].
pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub transversal: Option<Transversal>,
    /// Orbit choices tried.
    pub nodes: u64,
}

/// Exhaustive search for an `L`-invariant transversal of `H\G`.
///
/// An invariant transversal is a union of `L`-orbits under conjugation, so the
/// search picks whole orbits: at the first unfilled coset it tries each member
/// in increasing index order and adds that member's orbit if the orbit meets
/// distinct, still-unfilled cosets. The first solution is the least one when
/// transversals are compared as representative vectors in coset order.
pub fn brute_force_invariant_transversal(
    group: &Group,
    h: &Subgroup,
    acting: &Subgroup,
    cap: u64,
) -> Result<SearchOutcome> {
    let cosets = right_cosets(group, h);
    let orbits = conjugation_orbits(group, acting);
    let footprints: Vec<Option<Vec<u32>>> = orbits
        .classes()
        .iter()
        .map(|orbit| {
            let mut hit: Vec<u32> = orbit.iter().map(|&x| cosets.coset_of(x) as u32).collect();
            let len = hit.len();
            hit.sort_unstable();
            hit.dedup();
            (hit.len() == len).then_some(hit)
        })
        .collect();
    let members: Vec<Vec<Element>> = (0..cosets.count()).map(|c| cosets.members(c).collect()).collect();
    let mut search = Search {
        cosets: &cosets,
        orbits: &orbits,
        footprints: &footprints,
        members: &members,
        chosen: vec![None; cosets.count()],
        nodes: 0,
        cap,
    };
    let found = search.run(0)?;
    let nodes = search.nodes;
    let transversal = if found {
        let set: Vec<Element> = search.chosen.iter().map(|c| c.unwrap()).collect();
        Some(Transversal::new(group, h, &set)?)
    } else {
        None
    };
    Ok(SearchOutcome { transversal, nodes })
}

struct Search<'a> {
    cosets: &'a CosetPartition,
    orbits: &'a ClassPartition,
    footprints: &'a [Option<Vec<u32>>],
    members: &'a [Vec<Element>],
    chosen: Vec<Option<Element>>,
    nodes: u64,
    cap: u64,
}

impl Search<'_> {
    fn run(&mut self, from: usize) -> Result<bool> {
        let Some(coset) = (from..self.chosen.len()).find(|&c| self.chosen[c].is_none()) else {
            return Ok(true);
        };
        for &x in &self.members[coset] {
            let orbit_id = self.orbits.class_of(x);
            let Some(footprint) = &self.footprints[orbit_id] else {
                continue;
            };
            if footprint.iter().any(|&c| self.chosen[c as usize].is_some()) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::SearchSpaceTooLarge { cap: self.cap });
            }
            for &y in self.orbits.class(orbit_id) {
                self.chosen[self.cosets.coset_of(y)] = Some(y);
            }
            if self.run(coset + 1)? {
                return Ok(true);
            }
            for &c in footprint {
                self.chosen[c as usize] = None;
            }
        }
        Ok(false)
    }
}
