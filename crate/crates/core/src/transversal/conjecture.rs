use super::check_conditions;
use crate::error::Result;
use crate::group::Group;
use crate::structure::{commutator_subgroup, is_abelian, Subgroup};

/// Whether `(G, H)` refutes "an abelian `H` with a `G`-invariant transversal
/// meets `G'` trivially". Evaluated for normal `H` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleStatus {
    pub abelian: bool,
    pub admits: bool,
    /// `H ∩ G'`.
    pub meets_derived: Subgroup,
    pub is_counterexample: bool,
}

pub fn counterexample_status(group: &Group, h: &Subgroup) -> Result<CounterexampleStatus> {
    let admits = check_conditions(group, h)?.exists_invariant;
    let abelian = is_abelian(group, h);
    let meets_derived = h.intersection(&commutator_subgroup(group));
    let is_counterexample = abelian && admits && !meets_derived.is_trivial();
    Ok(CounterexampleStatus { abelian, admits, meets_derived, is_counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::group::{builtin_group, Element, Family};
    use crate::structure::{center, is_abelian, normal_subgroups, subgroup_closure, DEFAULT_CLASS_CAP};

    #[test]
    fn dihedral_center_is_not_a_counterexample() {
        let g = builtin_group(Family::Dihedral(8)).unwrap();
        let status = counterexample_status(&g, &center(&g)).unwrap();
        assert!(status.abelian);
        assert!(!status.admits);
        assert_eq!(status.meets_derived.order(), 2);
        assert!(!status.is_counterexample);
    }

    #[test]
    fn central_and_disjoint_from_derived_admits() {
        let c6 = builtin_group(Family::Cyclic(6)).unwrap();
        let status = counterexample_status(&c6, &subgroup_closure(&c6, &[Element(2)])).unwrap();
        assert!(status.admits && !status.is_counterexample);
    }

    #[test]
    fn no_counterexamples_in_the_fixture_corpus() {
        for g in crate::group::fixture_corpus().into_iter().filter(|g| g.order() <= 24) {
            for h in normal_subgroups(&g, DEFAULT_CLASS_CAP).unwrap() {
                if !is_abelian(&g, &h) {
                    continue;
                }
                assert!(!counterexample_status(&g, &h).unwrap().is_counterexample, "{}", g.name());
            }
        }
    }

    #[test]
    fn non_normal_rejected() {
        let g = builtin_group(Family::Dihedral(8)).unwrap();
        let s = subgroup_closure(&g, &[Element(4)]);
        assert_eq!(counterexample_status(&g, &s).unwrap_err(), Error::NotNormal);
    }
}
