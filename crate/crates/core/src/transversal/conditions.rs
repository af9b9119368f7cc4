use alloc::format;

use crate::error::{Error, Result};
use crate::group::{Element, Group};
use crate::structure::{
    centralizer_of, centralizer_of_subgroup, conjugacy_classes, is_central, is_normal, quotient, Subgroup,
};

/// Class numbers `k(G)`, `k(G/H)`, `k(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    pub group: usize,
    pub quotient: usize,
    pub subgroup: usize,
}

impl ClassCounts {
    /// `k(G) = k(G/H)·k(H)`.
    pub fn multiplicative(&self) -> bool {
        self.group == self.quotient * self.subgroup
    }
}

/// Outcome of testing a normal subgroup for an invariant transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionsVerdict {
    /// `|H·C_G(H)| = |G|`.
    pub factorization_holds: bool,
    /// `C_{G/H}(Hg) = H·C_G(g)/H` for all `g`.
    pub centralizer_condition_holds: bool,
    /// Smallest class representative violating the centralizer condition.
    pub centralizer_witness: Option<Element>,
    pub class_counts: ClassCounts,
    pub gallagher_holds: bool,
    pub exists_invariant: bool,
    pub central: bool,
    /// No commutator lies in `H \ {1}`; only evaluated when `H ≤ Z(G)`.
    pub commutator_free: Option<bool>,
}

impl ConditionsVerdict {
    pub fn failing_condition(&self) -> Option<crate::error::Condition> {
        use crate::error::Condition;
        if !self.factorization_holds {
            Some(Condition::Factorization)
        } else if !self.centralizer_condition_holds {
            Some(Condition::Centralizer)
        } else {
            None
        }
    }
}

/// Evaluates the factorization and centralizer conditions and the class
/// number relation for a normal subgroup.
///
/// The centralizer condition is checked on one representative per conjugacy
/// class of `G`; both sides are equivariant under conjugation.
pub fn check_conditions(group: &Group, h: &Subgroup) -> Result<ConditionsVerdict> {
    if h.parent_order() != group.order() || !is_normal(group, h) {
        return Err(Error::NotNormal);
    }
    let centralizer_h = centralizer_of_subgroup(group, h);
    let factorization_holds = group.product_set(h.members(), centralizer_h.members()).len() == group.order();

    let q = quotient(group, h)?;
    let classes = conjugacy_classes(group);
    let mut centralizer_witness = None;
    for g in classes.representatives() {
        let lifted = q.image(centralizer_of(group, g).members());
        let in_quotient = centralizer_of(&q.quotient, q.project(g));
        if lifted != in_quotient.members() {
            centralizer_witness = Some(g);
            break;
        }
    }
    let centralizer_condition_holds = centralizer_witness.is_none();

    let class_counts = ClassCounts {
        group: classes.count(),
        quotient: conjugacy_classes(&q.quotient).count(),
        subgroup: conjugacy_classes(&h.to_group(group)).count(),
    };
    let gallagher_holds = class_counts.multiplicative();

    let central = is_central(group, h);
    let commutator_free = central.then(|| {
        group.elements().all(|g| {
            group.elements().all(|x| {
                let c = group.commutator(g, x);
                c.is_identity() || !h.contains(c)
            })
        })
    });

    if gallagher_holds != centralizer_condition_holds {
        return Err(Error::InternalVerificationFailed(format!(
            "class number relation ({}) disagrees with centralizer condition ({})",
            gallagher_holds, centralizer_condition_holds
        )));
    }
    if commutator_free.is_some_and(|free| free != centralizer_condition_holds) {
        return Err(Error::InternalVerificationFailed("commutator scan disagrees with centralizer condition".into()));
    }

    Ok(ConditionsVerdict {
        factorization_holds,
        centralizer_condition_holds,
        centralizer_witness,
        class_counts,
        gallagher_holds,
        exists_invariant: factorization_holds && centralizer_condition_holds,
        central,
        commutator_free,
    })
}
