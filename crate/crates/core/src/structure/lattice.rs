use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{conjugacy_classes, join, subgroup_closure, Subgroup};
use crate::error::{Error, Result};
use crate::group::{Element, Group};

/// Default bound on `k(G)` for lattice enumeration.
pub const DEFAULT_CLASS_CAP: usize = 64;

/// Every normal subgroup of `group`, sorted by order then members.
///
/// Each normal subgroup is a union of classes, so it is the join of the
/// normal closures of the classes it contains. The set of class closures is
/// closed under pairwise joins until stable.
pub fn normal_subgroups(group: &Group, class_cap: usize) -> Result<Vec<Subgroup>> {
    let classes = conjugacy_classes(group);
    if classes.count() > class_cap {
        return Err(Error::TooManyClasses { classes: classes.count(), cap: class_cap });
    }
    let mut seen: BTreeSet<Vec<Element>> = BTreeSet::new();
    let mut found: Vec<Subgroup> = Vec::new();
    let mut push = |h: Subgroup, found: &mut Vec<Subgroup>| {
        if seen.insert(h.members().to_vec()) {
            found.push(h.mark_normal());
            true
        } else {
            false
        }
    };
    push(Subgroup::trivial(group), &mut found);
    push(Subgroup::whole(group), &mut found);
    for class in classes.classes() {
        push(subgroup_closure(group, class), &mut found);
    }
    let mut start = 0;
    loop {
        let end = found.len();
        let mut added = false;
        for i in 0..end {
            for j in start.max(i + 1)..end {
                let joined = join(group, &found[i], &found[j]);
                added |= push(joined, &mut found);
            }
        }
        if !added {
            break;
        }
        start = end;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(found)
}
