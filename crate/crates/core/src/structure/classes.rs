use alloc::vec;
use alloc::vec::Vec;

use super::Subgroup;
use crate::group::{Element, Group};

/// Partition of a group into orbits of a conjugation action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    class_of: Vec<u32>,
    classes: Vec<Vec<Element>>,
}

impl ClassPartition {
    /// Number of classes.
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, g: Element) -> usize {
        self.class_of[g.index()] as usize
    }

    pub fn class(&self, id: usize) -> &[Element] {
        &self.classes[id]
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    /// Minimal-index element of each class, in class-id order.
    pub fn representatives(&self) -> impl Iterator<Item = Element> + '_ {
        self.classes.iter().map(|c| c[0])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Conjugacy classes of `group`, ids ordered by minimal element index.
pub fn conjugacy_classes(group: &Group) -> ClassPartition {
    orbits(group, &group.generating_set())
}

/// Orbits of `group` under conjugation by the subgroup `acting`.
pub fn conjugation_orbits(group: &Group, acting: &Subgroup) -> ClassPartition {
    orbits(group, &acting.generators(group))
}

fn orbits(group: &Group, gens: &[Element]) -> ClassPartition {
    const UNSET: u32 = u32::MAX;
    let mut class_of = vec![UNSET; group.order()];
    let mut classes = Vec::new();
    for g in group.elements() {
        if class_of[g.index()] != UNSET {
            continue;
        }
        let id = classes.len() as u32;
        class_of[g.index()] = id;
        let mut orbit = vec![g];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &x in gens {
                let z = group.conjugate(y, x);
                if class_of[z.index()] == UNSET {
                    class_of[z.index()] = id;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    ClassPartition { class_of, classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, Family};
    use crate::structure::centralizer_of;

    fn sorted_sizes(p: &ClassPartition) -> Vec<usize> {
        let mut s = p.sizes();
        s.sort_unstable();
        s
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = builtin_group(Family::Cyclic(10)).unwrap();
        let p = conjugacy_classes(&g);
        assert_eq!(p.count(), 10);
        assert!(p.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn d8_and_s4_class_sizes() {
        let d8 = builtin_group(Family::Dihedral(8)).unwrap();
        assert_eq!(sorted_sizes(&conjugacy_classes(&d8)), [1, 1, 2, 2, 2]);
        let s4 = builtin_group(Family::Symmetric(4)).unwrap();
        assert_eq!(sorted_sizes(&conjugacy_classes(&s4)), [1, 3, 6, 6, 8]);
    }

    #[test]
    fn orbit_stabilizer_and_invariance() {
        let s4 = builtin_group(Family::Symmetric(4)).unwrap();
        let p = conjugacy_classes(&s4);
        assert_eq!(p.class(0), &[Element(0)]);
        for class in p.classes() {
            let g = class[0];
            assert_eq!(centralizer_of(&s4, g).order() * class.len(), s4.order());
            for x in s4.elements() {
                let mut image: Vec<Element> = class.iter().map(|&c| s4.conjugate(c, x)).collect();
                image.sort_unstable();
                assert_eq!(&image, class);
            }
        }
        let reps: Vec<Element> = p.representatives().collect();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
    }
}
