use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{central_product, direct_product, Element, Group, Provenance};
use crate::error::{Error, Result};

const MAX_CYCLIC: usize = 4096;
const MAX_SYMMETRIC_DEGREE: usize = 7;

/// Named families with fixed generator conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z/n`, element `i` is `i mod n`, generator 1.
    Cyclic(usize),
    /// Dihedral group of the given order `2n`: element `a + n·b` is `r^a s^b`.
    Dihedral(usize),
    /// `Q₈`: indices `1, i, j, k, −1, −i, −j, −k`.
    Quaternion,
    /// `S_n` from `(0 1)` and `(0 1 … n−1)`.
    Symmetric(usize),
    /// `(Z/p)^k`, element index read as base-`p` digits.
    ElementaryAbelian { p: usize, k: u32 },
}

pub mod dihedral {
    use super::Element;

    /// `r` in the dihedral group of order `2n`.
    pub fn rotation(n: usize) -> Element {
        Element::from(1 % n)
    }

    /// `s` in the dihedral group of order `2n`.
    pub fn reflection(n: usize) -> Element {
        Element::from(n)
    }
}

pub mod quaternion {
    use super::Element;

    pub const ONE: Element = Element(0);
    pub const I: Element = Element(1);
    pub const J: Element = Element(2);
    pub const K: Element = Element(3);
    pub const MINUS_ONE: Element = Element(4);
}

pub fn builtin_group(family: Family) -> Result<Group> {
    let group = match family {
        Family::Cyclic(n) => {
            if n == 0 || n > MAX_CYCLIC {
                return Err(unsupported(format!("cyclic order {n}")));
            }
            table_group(format!("C{n}"), n, |a, b| (a + b) % n)
        }
        Family::Dihedral(order) => {
            if order < 2 || order % 2 != 0 || order > MAX_CYCLIC {
                return Err(unsupported(format!("dihedral order {order}")));
            }
            let n = order / 2;
            table_group(format!("D{order}"), order, |x, y| {
                let (a, b) = (x % n, x / n);
                let (c, d) = (y % n, y / n);
                let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                rot + n * ((b + d) % 2)
            })
        }
        Family::Quaternion => table_group("Q8".into(), 8, |x, y| {
            let (sx, bx) = (x / 4, x % 4);
            let (sy, by) = (y / 4, y % 4);
            let (sign, basis) = quaternion_units(bx, by);
            basis + 4 * ((sx + sy + sign) % 2)
        }),
        Family::Symmetric(n) => {
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(unsupported(format!("symmetric degree {n}")));
            }
            if n == 1 {
                table_group("S1".into(), 1, |_, _| 0)
            } else {
                let mut transposition: Vec<usize> = (0..n).collect();
                transposition.swap(0, 1);
                let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                Group::from_permutations(format!("S{n}"), n, &[transposition, cycle])?
                    .with_provenance(Provenance::BuiltinFamily)
            }
        }
        Family::ElementaryAbelian { p, k } => {
            if !crate::structure::is_prime(p) {
                return Err(unsupported(format!("{p} is not prime")));
            }
            let order = p
                .checked_pow(k)
                .filter(|&o| o <= MAX_CYCLIC)
                .ok_or_else(|| unsupported(format!("elementary abelian {p}^{k}")))?;
            table_group(format!("{p}^{k}"), order, |mut a, mut b| {
                let (mut out, mut place) = (0, 1);
                for _ in 0..k {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out
            })
        }
    };
    Ok(group)
}

fn unsupported(msg: String) -> Error {
    Error::UnsupportedParameter(msg)
}

fn table_group(name: String, order: usize, op: impl Fn(usize, usize) -> usize) -> Group {
    let mut table = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = op(a, b) as u32;
        }
    }
    Group::from_trusted_table(name, Provenance::BuiltinFamily, order, table)
}

/// Product of quaternion units `1, i, j, k` as (sign bit, unit).
fn quaternion_units(x: usize, y: usize) -> (usize, usize) {
    match (x, y) {
        (0, b) => (0, b),
        (a, 0) => (0, a),
        (a, b) if a == b => (1, 0),
        (1, 2) => (0, 3),
        (2, 3) => (0, 1),
        (3, 1) => (0, 2),
        (2, 1) => (1, 3),
        (3, 2) => (1, 1),
        (1, 3) => (1, 2),
        _ => unreachable!(),
    }
}

/// The fixture corpus used by the oracle and acceptance suites: cyclic groups
/// of order ≤ 16, dihedral groups of order 4..=16, `Q₈`, `S₃`, `S₄`, `A₄`
/// from permutations, `C₂×C₄`, `C₂³`, `Q₈×C₂`, `D₈×C₂`, `C₄∘C₄`, `Q₈∘C₄`.
pub fn fixture_corpus() -> Vec<Group> {
    let mut out = Vec::new();
    for n in 1..=16 {
        out.push(builtin_group(Family::Cyclic(n)).unwrap());
    }
    for order in (4..=16).step_by(2) {
        out.push(builtin_group(Family::Dihedral(order)).unwrap());
    }
    let c2 = builtin_group(Family::Cyclic(2)).unwrap();
    let c4 = builtin_group(Family::Cyclic(4)).unwrap();
    let q8 = builtin_group(Family::Quaternion).unwrap();
    let d8 = builtin_group(Family::Dihedral(8)).unwrap();
    out.push(q8.clone());
    out.push(builtin_group(Family::Symmetric(3)).unwrap());
    out.push(builtin_group(Family::Symmetric(4)).unwrap());
    out.push(
        Group::from_permutations("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
            .unwrap()
            .with_provenance(Provenance::BuiltinFamily),
    );
    out.push(direct_product(&c2, &c4).unwrap().group.with_name("C2xC4"));
    out.push(builtin_group(Family::ElementaryAbelian { p: 2, k: 3 }).unwrap().with_name("C2^3"));
    out.push(direct_product(&q8, &c2).unwrap().group.with_name("Q8xC2"));
    out.push(direct_product(&d8, &c2).unwrap().group.with_name("D8xC2"));
    let half = Element(2);
    out.push(central_product(&c4, &c4, &[(Element(0), Element(0)), (half, half)]).unwrap().group.with_name("C4oC4"));
    out.push(
        central_product(&q8, &c4, &[(quaternion::ONE, Element(0)), (quaternion::MINUS_ONE, half)])
            .unwrap()
            .group
            .with_name("Q8oC4"),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{center, commutator_subgroup, conjugacy_classes};

    #[test]
    fn every_family_is_a_valid_table() {
        let families = [
            Family::Cyclic(1),
            Family::Cyclic(7),
            Family::Dihedral(2),
            Family::Dihedral(8),
            Family::Dihedral(12),
            Family::Quaternion,
            Family::Symmetric(1),
            Family::Symmetric(4),
            Family::ElementaryAbelian { p: 3, k: 2 },
        ];
        for family in families {
            let g = builtin_group(family).unwrap();
            Group::from_cayley(g.name(), &g.cayley_rows()).unwrap();
        }
    }

    #[test]
    fn cyclic_one_is_trivial() {
        assert_eq!(builtin_group(Family::Cyclic(1)).unwrap().order(), 1);
    }

    #[test]
    fn d8_invariants() {
        let d8 = builtin_group(Family::Dihedral(8)).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(conjugacy_classes(&d8).count(), 5);
        assert_eq!(center(&d8).order(), 2);
        assert_eq!(commutator_subgroup(&d8).order(), 2);
        let (r, s) = (dihedral::rotation(4), dihedral::reflection(4));
        assert_eq!(d8.element_order(r), 4);
        assert_eq!(d8.element_order(s), 2);
        assert_eq!(d8.conjugate(r, s), d8.inv(r));
    }

    #[test]
    fn s4_has_five_classes() {
        let s4 = builtin_group(Family::Symmetric(4)).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(conjugacy_classes(&s4).count(), 5);
    }

    #[test]
    fn quaternion_relations() {
        use quaternion::*;
        let q8 = builtin_group(Family::Quaternion).unwrap();
        assert_eq!(q8.mul(I, J), K);
        assert_eq!(q8.mul(J, I), q8.mul(MINUS_ONE, K));
        assert_eq!(q8.mul(I, I), MINUS_ONE);
        assert_eq!(conjugacy_classes(&q8).count(), 5);
    }

    #[test]
    fn unsupported_parameters() {
        assert!(builtin_group(Family::Cyclic(0)).is_err());
        assert!(builtin_group(Family::Dihedral(7)).is_err());
        assert!(builtin_group(Family::Symmetric(9)).is_err());
        assert!(builtin_group(Family::ElementaryAbelian { p: 4, k: 2 }).is_err());
    }

    #[test]
    fn corpus_orders() {
        let corpus = fixture_corpus();
        assert_eq!(corpus.len(), 16 + 7 + 10);
        let find = |name: &str| corpus.iter().find(|g| g.name() == name).unwrap();
        assert_eq!(find("A4").order(), 12);
        assert_eq!(find("C4oC4").order(), 8);
        assert_eq!(find("Q8oC4").order(), 16);
        assert_eq!(center(find("Q8oC4")).order(), 4);
    }
}
