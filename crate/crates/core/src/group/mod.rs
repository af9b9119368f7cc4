//! Finite groups stored as full Cayley tables.
//!
//! Every group is an enumeration `0..order` of its elements with index 0 the
//! identity. Products compose left to right, so conjugation is the right
//! action `g^x = x⁻¹gx`.

mod builtin;
mod permutation;
mod product;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

pub use builtin::{builtin_group, dihedral, fixture_corpus, quaternion, Family};
pub use permutation::{enumerate_permutations, DEFAULT_CLOSURE_CAP};
pub use product::{central_product, direct_product, CentralProduct, DirectProduct};

/// Largest order for which associativity is checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 2048;
const SAMPLED_TRIPLES: usize = 100_000;
const SAMPLE_SEED: u64 = 0x7261_6e73_7665_7273;

/// Index of an element in its group's canonical enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Element(pub u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl From<usize> for Element {
    fn from(index: usize) -> Self {
        Element(u32::try_from(index).expect("element index exceeds u32"))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Where a group's table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    CayleyFile,
    PermutationClosure,
    BuiltinFamily,
    Product,
    Quotient,
    Subgroup,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::CayleyFile => "cayley-file",
            Provenance::PermutationClosure => "permutation-closure",
            Provenance::BuiltinFamily => "builtin-family",
            Provenance::Product => "product",
            Provenance::Quotient => "quotient",
            Provenance::Subgroup => "subgroup",
        }
    }
}

/// A finite group with a full multiplication table and inverse table.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    provenance: Provenance,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("provenance", &self.provenance)
            .finish_non_exhaustive()
    }
}

impl Group {
    /// Validates a Cayley table and builds the group it describes.
    ///
    /// Row 0 and column 0 must be the identity row and column. Rows and
    /// columns must be permutations, and the product must be associative
    /// (every triple up to [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`], a generating
    /// set against all pairs plus seeded random triples above it).
    pub fn from_cayley<R: AsRef<[usize]>>(name: impl Into<String>, rows: &[R]) -> Result<Group> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if u32::try_from(order).is_err() {
            return Err(Error::NotAGroup(format!("order {order} too large")));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::NotAGroup(format!("row {i} has {} entries, expected {order}", row.len())));
            }
            for (j, &entry) in row.iter().enumerate() {
                if entry >= order {
                    return Err(Error::NotAGroup(format!("entry ({i}, {j}) = {entry} out of range")));
                }
                table.push(entry as u32);
            }
        }
        Self::from_flat_table(name.into(), Provenance::CayleyFile, order, table)
    }

    /// Validates a row-major `order × order` table.
    pub fn from_flat_table(name: String, provenance: Provenance, order: usize, table: Vec<u32>) -> Result<Group> {
        if table.len() != order * order {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        for i in 0..order {
            if table[i] as usize != i || table[i * order] as usize != i {
                return Err(Error::IdentityNotFirst);
            }
        }
        check_latin(order, &table)?;
        let inverses = (0..order)
            .map(|i| {
                let row = &table[i * order..(i + 1) * order];
                row.iter().position(|&v| v == 0).unwrap() as u32
            })
            .collect();
        let group = Group { name, provenance, order, table, inverses };
        group.check_associative()?;
        Ok(group)
    }

    /// Builds a group from a table known to be a group (products, quotients).
    pub(crate) fn from_trusted_table(name: String, provenance: Provenance, order: usize, table: Vec<u32>) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            inverses[i] = row.iter().position(|&v| v == 0).expect("row without identity") as u32;
        }
        Group { name, provenance, order, table, inverses }
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let witness =
            |a: usize, b: usize, c: usize| Error::NotAGroup(format!("associativity fails for ({a}, {b}, {c})"));
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.table[a * n + b] as usize;
                    let row_ab = &self.table[ab * n..(ab + 1) * n];
                    let row_b = &self.table[b * n..(b + 1) * n];
                    for c in 0..n {
                        if row_ab[c] != self.table[a * n + row_b[c] as usize] {
                            return Err(witness(a, b, c));
                        }
                    }
                }
            }
            return Ok(());
        }
        for a in self.generating_set() {
            let a = a.index();
            for b in 0..n {
                let ab = self.table[a * n + b] as usize;
                for c in 0..n {
                    let bc = self.table[b * n + c] as usize;
                    if self.table[ab * n + c] != self.table[a * n + bc] {
                        return Err(witness(a, b, c));
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLED_TRIPLES {
            let a = (rng.next_u64() % n as u64) as usize;
            let b = (rng.next_u64() % n as u64) as usize;
            let c = (rng.next_u64() % n as u64) as usize;
            let ab = self.table[a * n + b] as usize;
            let bc = self.table[b * n + c] as usize;
            if self.table[ab * n + c] != self.table[a * n + bc] {
                return Err(witness(a, b, c));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Group {
        self.provenance = provenance;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Element {
        Element::IDENTITY
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator {
        (0..self.order as u32).map(Element)
    }

    #[inline]
    pub fn contains(&self, g: Element) -> bool {
        g.index() < self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.table[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        Element(self.inverses[a.index()])
    }

    /// Row `a` of the Cayley table: the products `a·b` for every `b`.
    pub fn row(&self, a: Element) -> &[u32] {
        &self.table[a.index() * self.order..(a.index() + 1) * self.order]
    }

    pub fn pow(&self, a: Element, mut exponent: u64) -> Element {
        let mut base = a;
        let mut acc = Element::IDENTITY;
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exponent >>= 1;
        }
        acc
    }

    /// Least `n ≥ 1` with `gⁿ = 1`.
    pub fn element_order(&self, g: Element) -> usize {
        let mut n = 1;
        let mut power = g;
        while !power.is_identity() {
            power = self.mul(power, g);
            n += 1;
        }
        n
    }

    /// `g^x = x⁻¹·g·x`.
    #[inline]
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(self.inv(x), g), x)
    }

    /// `[g, x] = g⁻¹·x⁻¹·g·x`.
    #[inline]
    pub fn commutator(&self, g: Element, x: Element) -> Element {
        self.mul(self.inv(g), self.conjugate(g, x))
    }

    #[inline]
    pub fn commute(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generating_set();
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).fold(1, lcm)
    }

    /// Greedy generating set: repeatedly adjoin the smallest element outside
    /// the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<Element> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![Element::IDENTITY];
        let mut gens = Vec::new();
        for g in self.elements() {
            if inside[g.index()] {
                continue;
            }
            gens.push(g);
            inside[g.index()] = true;
            members.push(g);
            let mut i = 0;
            while i < members.len() {
                let m = members[i];
                for &s in &gens {
                    let p = self.mul(m, s);
                    if !inside[p.index()] {
                        inside[p.index()] = true;
                        members.push(p);
                    }
                }
                i += 1;
            }
        }
        gens
    }

    /// Multiset of element orders, sorted.
    pub fn element_order_profile(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.elements().map(|g| self.element_order(g)).collect();
        orders.sort_unstable();
        orders
    }

    /// The Cayley table as nested rows, for serialization.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Set of distinct products `a·b` for `a ∈ left`, `b ∈ right`.
    pub fn product_set(&self, left: &[Element], right: &[Element]) -> BTreeSet<Element> {
        let mut out = BTreeSet::new();
        for &a in left {
            for &b in right {
                out.insert(self.mul(a, b));
            }
        }
        out
    }
}

fn check_latin(order: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; order];
    for i in 0..order {
        for j in 0..order {
            let v = table[i * order + j] as usize;
            if seen[v] == i {
                return Err(Error::NotAGroup(format!("row {i} repeats entry {v}")));
            }
            seen[v] = i;
        }
    }
    seen.iter_mut().for_each(|s| *s = usize::MAX);
    for j in 0..order {
        for i in 0..order {
            let v = table[i * order + j] as usize;
            if seen[v] == j {
                return Err(Error::NotAGroup(format!("column {j} repeats entry {v}")));
            }
            seen[v] = j;
        }
    }
    Ok(())
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
