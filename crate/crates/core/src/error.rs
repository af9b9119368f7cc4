use alloc::string::String;

use crate::group::Element;

/// Which of the two invariant-transversal conditions rejected a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// `G = H·C_G(H)`.
    Factorization,
    /// `C_{G/H}(Hg) = H·C_G(g)/H` for every `g`.
    Centralizer,
}

impl core::fmt::Display for Condition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Condition::Factorization => f.write_str("factorization"),
            Condition::Centralizer => f.write_str("centralizer_condition"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("index 0 is not a two-sided identity")]
    IdentityNotFirst,
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("enumeration exceeded the cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("subgroup is not central")]
    NotCentral,
    #[error("map is not an isomorphism onto a central subgroup: {0}")]
    NotIsomorphism(String),
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("group has {classes} conjugacy classes, lattice cap is {cap}")]
    TooManyClasses { classes: usize, cap: usize },
    #[error("element set is not a transversal")]
    NotATransversal,
    #[error("no invariant transversal: {0} fails")]
    ConditionsFail(Condition),
    #[error("H meets the derived subgroup nontrivially")]
    IntersectionNotTrivial,
    #[error("brute-force search exceeded {cap} nodes")]
    SearchSpaceTooLarge { cap: u64 },
    #[error("G = H·C_G(H) fails")]
    FactorizationFails,
    #[error("expected Q <= H <= Z(G)")]
    NotCentralChain,
    #[error("subgroup order {0} is not prime")]
    NotPrimeOrder(usize),
    #[error("transversal is not G-invariant")]
    NotInvariantTransversal,
    #[error("cocycle identity fails at ({0:?}, {1:?}, {2:?})")]
    CocycleIdentityFailed(Element, Element, Element),
    #[error("character is defined on a different subgroup")]
    SubgroupMismatch,
    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),
}

pub type Result<T> = core::result::Result<T, Error>;
