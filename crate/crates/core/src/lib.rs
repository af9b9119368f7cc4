//! Finite-group toolkit for invariant coset transversals.
//!
//! Groups are enumerated Cayley tables ([`group`]). The [`structure`] module
//! computes centralizers, classes, quotients and related subobjects; the
//! [`transversal`] module decides whether a normal subgroup admits a
//! transversal invariant under conjugation and builds one when it does; the
//! [`cocycle`] module reads off the factor set of a central extension.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cocycle;
pub mod error;
pub mod group;
pub mod structure;
pub mod transversal;

pub use error::{Condition, Error, Result};
pub use group::{Element, Group, Provenance};
pub use structure::Subgroup;
