use transversal_lab_core::group::DEFAULT_CLOSURE_CAP;
use transversal_lab_core::transversal::DEFAULT_SEARCH_CAP;

use crate::error::{LabError, Result};

/// Overrides both the permutation closure cap and the search node cap.
pub const CAP_ENV: &str = "TRANSVERSAL_LAB_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub closure: usize,
    pub search: u64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { closure: DEFAULT_CLOSURE_CAP, search: DEFAULT_SEARCH_CAP }
    }
}

impl Caps {
    pub fn from_env() -> Result<Caps> {
        Caps::from_value(std::env::var(CAP_ENV).ok().as_deref())
    }

    pub fn from_value(value: Option<&str>) -> Result<Caps> {
        let Some(value) = value else {
            return Ok(Caps::default());
        };
        let cap: u64 = value
            .trim()
            .parse()
            .map_err(|_| LabError::Config(format!("{CAP_ENV}={value:?} is not a non-negative integer")))?;
        Ok(Caps { closure: usize::try_from(cap).unwrap_or(usize::MAX), search: cap })
    }
}
