//! File formats, subgroup selectors, corpus scanning and the command-line
//! front end over `transversal-lab-core`.

pub mod caps;
pub mod commands;
pub mod error;
pub mod file;
pub mod report;
pub mod scan;
pub mod select;

pub use caps::Caps;
pub use error::{LabError, Result};
pub use file::{load, parse_group_file, GroupFile};
pub use report::{emit_report, Format, PairRecord, ScanReport};
pub use scan::{scan_corpus, Mode};
