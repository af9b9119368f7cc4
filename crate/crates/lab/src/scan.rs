//! Corpus scanning over a directory of group files.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use transversal_lab_core::structure::{
    center, commutator_subgroup, is_abelian, normal_subgroups, subgroup_closure, DEFAULT_CLASS_CAP,
};
use transversal_lab_core::{Group, Subgroup};

use crate::caps::Caps;
use crate::error::{LabError, Result};
use crate::file::{parse_group_file, to_cayley_json};
use crate::report::{FileError, PairRecord, ScanReport, Totals};
use crate::select::describe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Every normal abelian subgroup, flagged when it admits an invariant
    /// transversal yet meets the derived subgroup.
    Conjecture,
    /// Every order-2 subgroup of `Z(G) ∩ G'`, flagged when `k(G) = 2·k(G/H)`.
    GallagherSpecial,
}

/// The subgroups a mode inspects, ordered by order then generators.
pub fn candidate_subgroups(group: &Group, mode: Mode) -> Result<Vec<Subgroup>> {
    let mut out: Vec<Subgroup> = match mode {
        Mode::Conjecture => {
            normal_subgroups(group, DEFAULT_CLASS_CAP)?.into_iter().filter(|h| is_abelian(group, h)).collect()
        }
        Mode::GallagherSpecial => {
            let both = center(group).intersection(&commutator_subgroup(group));
            both.members()
                .iter()
                .filter(|&&z| group.element_order(z) == 2)
                .map(|&z| subgroup_closure(group, &[z]))
                .collect()
        }
    };
    out.sort_by_cached_key(|h| (h.order(), h.generators(group)));
    Ok(out)
}

pub fn analyze_group(file: &str, group: &Group, mode: Mode) -> Result<Vec<PairRecord>> {
    candidate_subgroups(group, mode)?.iter().map(|h| PairRecord::new(file, group, &describe(group, h), h)).collect()
}

/// `*.json` files directly inside `dir`, sorted by file name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| LabError::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| LabError::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|ext| ext == "json") {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

/// Scans every group file in `dir` with `jobs` worker threads. Files are
/// analysed independently and merged in file-name order, so the report does
/// not depend on `jobs`. Per-file failures are collected in the report.
pub fn scan_corpus(dir: &Path, mode: Mode, jobs: usize, caps: &Caps) -> Result<ScanReport> {
    let files = corpus_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| LabError::Config(format!("thread pool: {e}")))?;
    let results: Vec<(String, Result<Vec<PairRecord>>)> = pool.install(|| {
        files
            .par_iter()
            .map(|path| {
                let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
                let records = parse_group_file(path, caps).and_then(|f| analyze_group(&name, &f.group, mode));
                (name, records)
            })
            .collect()
    });

    let mut report = ScanReport::default();
    for (file, outcome) in results {
        match outcome {
            Ok(records) => {
                report.totals.groups += 1;
                report.pairs.extend(records);
            }
            Err(e) => report.errors.push(FileError { file, error: e.to_string() }),
        }
    }
    report.totals = Totals {
        groups: report.totals.groups,
        counterexamples: report.pairs.iter().filter(|p| p.counterexample).count(),
        gallagher_special: report.pairs.iter().filter(|p| p.gallagher_special).count(),
        errors: report.errors.len(),
    };
    Ok(report)
}

/// Writes each group as `NAME.json` in Cayley form. Returns the paths written.
pub fn export_groups(dir: &Path, groups: &[Group]) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| LabError::io(dir, e))?;
    let mut written = Vec::with_capacity(groups.len());
    for g in groups {
        let path = dir.join(format!("{}.json", g.name()));
        std::fs::write(&path, to_cayley_json(g, &Default::default())).map_err(|e| LabError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
