use std::path::Path;

use serde::{Deserialize, Serialize};
use transversal_lab_core::structure::{center, commutator_subgroup};
use transversal_lab_core::transversal::check_conditions;
use transversal_lab_core::{Group, Subgroup};

use crate::error::{LabError, Result};
use crate::select::describe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gallagher {
    #[serde(rename = "kG")]
    pub k_group: usize,
    #[serde(rename = "kQ")]
    pub k_quotient: usize,
    #[serde(rename = "kH")]
    pub k_subgroup: usize,
    pub holds: bool,
}

/// Verdict for one pair `(G, H)` with `H` normal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub file: String,
    pub group: String,
    pub order: usize,
    pub subgroup: String,
    pub subgroup_order: usize,
    pub normal: bool,
    pub abelian: bool,
    pub central: bool,
    pub factorization: bool,
    pub centralizer_condition: bool,
    pub gallagher: Gallagher,
    pub exists_invariant: bool,
    /// `|H ∩ G'|`.
    pub meets_derived: usize,
    pub counterexample: bool,
    pub gallagher_special: bool,
}

impl PairRecord {
    pub fn new(file: &str, group: &Group, label: &str, h: &Subgroup) -> Result<PairRecord> {
        let verdict = check_conditions(group, h)?;
        let derived = commutator_subgroup(group);
        let meets_derived = h.intersection(&derived);
        let abelian = transversal_lab_core::structure::is_abelian(group, h);
        let counts = verdict.class_counts;
        let gallagher_special = h.order() == 2
            && h.is_subgroup_of(&center(group).intersection(&derived))
            && counts.group == 2 * counts.quotient;
        Ok(PairRecord {
            file: file.to_string(),
            group: group.name().to_string(),
            order: group.order(),
            subgroup: if label.is_empty() { describe(group, h) } else { label.to_string() },
            subgroup_order: h.order(),
            normal: true,
            abelian,
            central: verdict.central,
            factorization: verdict.factorization_holds,
            centralizer_condition: verdict.centralizer_condition_holds,
            gallagher: Gallagher {
                k_group: counts.group,
                k_quotient: counts.quotient,
                k_subgroup: counts.subgroup,
                holds: verdict.gallagher_holds,
            },
            exists_invariant: verdict.exists_invariant,
            meets_derived: meets_derived.order(),
            counterexample: abelian && verdict.exists_invariant && !meets_derived.is_trivial(),
            gallagher_special,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub groups: usize,
    pub counterexamples: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub gallagher_special: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub errors: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileError {
    pub file: String,
    pub error: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub pairs: Vec<PairRecord>,
    pub totals: Totals,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<FileError>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn to_json(report: &ScanReport) -> String {
    serde_json::to_string(report).expect("serializable")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Aligned columns, one row per pair, then totals and errors.
pub fn to_text(report: &ScanReport) -> String {
    let header = [
        "file",
        "group",
        "|G|",
        "H",
        "|H|",
        "central",
        "factorization",
        "centralizer",
        "k(G)",
        "k(G/H)",
        "k(H)",
        "gallagher",
        "invariant",
        "|H∩G'|",
        "counterexample",
        "special",
    ];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for p in &report.pairs {
        rows.push(vec![
            p.file.clone(),
            p.group.clone(),
            p.order.to_string(),
            p.subgroup.clone(),
            p.subgroup_order.to_string(),
            yes_no(p.central).into(),
            yes_no(p.factorization).into(),
            yes_no(p.centralizer_condition).into(),
            p.gallagher.k_group.to_string(),
            p.gallagher.k_quotient.to_string(),
            p.gallagher.k_subgroup.to_string(),
            yes_no(p.gallagher.holds).into(),
            yes_no(p.exists_invariant).into(),
            p.meets_derived.to_string(),
            yes_no(p.counterexample).into(),
            yes_no(p.gallagher_special).into(),
        ]);
    }
    let mut widths = vec![0; header.len()];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    let t = &report.totals;
    out.push_str(&format!("groups {}  pairs {}  counterexamples {}", t.groups, report.pairs.len(), t.counterexamples));
    if t.gallagher_special > 0 {
        out.push_str(&format!("  gallagher-special {}", t.gallagher_special));
    }
    if t.errors > 0 {
        out.push_str(&format!("  errors {}", t.errors));
    }
    out.push('\n');
    for e in &report.errors {
        out.push_str(&format!("error  {}: {}\n", e.file, e.error));
    }
    out
}

pub fn render(report: &ScanReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = to_json(report);
            s.push('\n');
            s
        }
        Format::Text => to_text(report),
    }
}

/// Writes the rendered report to `path`, or returns it for stdout.
pub fn emit_report(report: &ScanReport, format: Format, path: Option<&Path>) -> Result<Option<String>> {
    let text = render(report, format);
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| LabError::io(p, e))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
