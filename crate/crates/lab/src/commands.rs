//! The subcommands, rendered to strings so they can be tested without a
//! process boundary.

use std::fmt::Write as _;

use serde::Serialize;
use transversal_lab_core::cocycle::{
    alpha_class_is_trivial, alpha_regular_elements, cocycle_from_transversal, symmetric_on_commuting,
    twist_by_character,
};
use transversal_lab_core::structure::{
    center, commutator_subgroup, conjugacy_classes, is_central, linear_characters, right_cosets, sylow_subgroup,
    LinearCharacter,
};
use transversal_lab_core::transversal::{
    brute_force_invariant_transversal, construct_invariant_transversal, descend_to_sylow, loop_from_transversal,
    Transversal,
};
use transversal_lab_core::{Element, Error, Group, Subgroup};

use crate::error::{LabError, Result};
use crate::file::GroupFile;
use crate::report::{Format, PairRecord};
use crate::select::{describe, resolve, resolve_one, Selected, Selector};

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit: i32,
}

impl Output {
    fn clean(text: String) -> Output {
        Output { text, exit: EXIT_CLEAN }
    }
}

fn list(elements: &[Element]) -> String {
    let parts: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
    parts.join(" ")
}

fn indices(elements: &[Element]) -> Vec<u32> {
    elements.iter().map(|e| e.0).collect()
}

pub fn info(file: &GroupFile) -> Output {
    let g = &file.group;
    let classes = conjugacy_classes(g);
    let sizes: Vec<String> = classes.sizes().iter().map(usize::to_string).collect();
    let mut out = String::new();
    let _ = writeln!(out, "name        {}", g.name());
    let _ = writeln!(out, "provenance  {}", g.provenance().as_str());
    let _ = writeln!(out, "order       {}", g.order());
    let _ = writeln!(out, "abelian     {}", g.is_abelian());
    let _ = writeln!(out, "exponent    {}", g.exponent());
    let _ = writeln!(out, "classes     {} (sizes {})", classes.count(), sizes.join(" "));
    let z = center(g);
    let d = commutator_subgroup(g);
    let _ = writeln!(out, "center      {} (order {})", describe(g, &z), z.order());
    let _ = writeln!(out, "derived     {} (order {})", describe(g, &d), d.order());
    let _ = writeln!(out, "generators  {}", list(&g.generating_set()));
    for (name, h) in &file.subgroups {
        let _ = writeln!(out, "subgroup    {name} = {} (order {})", describe(g, h), h.order());
    }
    let _ = writeln!(out, "elements");
    let orders = g.element_order_profile();
    match &file.permutations {
        Some(images) => {
            let _ = writeln!(out, "  index  order  images");
            for (i, image) in images.iter().enumerate() {
                let _ = writeln!(out, "  {i:<5}  {:<5}  {image:?}", orders[i]);
            }
        }
        None => {
            let _ = writeln!(out, "  index  order");
            for (i, o) in orders.iter().enumerate() {
                let _ = writeln!(out, "  {i:<5}  {o}");
            }
        }
    }
    Output::clean(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterSummary {
    pub index: usize,
    pub modulus: u32,
    pub faithful: bool,
    pub regular_elements: usize,
    pub regular_classes: usize,
    pub all_regular: bool,
    pub class_trivial: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CocycleSummary {
    /// Transversal the factor set was read from, in coset order.
    pub transversal: Vec<u32>,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[u32; 2]>,
    pub characters: Vec<CharacterSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    #[serde(flatten)]
    pub pair: PairRecord,
    pub transversal: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleSummary>,
}

fn character_summary(
    group: &Group,
    h: &Subgroup,
    gamma: &transversal_lab_core::cocycle::CocycleTable,
    index: usize,
    lambda: &LinearCharacter,
) -> Result<CharacterSummary> {
    let alpha = twist_by_character(gamma, lambda)?;
    let regular = alpha_regular_elements(&alpha);
    Ok(CharacterSummary {
        index,
        modulus: lambda.modulus(),
        faithful: lambda.is_faithful(),
        regular_elements: regular.regular.len(),
        regular_classes: regular.regular_classes,
        all_regular: regular.all_regular(gamma.quotient().order()),
        class_trivial: alpha_class_is_trivial(group, h, lambda)?,
    })
}

fn cocycle_summary(group: &Group, h: &Subgroup, t: &[Element]) -> Result<CocycleSummary> {
    let gamma = cocycle_from_transversal(group, h, t)?;
    let symmetry = symmetric_on_commuting(&gamma);
    let mut characters = Vec::new();
    for (i, lambda) in linear_characters(group, h)?.iter().enumerate() {
        if lambda.is_faithful() {
            characters.push(character_summary(group, h, &gamma, i, lambda)?);
        }
    }
    Ok(CocycleSummary {
        transversal: indices(gamma.representatives()),
        symmetric: symmetry.holds,
        witness: symmetry
            .witness
            .map(|(x, y)| [gamma.representatives()[x.index()].0, gamma.representatives()[y.index()].0]),
        characters,
    })
}

pub fn check_record(file_name: &str, group: &Group, selected: &Selected) -> Result<CheckRecord> {
    let h = &selected.subgroup;
    let pair = PairRecord::new(file_name, group, &selected.label, h)?;
    let transversal = if pair.exists_invariant { Some(construct_invariant_transversal(group, h)?) } else { None };
    let cocycle = if pair.central {
        let t = match &transversal {
            Some(t) => t.members().to_vec(),
            None => right_cosets(group, h).representatives().to_vec(),
        };
        Some(cocycle_summary(group, h, &t)?)
    } else {
        None
    };
    Ok(CheckRecord { pair, transversal: transversal.map(|t| indices(t.members())), cocycle })
}

fn check_text(r: &CheckRecord) -> String {
    let p = &r.pair;
    let mut out = String::new();
    let flags: Vec<&str> = [("normal", p.normal), ("abelian", p.abelian), ("central", p.central)]
        .iter()
        .filter(|(_, on)| *on)
        .map(|(name, _)| *name)
        .collect();
    let g = &p.gallagher;
    let product = g.k_quotient * g.k_subgroup;
    let _ = writeln!(
        out,
        "{} / {} (|G| = {}, |H| = {}; {})",
        p.group,
        p.subgroup,
        p.order,
        p.subgroup_order,
        flags.join(", ")
    );
    let _ = writeln!(out, "  factorization G = H C_G(H)    {}", p.factorization);
    let _ = writeln!(out, "  centralizer condition         {}", p.centralizer_condition);
    let relation = if g.holds { "=" } else { "!=" };
    let _ = writeln!(
        out,
        "  class numbers                 k(G) = {}, k(G/H) = {}, k(H) = {}: {} {relation} {product}",
        g.k_group, g.k_quotient, g.k_subgroup, g.k_group
    );
    let _ = writeln!(out, "  invariant transversal exists  {}", p.exists_invariant);
    match &r.transversal {
        Some(t) => {
            let parts: Vec<String> = t.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "  transversal                   {}", parts.join(" "));
        }
        None => {
            let _ = writeln!(out, "  transversal                   none");
        }
    }
    let _ = writeln!(out, "  |H ∩ G'|                      {}", p.meets_derived);
    let _ = writeln!(out, "  counterexample                {}", p.counterexample);
    if let Some(c) = &r.cocycle {
        let parts: Vec<String> = c.transversal.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "  cocycle from                  {}", parts.join(" "));
        match c.witness {
            Some([x, y]) => {
                let _ = writeln!(out, "  symmetric on commuting pairs  false (at {x}, {y})");
            }
            None => {
                let _ = writeln!(out, "  symmetric on commuting pairs  true");
            }
        }
        if c.characters.is_empty() {
            let _ = writeln!(out, "  faithful characters           none (H is not cyclic)");
        }
        for ch in &c.characters {
            let _ = writeln!(
                out,
                "  lambda {:<3} mod {:<4} regular {}, regular classes {}, all regular {}, class trivial {}",
                ch.index, ch.modulus, ch.regular_elements, ch.regular_classes, ch.all_regular, ch.class_trivial
            );
        }
    }
    out
}

/// One record per selected subgroup; exit 3 if any is a counterexample.
pub fn check(file_name: &str, file: &GroupFile, selector: &str, format: Format) -> Result<Output> {
    let records =
        resolve(file, selector)?.iter().map(|s| check_record(file_name, &file.group, s)).collect::<Result<Vec<_>>>()?;
    let exit = if records.iter().any(|r| r.pair.counterexample) { EXIT_COUNTEREXAMPLE } else { EXIT_CLEAN };
    let text = match format {
        Format::Json => serde_json::to_string(&records).expect("serializable") + "\n",
        Format::Text => records.iter().map(check_text).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output { text, exit })
}

pub fn construct(file: &GroupFile, selector: &str) -> Result<Output> {
    let g = &file.group;
    let Selected { label, subgroup: h } = resolve_one(file, selector)?;
    let mut out = String::new();
    let _ = writeln!(out, "{} / {} (|H| = {})", g.name(), label, h.order());
    match construct_invariant_transversal(g, &h) {
        Ok(t) => {
            let _ = writeln!(out, "transversal         {}", list(t.members()));
            let report = loop_from_transversal(g, &h, t.members())?;
            let _ = writeln!(out, "loop transversal    {}", report.is_loop_transversal);
            let _ = writeln!(out, "loop axioms         {}", report.is_loop);
            let _ = writeln!(out, "associative         {}", report.is_associative);
        }
        Err(Error::ConditionsFail(c)) => {
            let _ = writeln!(out, "transversal         none ({c} fails)");
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Output::clean(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Invariance {
    /// Invariant under conjugation by all of `G`.
    Group,
    /// Invariant under conjugation by `H` itself.
    Subgroup,
}

pub fn brute(file: &GroupFile, selector: &str, invariance: Invariance, cap: u64) -> Result<Output> {
    let g = &file.group;
    let Selected { label, subgroup: h } = resolve_one(file, selector)?;
    let acting = match invariance {
        Invariance::Group => Subgroup::whole(g),
        Invariance::Subgroup => h.clone(),
    };
    let outcome = brute_force_invariant_transversal(g, &h, &acting, cap)?;
    let mut out = String::new();
    let by = match invariance {
        Invariance::Group => "G",
        Invariance::Subgroup => "H",
    };
    let _ = writeln!(out, "{} / {} (|H| = {}), invariant under {by}", g.name(), label, h.order());
    let _ = writeln!(out, "nodes        {}", outcome.nodes);
    match outcome.transversal {
        Some(t) => {
            let _ = writeln!(out, "transversal  {}", list(t.members()));
        }
        None => {
            let _ = writeln!(out, "transversal  none");
        }
    }
    Ok(Output::clean(out))
}

fn matrix(labels: &[Element], cell: impl Fn(usize, usize) -> String) -> String {
    let n = labels.len();
    let mut cells = vec![vec![String::new(); n + 1]; n + 1];
    for i in 0..n {
        cells[0][i + 1] = labels[i].to_string();
        cells[i + 1][0] = labels[i].to_string();
        for j in 0..n {
            cells[i + 1][j + 1] = cell(i, j);
        }
    }
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str("  ");
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn cocycle(file: &GroupFile, selector: &str, lambda: Option<usize>, transversal: Option<&str>) -> Result<Output> {
    let g = &file.group;
    let Selected { label, subgroup: h } = resolve_one(file, selector)?;
    if !is_central(g, &h) {
        return Err(Error::NotCentral.into());
    }
    let t: Vec<Element> = match transversal {
        Some(text) => match Selector::parse(text)? {
            Selector::Elements(list) => list.into_iter().map(Element::from).collect(),
            _ => {
                return Err(LabError::Selector {
                    selector: text.to_string(),
                    message: "expected an element list".into(),
                })
            }
        },
        None => right_cosets(g, &h).representatives().to_vec(),
    };
    let gamma = cocycle_from_transversal(g, &h, &t)?;
    let reps = gamma.representatives().to_vec();
    let q = gamma.quotient();
    let mut out = String::new();
    let _ = writeln!(out, "{} / {} (|H| = {}, |G/H| = {})", g.name(), label, h.order(), q.order());
    let _ = writeln!(out, "transversal (identity first)  {}", list(&reps));
    let _ = writeln!(out, "gamma(x, y) = t_x t_y t_xy^-1, rows and columns labelled by t_x");
    out.push_str(&matrix(&reps, |i, j| gamma.value(Element::from(i), Element::from(j)).to_string()));
    let symmetry = symmetric_on_commuting(&gamma);
    match symmetry.witness {
        Some((x, y)) => {
            let _ = writeln!(out, "symmetric on commuting pairs  false (at {}, {})", reps[x.index()], reps[y.index()]);
        }
        None => {
            let _ = writeln!(out, "symmetric on commuting pairs  true");
        }
    }
    let chars = linear_characters(g, &h)?;
    let chosen: Vec<usize> = match lambda {
        Some(i) if i < chars.len() => vec![i],
        Some(i) => {
            return Err(LabError::Config(format!("lambda index {i} out of range 0..{}", chars.len())));
        }
        None => (0..chars.len()).filter(|&i| chars[i].is_faithful()).collect(),
    };
    if chosen.is_empty() {
        let _ = writeln!(out, "no faithful character of H (H is not cyclic); pass --lambda to pick one");
    }
    for i in chosen {
        let ch = &chars[i];
        let alpha = twist_by_character(&gamma, ch)?;
        let values: Vec<String> = h.members().iter().map(|&x| format!("{x}->{}", ch.value(x))).collect();
        let _ = writeln!(out, "lambda {i} (mod {}): {}", ch.modulus(), values.join(" "));
        out.push_str(&matrix(&reps, |a, b| alpha.value(Element::from(a), Element::from(b)).to_string()));
        let regular = alpha_regular_elements(&alpha);
        let lifted: Vec<Element> = regular.regular.iter().map(|x| reps[x.index()]).collect();
        let _ = writeln!(out, "  regular elements  {} ({} of {})", list(&lifted), lifted.len(), q.order());
        let _ = writeln!(out, "  regular classes   {}", regular.regular_classes);
        let _ = writeln!(out, "  class trivial     {}", alpha_class_is_trivial(g, &h, ch)?);
    }
    Ok(Output::clean(out))
}

pub fn sylow(file: &GroupFile, p: usize) -> Result<Output> {
    let g = &file.group;
    let s = sylow_subgroup(g, p)?;
    let mut out = String::new();
    let _ = writeln!(out, "{}: Sylow {p}-subgroup {} of order {}", g.name(), describe(g, &s), s.order());
    let _ = writeln!(out, "members  {}", list(s.members()));
    Ok(Output::clean(out))
}

pub fn descend(file: &GroupFile, selector: &str, q_selector: &str, p: usize) -> Result<Output> {
    let g = &file.group;
    let h = resolve_one(file, selector)?;
    let q = resolve_one(file, q_selector)?;
    if !is_central(g, &h.subgroup) || !q.subgroup.is_subgroup_of(&h.subgroup) {
        return Err(Error::NotCentralChain.into());
    }
    let t: Transversal = match construct_invariant_transversal(g, &h.subgroup) {
        Ok(t) => t,
        Err(Error::ConditionsFail(_)) => return Err(Error::NotInvariantTransversal.into()),
        Err(e) => return Err(e.into()),
    };
    let d = descend_to_sylow(g, &h.subgroup, &q.subgroup, p, t.members())?;
    let mut out = String::new();
    let _ = writeln!(out, "{}: H = {}, Q = {}, p = {p}", g.name(), h.label, q.label);
    let _ = writeln!(out, "transversal for G/H   {}", list(t.members()));
    let _ = writeln!(out, "transversal for G/Q   {}", list(d.transversal_for_q.members()));
    let _ = writeln!(out, "P                     {} (order {})", describe(g, &d.sylow), d.sylow.order());
    let _ = writeln!(out, "transversal for Q\\P   {} (P-invariant, verified)", list(&d.sylow_transversal));
    let _ = writeln!(out, "Q <= P'               {}", d.q_in_derived);
    Ok(Output::clean(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::file::load;

    fn d8() -> GroupFile {
        load("builtin:D8", &Caps::default()).unwrap()
    }

    #[test]
    fn dihedral_check_text() {
        let out = check("", &d8(), "center", Format::Text).unwrap();
        assert_eq!(out.exit, EXIT_CLEAN);
        assert!(out.text.contains("factorization G = H C_G(H)    true"), "{}", out.text);
        assert!(out.text.contains("centralizer condition         false"));
        assert!(out.text.contains("5 != 8"));
        assert!(out.text.contains("transversal                   none"));
    }

    #[test]
    fn all_normal_abelian_gives_one_record_each() {
        let out = check("", &d8(), "all-normal-abelian", Format::Json).unwrap();
        let records: Vec<serde_json::Value> = serde_json::from_str(&out.text).unwrap();
        assert_eq!(records.len(), 5);
    }

    #[test]
    fn quaternion_cocycle() {
        let q8 = load("builtin:Q8", &Caps::default()).unwrap();
        let out = cocycle(&q8, "center", None, Some("0,1,2,3")).unwrap();
        assert!(out.text.contains("symmetric on commuting pairs  false (at 1, 2)"), "{}", out.text);
        assert!(out.text.contains("regular classes   1"));
        assert!(out.text.contains("class trivial     false"));
        let bad = cocycle(&q8, "center", Some(9), None).unwrap_err();
        assert!(matches!(bad, LabError::Config(_)));
    }

    #[test]
    fn other_commands() {
        let f = d8();
        assert!(brute(&f, "center", Invariance::Group, 1000).unwrap().text.contains("transversal  none"));
        assert!(brute(&f, "1", Invariance::Subgroup, 1000).unwrap().text.contains("transversal  none"));
        assert!(construct(&f, "center").unwrap().text.contains("centralizer_condition fails"));
        assert!(sylow(&f, 2).unwrap().text.contains("order 8"));
        assert!(info(&f).text.contains("classes     5 (sizes 1 2 1 2 2)"));
        assert!(matches!(descend(&f, "1", "2", 2), Err(LabError::Core(Error::NotCentralChain))));
    }
}
