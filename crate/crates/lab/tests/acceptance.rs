//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Runs without the libtest harness so the
//! lines always reach stdout.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use transversal_lab_core::cocycle::{
    alpha_class_is_trivial, alpha_regular_elements, cocycle_from_transversal, symmetric_on_commuting,
    twist_by_character,
};
use transversal_lab_core::group::{builtin_group, direct_product, fixture_corpus, quaternion, Family};
use transversal_lab_core::structure::{
    center, commutator_subgroup, is_abelian, is_central, linear_characters, normal_subgroups, quotient,
    subgroup_closure, DEFAULT_CLASS_CAP,
};
use transversal_lab_core::transversal::{
    brute_force_invariant_transversal, check_conditions, construct_invariant_transversal, construct_via_derived,
    derived_section, descend_to_sylow, enumerate_transversals, loop_from_transversal,
};
use transversal_lab_core::{Element, Error, Group, Subgroup};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs() -> Vec<(Group, Subgroup)> {
    let mut out = Vec::new();
    for g in fixture_corpus() {
        for h in normal_subgroups(&g, DEFAULT_CLASS_CAP).unwrap() {
            out.push((g.clone(), h));
        }
    }
    out
}

// Oracles computed straight from the multiplication table.

fn oracle_is_transversal(g: &Group, h: &Subgroup, t: &[Element]) -> bool {
    let mut cosets = BTreeSet::new();
    for &x in t {
        let coset: BTreeSet<Element> = h.members().iter().map(|&y| g.mul(y, x)).collect();
        if !cosets.insert(coset) {
            return false;
        }
    }
    cosets.len() * h.order() == g.order()
}

fn oracle_is_invariant(g: &Group, acting: &[Element], t: &[Element]) -> bool {
    let set: BTreeSet<Element> = t.iter().copied().collect();
    t.iter().all(|&x| acting.iter().all(|&y| set.contains(&g.mul(g.mul(g.inv(y), x), y))))
}

/// Class number by Burnside: `k(G) = |{(x, y) : xy = yx}| / |G|`.
fn oracle_class_number(g: &Group) -> usize {
    let commuting = g.elements().map(|x| g.elements().filter(|&y| g.commute(x, y)).count()).sum::<usize>();
    commuting / g.order()
}

fn oracle_centralizer_condition(g: &Group, h: &Subgroup) -> bool {
    // C_{G/H}(Hx) = H C_G(x) / H for every x: compare preimage sizes.
    g.elements().all(|x| {
        let lifted = g.elements().filter(|&y| h.contains(g.commutator(x, y))).count();
        let hc: BTreeSet<Element> = g
            .elements()
            .filter(|&y| g.commute(x, y))
            .flat_map(|y| h.members().iter().map(move |&z| (z, y)))
            .map(|(z, y)| g.mul(z, y))
            .collect();
        lifted == hc.len()
    })
}

fn criterion_1() -> Outcome {
    let g = builtin_group(Family::Dihedral(8)).unwrap();
    let z = center(&g);
    let v = check_conditions(&g, &z).map_err(|e| e.to_string())?;
    ensure(v.factorization_holds, || "factorization should hold".into())?;
    ensure(!v.centralizer_condition_holds, || "centralizer condition should fail".into())?;
    let c = v.class_counts;
    ensure((c.group, c.quotient, c.subgroup) == (5, 4, 2), || format!("class numbers {c:?}"))?;
    ensure(!v.gallagher_holds && !v.exists_invariant, || "gallagher/exists should be false".into())?;
    let all: Vec<Element> = g.elements().collect();
    let candidates: Vec<Vec<Element>> = enumerate_transversals(&g, &z).collect();
    ensure(candidates.len() == 16, || format!("{} transversals", candidates.len()))?;
    ensure(candidates.iter().all(|t| oracle_is_transversal(&g, &z, t)), || "bad enumeration".into())?;
    let invariant = candidates.iter().filter(|t| oracle_is_invariant(&g, &all, t)).count();
    ensure(invariant == 0, || format!("{invariant} invariant transversals"))?;
    let out = brute_force_invariant_transversal(&g, &z, &Subgroup::whole(&g), 1_000_000).map_err(|e| e.to_string())?;
    ensure(out.transversal.is_none(), || "search found a transversal".into())?;
    Ok("D8 over Z: factorization, no centralizer condition, 5 != 4*2, 0 of 16 invariant".into())
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut skipped = 0;
    for (g, h) in pairs() {
        let space = (h.order() as f64).powi(h.index_in_parent() as i32);
        let whole = Subgroup::whole(&g);
        let searched = match brute_force_invariant_transversal(&g, &h, &whole, 1_000_000) {
            Ok(o) => o.transversal,
            Err(Error::SearchSpaceTooLarge { .. }) if space > 1e6 => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(format!("{} / {:?}: {e}", g.name(), h.members())),
        };
        if let Some(t) = &searched {
            let all: Vec<Element> = g.elements().collect();
            ensure(oracle_is_transversal(&g, &h, t.members()) && oracle_is_invariant(&g, &all, t.members()), || {
                format!("{}: search returned an invalid set", g.name())
            })?;
        }
        let v = check_conditions(&g, &h).map_err(|e| e.to_string())?;
        ensure(v.exists_invariant == searched.is_some(), || {
            format!(
                "{} / {:?}: conditions {} vs search {}",
                g.name(),
                h.members(),
                v.exists_invariant,
                searched.is_some()
            )
        })?;
        checked += 1;
    }
    Ok(format!("{checked} pairs agree, {skipped} beyond the search bound"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for (g, h) in pairs() {
        let v = check_conditions(&g, &h).map_err(|e| e.to_string())?;
        let q = quotient(&g, &h).map_err(|e| e.to_string())?;
        let counts = (oracle_class_number(&g), oracle_class_number(&q.quotient), oracle_class_number(&h.to_group(&g)));
        let c = v.class_counts;
        ensure((c.group, c.quotient, c.subgroup) == counts, || {
            format!("{}: class numbers {c:?} vs {counts:?}", g.name())
        })?;
        let gallagher = counts.0 == counts.1 * counts.2;
        let centralizer = oracle_centralizer_condition(&g, &h);
        ensure(v.centralizer_condition_holds == centralizer, || format!("{}: centralizer condition", g.name()))?;
        ensure(v.gallagher_holds == gallagher && gallagher == centralizer, || {
            format!("{} / {:?}: gallagher {gallagher} vs centralizer {centralizer}", g.name(), h.members())
        })?;
        checked += 1;
    }
    Ok(format!("{checked} pairs agree"))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut saw_rotations = false;
    for (g, h) in pairs() {
        if !is_abelian(&g, &h) {
            continue;
        }
        let found = brute_force_invariant_transversal(&g, &h, &h, 1_000_000).map_err(|e| e.to_string())?;
        let central = h.members().iter().all(|&x| g.elements().all(|y| g.commute(x, y)));
        ensure(found.transversal.is_some() == central, || {
            format!("{} / {:?}: search {} vs central {central}", g.name(), h.members(), found.transversal.is_some())
        })?;
        if g.name() == "D8" && h.members() == [Element(0), Element(1), Element(2), Element(3)] {
            ensure(found.transversal.is_none(), || "D8 <r> should have none".into())?;
            saw_rotations = true;
        }
        checked += 1;
    }
    ensure(saw_rotations, || "D8 <r> not covered".into())?;
    Ok(format!("{checked} abelian pairs agree, including D8 <r>"))
}

fn criterion_5() -> Outcome {
    let mut built = 0;
    for (g, h) in pairs() {
        if !check_conditions(&g, &h).map_err(|e| e.to_string())?.exists_invariant {
            continue;
        }
        let t = construct_invariant_transversal(&g, &h).map_err(|e| format!("{}: {e}", g.name()))?;
        let all: Vec<Element> = g.elements().collect();
        ensure(oracle_is_transversal(&g, &h, t.members()), || format!("{}: not a transversal", g.name()))?;
        ensure(oracle_is_invariant(&g, &all, t.members()), || format!("{}: not invariant", g.name()))?;
        let report = loop_from_transversal(&g, &h, t.members()).map_err(|e| e.to_string())?;
        ensure(report.is_loop_transversal && report.is_loop, || format!("{}: loop check", g.name()))?;
        built += 1;
    }
    Ok(format!("{built} constructions verified as loop transversals"))
}

fn criterion_6() -> Outcome {
    let mut built = 0;
    for (g, h) in pairs() {
        if !h.intersection(&commutator_subgroup(&g)).is_trivial() {
            continue;
        }
        let section = derived_section(&g, &h);
        let t = construct_via_derived(&g, &h, &section).map_err(|e| format!("{}: {e}", g.name()))?;
        let all: Vec<Element> = g.elements().collect();
        ensure(oracle_is_transversal(&g, &h, t.members()) && oracle_is_invariant(&g, &all, t.members()), || {
            format!("{} / {:?}: derived construction", g.name(), h.members())
        })?;
        built += 1;
    }
    Ok(format!("{built} pairs with trivial intersection verified"))
}

fn criterion_7() -> Outcome {
    use quaternion::{I, J, K, MINUS_ONE, ONE};
    let q8 = builtin_group(Family::Quaternion).unwrap();
    let z = center(&q8);
    let gamma = cocycle_from_transversal(&q8, &z, &[ONE, I, J, K]).map_err(|e| e.to_string())?;
    let (ib, jb) = (q8_bar(&gamma, I), q8_bar(&gamma, J));
    ensure(gamma.value(ib, jb) == ONE && gamma.value(jb, ib) == MINUS_ONE, || "Q8 gamma values".into())?;
    let lambda = linear_characters(&q8, &z).unwrap().into_iter().find(|l| l.is_faithful()).unwrap();
    let alpha = twist_by_character(&gamma, &lambda).map_err(|e| e.to_string())?;
    let regular = alpha_regular_elements(&alpha);
    ensure(regular.regular_classes == 1 && regular.regular == [Element(0)], || format!("{regular:?}"))?;
    ensure(!alpha_class_is_trivial(&q8, &z, &lambda).unwrap(), || "Q8 class should be nontrivial".into())?;

    let c4 = builtin_group(Family::Cyclic(4)).unwrap();
    let h = subgroup_closure(&c4, &[Element(2)]);
    let gamma = cocycle_from_transversal(&c4, &h, &[Element(0), Element(1)]).map_err(|e| e.to_string())?;
    let lambda = linear_characters(&c4, &h).unwrap().into_iter().find(|l| l.is_faithful()).unwrap();
    let regular = alpha_regular_elements(&twist_by_character(&gamma, &lambda).unwrap());
    ensure(regular.all_regular(2), || "C4/C2 should be all regular".into())?;
    ensure(alpha_class_is_trivial(&c4, &h, &lambda).unwrap(), || "C4/C2 class should be trivial".into())?;

    let mut transversals = 0u64;
    let mut central_pairs = 0;
    for (g, h) in pairs() {
        if !is_central(&g, &h) {
            continue;
        }
        central_pairs += 1;
        let expected = oracle_centralizer_condition(&g, &h);
        for t in enumerate_transversals(&g, &h).take(10_000) {
            let gamma = cocycle_from_transversal(&g, &h, &t).map_err(|e| e.to_string())?;
            ensure(symmetric_on_commuting(&gamma).holds == expected, || {
                format!("{} / {:?} with {t:?}", g.name(), h.members())
            })?;
            transversals += 1;
        }
    }
    Ok(format!("Q8 and C4 cases exact; {transversals} transversals over {central_pairs} central pairs agree"))
}

fn q8_bar(gamma: &transversal_lab_core::cocycle::CocycleTable, x: Element) -> Element {
    gamma.quotient_map().project(x)
}

fn criterion_8() -> Outcome {
    let s3 = builtin_group(Family::Symmetric(3)).unwrap();
    let c4 = builtin_group(Family::Cyclic(4)).unwrap();
    let prod = direct_product(&s3, &c4).unwrap();
    let g = &prod.group;
    let h = subgroup_closure(g, &[prod.right_embedding[1]]);
    let q = subgroup_closure(g, &[prod.right_embedding[2]]);
    let t = construct_via_derived(g, &h, &derived_section(g, &h)).map_err(|e| e.to_string())?;
    let d = descend_to_sylow(g, &h, &q, 2, t.members()).map_err(|e| e.to_string())?;
    ensure(d.sylow.order() == 8, || format!("|P| = {}", d.sylow.order()))?;
    // Q\P from scratch: cosets Qx for x in P.
    let p_members = d.sylow.members();
    let cosets: BTreeSet<BTreeSet<Element>> =
        p_members.iter().map(|&x| q.members().iter().map(|&y| g.mul(y, x)).collect()).collect();
    let hit: BTreeSet<BTreeSet<Element>> =
        d.sylow_transversal.iter().map(|&x| q.members().iter().map(|&y| g.mul(y, x)).collect()).collect();
    ensure(d.sylow_transversal.iter().all(|x| p_members.contains(x)), || "T_P not inside P".into())?;
    ensure(hit == cosets && d.sylow_transversal.len() == cosets.len(), || "T_P not a transversal".into())?;
    ensure(oracle_is_invariant(g, p_members, &d.sylow_transversal), || "T_P not P-invariant".into())?;
    let t_p: Vec<u32> = d.sylow_transversal.iter().map(|e| e.0).collect();
    Ok(format!("|P| = 8, T_P = {t_p:?} is a P-invariant transversal of Q in P"))
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_transversal-lab"))
        .args(args)
        .env_remove("TRANSVERSAL_LAB_CAP")
        .output()
        .expect("run transversal-lab")
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let corpus = dir.path().join("corpus");
    let corpus_str = corpus.to_str().unwrap();
    let out = cli(&["export-fixtures", corpus_str]);
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let mut summary = Vec::new();
    for mode in ["conjecture", "gallagher-special"] {
        let mut reports = Vec::new();
        for jobs in ["1", "8"] {
            let path = dir.path().join(format!("{mode}-{jobs}.json"));
            let out = cli(&[
                "scan",
                corpus_str,
                "--mode",
                mode,
                "--jobs",
                jobs,
                "--format",
                "json",
                "--out",
                path.to_str().unwrap(),
            ]);
            ensure(out.status.code() == Some(0), || format!("{mode} exit {:?}", out.status.code()))?;
            reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        ensure(reports[0] == reports[1], || format!("{mode}: --jobs 1 and --jobs 8 differ"))?;
        let report: transversal_lab::ScanReport = serde_json::from_slice(&reports[0]).map_err(|e| e.to_string())?;
        ensure(report.totals.groups == fixture_corpus().len() && report.errors.is_empty(), || {
            "corpus not fully scanned".into()
        })?;
        ensure(report.totals.counterexamples == 0, || format!("{mode}: counterexamples found"))?;
        ensure(report.pairs.iter().all(|p| !p.counterexample && !p.gallagher_special), || {
            format!("{mode}: hits found")
        })?;
        if mode == "conjecture" {
            let d8 = report.pairs.iter().find(|p| p.group == "D8" && p.subgroup == "<2>");
            ensure(d8.is_some_and(|p| !p.gallagher.holds), || "D8 center missing or Gallagher holds".into())?;
        }
        summary.push(format!("{mode}: {} pairs", report.pairs.len()));
    }
    Ok(format!(
        "{}; 0 counterexamples, 0 special hits, jobs 1 == jobs 8 (external order-64/128 corpora not bundled)",
        summary.join(", ")
    ))
}

fn run(number: usize, name: &str, limit: Option<Duration>, f: fn() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
        (o, _) => o,
    };
    let (status, detail) = match &outcome {
        Ok(d) => ("PASS", d.as_str()),
        Err(d) => ("FAIL", d.as_str()),
    };
    println!("{status} criterion {number}: {name} [{:.2}s] {detail}", elapsed.as_secs_f64());
    outcome.is_ok()
}

fn main() {
    let results = [
        run(1, "dihedral witness", Some(Duration::from_secs(1)), criterion_1),
        run(2, "conditions match exhaustive search", Some(Duration::from_secs(60)), criterion_2),
        run(3, "class number relation matches centralizer condition", None, criterion_3),
        run(4, "self-invariant transversal iff central", None, criterion_4),
        run(5, "construction soundness and loop structure", None, criterion_5),
        run(6, "derived-subgroup construction", None, criterion_6),
        run(7, "cocycle suite", None, criterion_7),
        run(8, "descent to a Sylow subgroup", Some(Duration::from_secs(1)), criterion_8),
        run(9, "corpus scans and parallel determinism", None, criterion_9),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
