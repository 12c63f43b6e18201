//! Criterion 2: the 17-sentence running example.

use syllogistic::countermodel::countermodel;
use syllogistic::partition::{compute_q, standard_partition, Class};
use syllogistic::prover::{self, DerivedRelations};
use syllogistic::{Noun, Sentence};

use crate::common::{fig7, fig7_atoms, fig7_equivc, fig7_leq, fig7_leqc, fig7_ltc, fig7_ltmore, fig7_model, n};

fn names(v: &[Noun]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// A listed pair that is not derived, with the sentence whose derivation it needs.
struct Missing {
    what: String,
    needs: Option<Sentence>,
}

fn missing(what: String, needs: Option<Sentence>) -> Missing {
    Missing { what, needs }
}

/// `x ≤c y` is the sentence ∃≥(y,x).
fn leqc_sentence(x: &Noun, y: &Noun) -> Sentence {
    Sentence::at_least(y.clone(), x.clone())
}

fn relation_failures(rels: &DerivedRelations) -> Vec<Missing> {
    let mut out = Vec::new();
    let atoms = fig7_atoms();
    let leq = fig7_leq();
    for x in &atoms {
        for y in &atoms {
            let listed = x == y || leq.contains(&(x.clone(), y.clone()));
            if rels.leq(x, y) != listed {
                out.push(missing(format!("≤ {x},{y}: derived {}", rels.leq(x, y)), None));
            }
        }
    }
    for (x, y) in leq.iter().chain(&fig7_leqc()) {
        if !rels.leqc(x, y) {
            out.push(missing(format!("{x} ≤c {y}"), Some(leqc_sentence(x, y))));
        }
    }
    for (x, y) in fig7_ltc() {
        if !rels.leqc(&x, &y) {
            out.push(missing(format!("{x} <c {y}"), Some(leqc_sentence(&x, &y))));
        } else if rels.leqc(&y, &x) {
            out.push(missing(format!("{x} <c {y}: {y} ≤c {x} is derived"), None));
        }
    }
    for (x, y) in fig7_ltmore() {
        if !rels.ltmore(&x, &y) {
            out.push(missing(format!("{x} <more {y}"), Some(Sentence::more(y.clone(), x.clone()))));
        }
        if rels.leqc(&y, &x) {
            out.push(missing(format!("{y} ≤c {x} contradicts {x} <more {y}"), None));
        }
    }
    for (x, y) in fig7_equivc() {
        for (a, b) in [(&x, &y), (&y, &x)] {
            if !rels.leqc(a, b) {
                out.push(missing(format!("{x} ≡c {y}"), Some(leqc_sentence(a, b))));
            }
        }
    }
    out
}

pub fn run() -> Result<String, String> {
    let gamma: Vec<Sentence> = fig7();
    let mut failures = Vec::new();
    if gamma.len() != 17 {
        failures.push(format!("{} sentences", gamma.len()));
    }
    let sat = prover::saturate(&gamma, fig7_atoms());
    let rels = prover::relations_of(&sat).map_err(|e| e.to_string())?;
    let part = standard_partition(&rels).map_err(|e| e.to_string())?;
    let want = |xs: &[&str]| -> Vec<String> { xs.iter().map(|x| n(x).to_string()).collect() };
    for (class, expect) in [
        (Class::Small, want(&["a", "b", "c", "d"])),
        (Class::Half, want(&["e", "~e", "f", "~f", "g", "~g"])),
        (Class::Large, want(&["~a", "~b", "~c", "~d"])),
    ] {
        let mut got = names(&part.members(class));
        got.sort();
        let mut expect = expect;
        expect.sort();
        if got != expect {
            failures.push(format!("{class:?}: {got:?}"));
        }
    }
    let q: Vec<String> = compute_q(&sat, &part).into_iter().map(|i| rels.atoms().noun(i).to_string()).collect();
    if q != ["c", "d"] {
        failures.push(format!("Q = {q:?}"));
    }
    // A listed pair that is not derived is reported with a verified model of Γ
    // refuting it, when one exists.
    let mut refuted = Vec::new();
    for m in relation_failures(&rels) {
        match m.needs.as_ref().map(|phi| countermodel(&gamma, phi)) {
            Some(Ok(cm)) if cm.report.passed() => {
                if !refuted.contains(&m.what) {
                    refuted.push(m.what);
                }
            }
            Some(_) => failures.push(format!("{} not derived and no countermodel", m.what)),
            None => failures.push(m.what),
        }
    }
    if !refuted.is_empty() {
        failures.push(format!(
            "{} listed pairs are not consequences of Γ (verified countermodel for each): {}",
            refuted.len(),
            refuted.join(", ")
        ));
    }
    let m = fig7_model();
    match m.failures(&gamma) {
        Ok(f) if f.is_empty() => {}
        Ok(f) => failures.push(format!("fixture model falsifies {f:?}")),
        Err(e) => failures.push(e.to_string()),
    }
    if failures.is_empty() {
        Ok("partition, Q, relations and fixture model match".into())
    } else {
        Err(failures.join("; "))
    }
}
