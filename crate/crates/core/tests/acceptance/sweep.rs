//! Exhaustive prover/oracle agreement over two base nouns.

use std::collections::{BTreeMap, BTreeSet};

use syllogistic::oracle::{cross_check_with, OracleBounds, TruthTable};
use syllogistic::prover;
use syllogistic::{Mode, Noun, Sentence};

pub struct SweepReport {
    pub theories: usize,
    pub questions: usize,
    pub disagreements: Vec<String>,
    pub unverified: Vec<String>,
    pub cases: BTreeMap<String, usize>,
}

fn swap(s: &Sentence) -> Sentence {
    let f = |n: &Noun| {
        let base = if n.base() == "p" { "q" } else { "p" };
        if n.is_negated() {
            Noun::neg(base)
        } else {
            Noun::pos(base)
        }
    };
    Sentence::new(s.form, f(&s.left), f(&s.right))
}

/// All theories of at most two sentences, one per orbit under p ↔ q.
pub fn theories(all: &[Sentence]) -> Vec<Vec<Sentence>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |g: Vec<Sentence>| {
        let a: BTreeSet<Sentence> = g.iter().cloned().collect();
        let b: BTreeSet<Sentence> = g.iter().map(swap).collect();
        let key = a.clone().min(b);
        if seen.insert(key.clone()) {
            out.push(key.into_iter().collect());
        }
    };
    push(vec![]);
    for (i, x) in all.iter().enumerate() {
        push(vec![x.clone()]);
        for y in &all[i + 1..] {
            push(vec![x.clone(), y.clone()]);
        }
    }
    out
}

pub fn run() -> SweepReport {
    let bounds = OracleBounds::new(["p", "q"]);
    let table = TruthTable::new(&bounds, Mode::Infinite).expect("two bases are within the guard");
    let all = table.sentences().to_vec();
    let gammas = theories(&all);
    let mut report = SweepReport {
        theories: gammas.len(),
        questions: 0,
        disagreements: Vec::new(),
        unverified: Vec::new(),
        cases: BTreeMap::new(),
    };
    for gamma in &gammas {
        let consistent = prover::is_consistent(gamma);
        for phi in &all {
            report.questions += 1;
            let c = cross_check_with(&table, gamma, phi).expect("sentences are over the bases");
            let show = || {
                let g: Vec<String> = gamma.iter().map(|s| s.symbolic()).collect();
                format!("{{{}}} ⊢ {}", g.join(", "), phi.symbolic())
            };
            if !c.agreement {
                report.disagreements.push(format!("{}: {}", show(), c.render().replace('\n', "; ")));
            }
            if consistent && !c.prover_verdict {
                match &c.artifacts {
                    Some(Ok(cm)) if cm.report.passed() => {
                        *report.cases.entry(format!("{:?}", cm.case)).or_default() += 1;
                    }
                    Some(Ok(cm)) => report.unverified.push(format!("{}: {}", show(), cm.report.render())),
                    Some(Err(e)) => report.unverified.push(format!("{}: {e}", show())),
                    None => report.unverified.push(format!("{}: no artifact", show())),
                }
            }
        }
    }
    report
}
