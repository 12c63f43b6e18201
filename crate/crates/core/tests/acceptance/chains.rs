//! Criterion 6: strict chains and infinite theories.

use syllogistic::modelbuild::build_model;
use syllogistic::syntax::ParseErrorKind;
use syllogistic::{parse, prover, Noun};

use crate::common::chain;

pub fn run() -> Result<String, String> {
    let mut failures = Vec::new();
    for len in 1..=5 {
        let gamma = chain(len);
        if !prover::is_consistent(&gamma) {
            failures.push(format!("chain {len} is inconsistent"));
            continue;
        }
        let out = build_model(&gamma, []).map_err(|e| format!("chain {len}: {e}"))?;
        let cards: Vec<_> = (0..=len)
            .map(|i| out.model.card_of(&Noun::pos(&format!("x{i}"))))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if !cards.windows(2).all(|w| w[0] > w[1]) {
            failures.push(format!("chain {len}: {cards:?}"));
        }
    }
    match parse("more x0 x1\nmore x1 x2\n...") {
        Err(e) if e.kind == ParseErrorKind::InfiniteTheory && e.to_string().contains("finite") => {}
        other => failures.push(format!("ellipsis accepted: {other:?}")),
    }
    if failures.is_empty() {
        Ok("chains 1..5 strictly descending; elided theory rejected".into())
    } else {
        Err(failures.join("; "))
    }
}
