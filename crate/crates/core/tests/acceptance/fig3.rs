//! Criterion 3: the six rules that are sound on finite models only.

use crate::common::finite_only_rules;

pub fn run() -> Result<String, String> {
    let rules = finite_only_rules();
    let mut failures = Vec::new();
    for r in &rules {
        let premises = r.model.satisfies_all(&r.premises).map_err(|e| e.to_string())?;
        let conclusion = r.model.satisfies(&r.conclusion).map_err(|e| e.to_string())?;
        if !premises || conclusion || !r.model.universe_size().is_infinite() {
            failures.push(r.name);
        }
    }
    if failures.is_empty() {
        Ok(format!("{}/{} counterexamples", rules.len(), rules.len()))
    } else {
        Err(format!("not a counterexample: {}", failures.join(", ")))
    }
}
