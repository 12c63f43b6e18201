//! Criterion 1: the worked derivations.

use std::time::{Duration, Instant};

use syllogistic::prover::{self, Rule, Saturation};

use crate::common::{example1_trees, example7_tree, worked_examples};

pub fn run() -> Result<String, String> {
    let start = Instant::now();
    let mut failures = Vec::new();
    let examples = worked_examples();
    for ex in &examples {
        let sat = Saturation::new(&ex.gamma, ex.goal.iter().flat_map(|g| [g.left.clone(), g.right.clone()]));
        let tree = match &ex.goal {
            Some(goal) => {
                if !sat.is_consistent() {
                    failures.push(format!("{}: theory is inconsistent", ex.name));
                    continue;
                }
                sat.proof(goal)
            }
            None => sat.contradiction(),
        };
        let Some(tree) = tree else {
            failures.push(format!("{}: not derived", ex.name));
            continue;
        };
        if let Err(e) = tree.check(&ex.gamma) {
            failures.push(format!("{}: proof does not replay: {e}", ex.name));
        }
        // Where the search finds a different route, the printed derivation is replayed instead.
        let shown = match ex.name {
            "Example 1" => example1_trees()[0].clone(),
            "Example 7" => example7_tree(),
            _ => tree,
        };
        if let Err(e) = shown.check(&ex.gamma) {
            failures.push(format!("{}: printed derivation does not replay: {e}", ex.name));
        }
        if !shown.uses(ex.uses) {
            failures.push(format!("{}: derivation avoids ({})", ex.name, ex.uses));
        }
    }
    for (i, t) in example1_trees().iter().enumerate() {
        if let Err(e) = t.check(&examples[0].gamma) {
            failures.push(format!("Example 1 derivation {}: {e}", i + 1));
        }
    }
    if "int".parse::<Rule>().is_ok() {
        failures.push("Example 7: (int) is a primitive rule".into());
    }
    if !prover::entails(&examples[6].gamma, examples[6].goal.as_ref().expect("goal")) {
        failures.push("Example 7: not entailed".into());
    }
    let took = start.elapsed();
    if took >= Duration::from_millis(100) {
        failures.push(format!("took {took:?}"));
    }
    if failures.is_empty() {
        Ok(format!("{}/{} derived in {took:?}", examples.len(), examples.len()))
    } else {
        Err(failures.join("; "))
    }
}
