//! Criterion 5: random model builds.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use syllogistic::modelbuild::build_model;

use crate::common::random_consistent;

pub const RUNS: usize = 500;

pub fn run() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    let mut max_aleph = 0;
    for _ in 0..RUNS {
        let gamma = random_consistent(&mut rng, 5, 8);
        let shown = || gamma.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; ");
        match build_model(&gamma, []) {
            Ok(out) => {
                if !out.model.satisfies_all(&gamma).unwrap_or(false) {
                    failures.push(format!("not a model of [{}]", shown()));
                }
                let top = out.model.max_aleph_index().unwrap_or(0);
                max_aleph = max_aleph.max(top);
                if top as usize > out.ladder.n() + 1 {
                    failures.push(format!("ℵ{top} with {} classes for [{}]", out.ladder.n(), shown()));
                }
            }
            Err(e) => failures.push(format!("[{}]: {e}", shown())),
        }
    }
    if failures.is_empty() {
        Ok(format!("{RUNS}/{RUNS} built and checked, largest ℵ{max_aleph}"))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}
