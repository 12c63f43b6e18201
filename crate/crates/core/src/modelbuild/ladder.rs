use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::partition::{Class, Listing, Partition};
use crate::prover::DerivedRelations;
use crate::semantics::Cardinal;

/// κ_1 … κ_{n+1}: one cardinal per listed class plus one for the half nouns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaLadder {
    pub kappas: Vec<Cardinal>,
    /// Whether each position demanded a larger size.
    pub demanded: Vec<bool>,
}

fn more_between(rels: &DerivedRelations, lower: &[usize], upper: &[usize]) -> bool {
    lower
        .iter()
        .any(|&a| upper.iter().any(|&b| rels.ltmore_i(a, b)))
}

/// Whether position `i` (1-based, `n+1` for the half step) demands a larger size,
/// given κ_1 … κ_{i-1} in `earlier`.
pub fn demands_larger(
    i: usize,
    earlier: &[Cardinal],
    rels: &DerivedRelations,
    partition: &Partition,
    listing: &Listing,
    overrides: &BTreeSet<usize>,
) -> bool {
    let n = listing.len();
    debug_assert_eq!(earlier.len(), i - 1);
    if i == 1 && n >= 1 {
        return false;
    }
    if overrides.contains(&i) {
        return true;
    }
    let Some(&prev) = earlier.last() else {
        return true;
    };
    let hits = |target: &[usize]| {
        (0..i - 1).any(|j| earlier[j] == prev && more_between(rels, &listing.classes[j], target))
    };
    if i <= n {
        hits(&listing.classes[i - 1])
    } else {
        hits(&partition.indices(Class::Half)) || hits(&partition.indices(Class::Large))
    }
}

impl KappaLadder {
    pub fn compute(
        rels: &DerivedRelations,
        partition: &Partition,
        listing: &Listing,
        overrides: &BTreeSet<usize>,
    ) -> KappaLadder {
        let n = listing.len();
        let mut kappas = Vec::with_capacity(n + 1);
        let mut demanded = Vec::with_capacity(n + 1);
        for i in 1..=n + 1 {
            let d = demands_larger(i, &kappas, rels, partition, listing, overrides);
            let k = match kappas.last() {
                None => Cardinal::ALEPH_0,
                Some(&prev) if d => Cardinal::successor(prev),
                Some(&prev) => prev,
            };
            kappas.push(k);
            demanded.push(d);
        }
        KappaLadder { kappas, demanded }
    }

    /// Number of listed classes.
    pub fn n(&self) -> usize {
        self.kappas.len() - 1
    }

    /// κ at a 1-based position.
    pub fn kappa(&self, pos: usize) -> Cardinal {
        self.kappas[pos - 1]
    }

    pub fn top(&self) -> Cardinal {
        *self.kappas.last().expect("ladder is never empty")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (k, d)) in self.kappas.iter().zip(&self.demanded).enumerate() {
            let tag = if i == self.n() { " (half)" } else { "" };
            let why = if *d { "  demands a larger size" } else { "" };
            let _ = writeln!(out, "κ{}{tag} = {k}{why}", i + 1);
        }
        out
    }
}
