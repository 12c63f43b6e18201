use std::collections::BTreeMap;

use thiserror::Error;

use crate::semantics::BlockSet;
use crate::syntax::Noun;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("{0} is listed without its complement")]
    MissingComplement(Noun),
    #[error("the seeds of {0} and its complement overlap")]
    Overlap(Noun),
    #[error("{0} ≤ {1} but its seed is not contained in that of {1}")]
    NotMonotone(Noun, Noun),
    #[error("the seed of {0} leaves the universe")]
    OutsideUniverse(Noun),
}

/// Extends `seeds` so that every pair `h`, `h̄` splits `universe`.
///
/// Blocks are visited in order. An unclaimed block goes to the smaller noun of the
/// pair and to everything above it, which keeps both disjointness and monotonicity.
pub fn half_completion(
    universe: &BlockSet,
    half: &[Noun],
    seeds: &BTreeMap<Noun, BlockSet>,
    leq: impl Fn(&Noun, &Noun) -> bool,
) -> Result<BTreeMap<Noun, BlockSet>, CompletionError> {
    let mut nouns: Vec<Noun> = half.to_vec();
    nouns.sort();
    nouns.dedup();
    let mut out: BTreeMap<Noun, BlockSet> = nouns
        .iter()
        .map(|h| (h.clone(), seeds.get(h).cloned().unwrap_or_default()))
        .collect();
    for h in &nouns {
        let c = h.complement();
        let Some(cs) = out.get(&c) else {
            return Err(CompletionError::MissingComplement(h.clone()));
        };
        if !out[h].is_disjoint(cs) {
            return Err(CompletionError::Overlap(h.clone()));
        }
        if !out[h].is_subset(universe) {
            return Err(CompletionError::OutsideUniverse(h.clone()));
        }
        for z in &nouns {
            if leq(h, z) && !out[h].is_subset(&out[z]) {
                return Err(CompletionError::NotMonotone(h.clone(), z.clone()));
            }
        }
    }
    let ups: BTreeMap<&Noun, Vec<Noun>> = nouns
        .iter()
        .map(|h| (h, nouns.iter().filter(|z| leq(h, z)).cloned().collect()))
        .collect();
    for &w in universe {
        for h in nouns.iter().filter(|h| **h < h.complement()) {
            if out[h].contains(&w) || out[&h.complement()].contains(&w) {
                continue;
            }
            for z in &ups[h] {
                out.get_mut(z).unwrap().insert(w);
            }
        }
    }
    debug_assert!(nouns.iter().all(|h| {
        let c = &out[&h.complement()];
        out[h].is_disjoint(c) && out[h].union(c).count() == universe.len()
    }));
    Ok(out)
}
