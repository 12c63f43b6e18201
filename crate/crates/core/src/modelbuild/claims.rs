//! Runtime checks of the properties the construction is meant to guarantee.

use crate::partition::{Class, Listing, Partition};
use crate::prover::{DerivedRelations, Saturation};
use crate::semantics::{BlockSet, Cardinal, Structure};
use crate::syntax::Form;

use super::{BuildError, KappaLadder};

pub(crate) struct View<'a> {
    pub rels: &'a DerivedRelations,
    pub partition: &'a Partition,
    pub listing: &'a Listing,
    pub ladder: &'a KappaLadder,
    pub structure: &'a Structure,
    pub ext: &'a [BlockSet],
}

impl View<'_> {
    fn name(&self, i: usize) -> String {
        self.rels.atoms().noun(i).to_string()
    }

    fn card(&self, i: usize) -> Cardinal {
        self.structure.size_of(&self.ext[i])
    }

    fn small_half(&self) -> Vec<usize> {
        (0..self.ext.len())
            .filter(|&i| self.partition.class_i(i) != Class::Large)
            .collect()
    }
}

pub(crate) fn ladder_monotone(ladder: &KappaLadder) -> Result<(), BuildError> {
    for w in ladder.kappas.windows(2) {
        if w[1] != w[0] && w[1] != w[0].successor() {
            return Err(BuildError::claim("ladder steps", format!("{} then {}", w[0], w[1])));
        }
    }
    if !ladder.top().is_infinite() {
        return Err(BuildError::claim("ladder steps", "top is finite".into()));
    }
    Ok(())
}

pub(crate) fn empty_outside_q(v: &View, q: &[usize]) -> Result<(), BuildError> {
    for i in v.partition.indices(Class::Small) {
        if !q.contains(&i) && !v.ext[i].is_empty() {
            return Err(BuildError::claim("empty outside Q", v.name(i)));
        }
    }
    Ok(())
}

pub(crate) fn subsets_preserved(v: &View) -> Result<(), BuildError> {
    let sh = v.small_half();
    for &z in &sh {
        for &w in &sh {
            if v.rels.leq_i(z, w) && !v.ext[z].is_subset(&v.ext[w]) {
                return Err(BuildError::claim(
                    "subsets preserved",
                    format!("{} ≤ {}", v.name(z), v.name(w)),
                ));
            }
        }
    }
    Ok(())
}

pub(crate) fn class_cardinalities(v: &View) -> Result<(), BuildError> {
    let n = v.listing.len();
    for (k, class) in v.listing.classes.iter().enumerate() {
        for &x in class {
            if v.card(x) != v.ladder.kappa(k + 1) {
                return Err(BuildError::claim(
                    "class cardinality",
                    format!("|{}| = {} but κ{} = {}", v.name(x), v.card(x), k + 1, v.ladder.kappa(k + 1)),
                ));
            }
        }
    }
    for x in v.partition.indices(Class::Half) {
        if v.card(x) != v.ladder.kappa(n + 1) {
            return Err(BuildError::claim(
                "class cardinality",
                format!("|{}| = {} for a half noun", v.name(x), v.card(x)),
            ));
        }
    }
    Ok(())
}

/// Intersections among `nouns` must be backed by a derivable ∃ sentence of `sat`.
pub(crate) fn intersections_derivable(
    v: &View,
    sat: &Saturation,
    nouns: &[usize],
) -> Result<(), BuildError> {
    for &x in nouns {
        for &y in nouns {
            if !v.ext[x].is_disjoint(&v.ext[y]) && !sat.has(Form::Some, x, y) {
                return Err(BuildError::claim(
                    "intersection derivable",
                    format!("{} meets {}", v.name(x), v.name(y)),
                ));
            }
        }
    }
    Ok(())
}

pub(crate) fn large_cardinalities(v: &View) -> Result<(), BuildError> {
    let top = v.ladder.top();
    for x in v.partition.indices(Class::Large) {
        if v.card(x) != top {
            return Err(BuildError::claim(
                "large cardinality",
                format!("|{}| = {} ≠ {top}", v.name(x), v.card(x)),
            ));
        }
        for y in 0..v.ext.len() {
            if v.rels.ltmore_i(y, x) && v.card(y) >= top {
                return Err(BuildError::claim(
                    "large cardinality",
                    format!("{} <more {} but |{}| = {}", v.name(y), v.name(x), v.name(y), v.card(y)),
                ));
            }
        }
    }
    Ok(())
}

pub(crate) fn aleph_bound(v: &View) -> Result<(), BuildError> {
    let n = v.listing.len() as u32;
    let max = v
        .structure
        .blocks
        .iter()
        .filter_map(|b| b.size.aleph_index())
        .max()
        .unwrap_or(0);
    if max > n + 1 {
        return Err(BuildError::claim("aleph bound", format!("ℵ{max} with {n} classes")));
    }
    Ok(())
}
