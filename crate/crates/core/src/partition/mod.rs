//! The small/half/large partitions, the set Q, and listings of ≡c-classes.

mod listing;

pub use listing::{
    is_proper, listing_placing_late, proper_listing, reorder_for_equal_size, Listing,
    ListingError,
};

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::prover::{Atoms, DerivedRelations, Saturation};
use crate::syntax::{Form, Noun, Sentence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Small,
    Half,
    Large,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("{noun} would be put in both {first:?} and {second:?}")]
    Conflict {
        noun: Noun,
        first: Class,
        second: Class,
    },
    #[error("cannot refine with {target}: {fact} is derivable")]
    Precondition { target: Noun, fact: Sentence },
    #[error("unknown noun {0}")]
    UnknownNoun(Noun),
    #[error("partition property `{property}` fails at {noun}")]
    Property { property: &'static str, noun: Noun },
}

/// An assignment of every atom to small, half or large.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    atoms: Atoms,
    assign: Vec<Class>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionRecord {
    pub small: Vec<Noun>,
    pub half: Vec<Noun>,
    pub large: Vec<Noun>,
}

impl Partition {
    pub fn atoms(&self) -> &Atoms {
        &self.atoms
    }

    pub fn class_i(&self, i: usize) -> Class {
        self.assign[i]
    }

    pub fn class(&self, p: &Noun) -> Option<Class> {
        self.atoms.index_of(p).map(|i| self.assign[i])
    }

    pub fn indices(&self, c: Class) -> Vec<usize> {
        (0..self.assign.len()).filter(|&i| self.assign[i] == c).collect()
    }

    pub fn members(&self, c: Class) -> Vec<Noun> {
        self.indices(c)
            .into_iter()
            .map(|i| self.atoms.noun(i).clone())
            .collect()
    }

    pub fn record(&self) -> PartitionRecord {
        PartitionRecord {
            small: self.members(Class::Small),
            half: self.members(Class::Half),
            large: self.members(Class::Large),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (label, c) in [("small", Class::Small), ("half", Class::Half), ("large", Class::Large)] {
            let names: Vec<String> = self.members(c).iter().map(Noun::to_string).collect();
            let _ = writeln!(out, "{label:<6}: {{{}}}", names.join(", "));
        }
        out
    }
}

struct Builder<'a> {
    rels: &'a DerivedRelations,
    assign: Vec<Option<Class>>,
}

impl Builder<'_> {
    fn put(&mut self, i: usize, c: Class) -> Result<(), PartitionError> {
        let dual = match c {
            Class::Small => Class::Large,
            Class::Large => Class::Small,
            Class::Half => Class::Half,
        };
        for (k, want) in [(i, c), (Atoms::comp(i), dual)] {
            match self.assign[k] {
                None => self.assign[k] = Some(want),
                Some(have) if have == want => {}
                Some(have) => {
                    return Err(PartitionError::Conflict {
                        noun: self.rels.atoms().noun(k).clone(),
                        first: have,
                        second: want,
                    })
                }
            }
        }
        Ok(())
    }

    fn standard_steps(&mut self) -> Result<(), PartitionError> {
        let r = self.rels;
        let n = r.len();
        for p in 0..n {
            if r.equivc_i(p, Atoms::comp(p)) {
                self.put(p, Class::Half)?;
            }
        }
        for p in 0..n {
            if (0..n).any(|q| r.ltmore_i(p, q)) {
                self.put(p, Class::Small)?;
            }
        }
        for p in 0..n {
            if self.assign[p].is_none() {
                self.put(p, Class::Half)?;
            }
        }
        Ok(())
    }

    fn finish(self) -> Partition {
        Partition {
            atoms: self.rels.atoms().clone(),
            assign: self.assign.into_iter().map(|c| c.expect("assigned")).collect(),
        }
    }
}

/// The standard partition, with its structural properties checked.
pub fn standard_partition(rels: &DerivedRelations) -> Result<Partition, PartitionError> {
    let mut b = Builder {
        rels,
        assign: vec![None; rels.len()],
    };
    b.standard_steps()?;
    let p = b.finish();
    check_properties(rels, &p)?;
    Ok(p)
}

/// The refined partition that also puts everything ≤c `target` in small.
pub fn refined_partition(
    rels: &DerivedRelations,
    target: &Noun,
) -> Result<Partition, PartitionError> {
    let t = rels
        .atoms()
        .index_of(target)
        .ok_or_else(|| PartitionError::UnknownNoun(target.clone()))?;
    let tc = Atoms::comp(t);
    let noun = |i: usize| rels.atoms().noun(i).clone();
    if rels.leqc_i(tc, t) {
        return Err(PartitionError::Precondition {
            target: target.clone(),
            fact: Sentence::at_least(noun(t), noun(tc)),
        });
    }
    if let Some(x) = (0..rels.len()).find(|&x| rels.ltmore_i(tc, x)) {
        return Err(PartitionError::Precondition {
            target: target.clone(),
            fact: Sentence::new(Form::More, noun(x), noun(tc)),
        });
    }
    let mut b = Builder {
        rels,
        assign: vec![None; rels.len()],
    };
    for p in 0..rels.len() {
        if rels.leqc_i(p, t) {
            b.put(p, Class::Small)?;
        }
    }
    b.standard_steps()?;
    let p = b.finish();
    check_properties(rels, &p)?;
    if p.class_i(t) != Class::Small {
        return Err(PartitionError::Property {
            property: "target small",
            noun: target.clone(),
        });
    }
    Ok(p)
}

fn check_properties(rels: &DerivedRelations, part: &Partition) -> Result<(), PartitionError> {
    let n = rels.len();
    let c = Atoms::comp;
    let fail = |property: &'static str, i: usize| {
        Err(PartitionError::Property {
            property,
            noun: rels.atoms().noun(i).clone(),
        })
    };
    for p in 0..n {
        let cls = part.class_i(p);
        if rels.equivc_i(p, c(p)) && cls != Class::Half {
            return fail("self-equivalent is half", p);
        }
        if (0..n).any(|q| rels.ltmore_i(p, q)) && cls != Class::Small {
            return fail("strictly less is small", p);
        }
        if (cls == Class::Large) != (part.class_i(c(p)) == Class::Small) {
            return fail("large iff complement small", p);
        }
        for q in 0..n {
            if rels.leqc_i(q, p) && cls == Class::Small && part.class_i(q) != Class::Small {
                return fail("small is down-closed", q);
            }
        }
        if rels.leqc_i(p, c(p))
            && !(cls == Class::Small && part.class_i(c(p)) == Class::Large)
            && !(cls == Class::Half && part.class_i(c(p)) == Class::Half)
        {
            return fail("below own complement", p);
        }
        if rels.leq_i(c(p), p) && !(part.class_i(c(p)) == Class::Small && cls == Class::Large) {
            return fail("complement subset", p);
        }
    }
    Ok(())
}

/// Small nouns with derivable self-existence.
pub fn compute_q(sat: &Saturation, part: &Partition) -> Vec<usize> {
    part.indices(Class::Small)
        .into_iter()
        .filter(|&i| sat.has(Form::Some, i, i))
        .collect()
}

/// The ≡c-classes of the given atoms, each sorted.
pub fn classes_of(rels: &DerivedRelations, members: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &m in members {
        if let Some(c) = out.iter_mut().find(|c| rels.equivc_i(c[0], m)) {
            c.push(m);
        } else {
            out.push(vec![m]);
        }
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out
}
