use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::prover::DerivedRelations;
use crate::syntax::Noun;

/// An ordered list of ≡c-classes, each a sorted list of atom indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Listing {
    pub classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListingError {
    #[error("the strict order on classes has a cycle")]
    Cycle,
    #[error("target class is not among the classes to list")]
    MissingTarget,
    #[error("reordering needs {y} ≤c {x}")]
    NotBelow { x: Noun, y: Noun },
    #[error("{y} <more {x} is derivable, so the two cannot receive equal sizes")]
    StrictlyMore { x: Noun, y: Noun },
}

impl Listing {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Position of the class containing atom `i`.
    pub fn position_of(&self, i: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&i))
    }

    pub fn nouns(&self, rels: &DerivedRelations) -> Vec<Vec<Noun>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&i| rels.atoms().noun(i).clone()).collect())
            .collect()
    }

    /// Whether every class precedes all classes strictly above it.
    pub fn is_proper(&self, rels: &DerivedRelations) -> bool {
        is_proper(&self.classes, rels)
    }

    pub fn render(&self, rels: &DerivedRelations) -> String {
        self.nouns(rels)
            .iter()
            .map(|c| {
                let names: Vec<String> = c.iter().map(Noun::to_string).collect();
                format!("[{}]", names.join(","))
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn below(rels: &DerivedRelations, a: &[usize], b: &[usize]) -> bool {
    rels.ltc_i(a[0], b[0])
}

pub fn is_proper(classes: &[Vec<usize>], rels: &DerivedRelations) -> bool {
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if below(rels, &classes[j], &classes[i]) {
                return false;
            }
        }
    }
    true
}

/// Topological sort by <c, breaking ties by least member.
pub fn proper_listing(
    classes: Vec<Vec<usize>>,
    rels: &DerivedRelations,
) -> Result<Listing, ListingError> {
    let mut classes: Vec<Vec<usize>> = classes
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .filter(|c| !c.is_empty())
        .collect();
    classes.sort();
    let k = classes.len();
    let mut indeg = vec![0usize; k];
    for (j, d) in indeg.iter_mut().enumerate() {
        *d = (0..k).filter(|&i| below(rels, &classes[i], &classes[j])).count();
    }
    let mut ready: BTreeSet<(usize, usize)> = (0..k)
        .filter(|&j| indeg[j] == 0)
        .map(|j| (classes[j][0], j))
        .collect();
    let mut order = Vec::with_capacity(k);
    while let Some(&(key, i)) = ready.iter().next() {
        ready.remove(&(key, i));
        order.push(i);
        for j in 0..k {
            if below(rels, &classes[i], &classes[j]) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert((classes[j][0], j));
                }
            }
        }
    }
    if order.len() != k {
        return Err(ListingError::Cycle);
    }
    Ok(Listing {
        classes: order.into_iter().map(|i| classes[i].clone()).collect(),
    })
}

/// A proper listing in which every class not ≥c the target comes before it.
pub fn listing_placing_late(
    classes: Vec<Vec<usize>>,
    rels: &DerivedRelations,
    target: usize,
) -> Result<Listing, ListingError> {
    let y = classes
        .iter()
        .find(|c| c.contains(&target))
        .cloned()
        .ok_or(ListingError::MissingTarget)?;
    let (up, down): (Vec<_>, Vec<_>) = classes
        .into_iter()
        .partition(|c| rels.leqc_i(y[0], c[0]));
    let mut out = proper_listing(down, rels)?.classes;
    out.push(y.clone());
    let rest: Vec<_> = up.into_iter().filter(|c| *c != y).collect();
    out.extend(proper_listing(rest, rels)?.classes);
    Ok(Listing { classes: out })
}

/// Reorders a proper listing as `P ++ [y] ++ M ++ [x] ++ R`, where `P` holds the
/// classes not ≥c `y`, `M` those between `y` and `x`, and `R` the rest. Relative
/// order inside each group is kept.
///
/// Returns the new listing and the position of `[y]`. When that position is forced
/// to demand a larger size, no class from `[y]` up to `[x]` can demand one, so
/// `x` and `y` receive the same cardinal.
pub fn reorder_for_equal_size(
    listing: &Listing,
    rels: &DerivedRelations,
    x: usize,
    y: usize,
) -> Result<(Listing, usize), ListingError> {
    let name = |i: usize| rels.atoms().noun(i).clone();
    if !rels.leqc_i(y, x) {
        return Err(ListingError::NotBelow {
            x: name(x),
            y: name(y),
        });
    }
    if rels.ltmore_i(y, x) {
        return Err(ListingError::StrictlyMore {
            x: name(x),
            y: name(y),
        });
    }
    let py = listing.position_of(y).ok_or(ListingError::MissingTarget)?;
    let px = listing.position_of(x).ok_or(ListingError::MissingTarget)?;
    if px == py {
        return Ok((listing.clone(), py));
    }
    let (yc, xc) = (listing.classes[py].clone(), listing.classes[px].clone());
    let mut before = Vec::new();
    let mut middle = Vec::new();
    let mut after = Vec::new();
    for (k, c) in listing.classes.iter().enumerate() {
        if k == py || k == px {
            continue;
        }
        let above_y = rels.leqc_i(y, c[0]);
        let below_x = rels.leqc_i(c[0], x);
        if !above_y {
            before.push(c.clone());
        } else if below_x {
            middle.push(c.clone());
        } else {
            after.push(c.clone());
        }
    }
    let mut out = before;
    let pos = out.len();
    out.push(yc);
    out.extend(middle);
    out.push(xc);
    out.extend(after);
    Ok((Listing { classes: out }, pos))
}
