use std::collections::{BTreeSet, HashMap};

use crate::syntax::Noun;

/// A complement-closed, indexed noun universe.
///
/// Base `k` (in sorted order) occupies index `2k` positively and `2k+1`
/// negatively, so complementation is `i ^ 1` and index order agrees with
/// the order on nouns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atoms {
    nouns: Vec<Noun>,
    index: HashMap<Noun, usize>,
}

impl Atoms {
    pub fn new<I: IntoIterator<Item = Noun>>(nouns: I) -> Atoms {
        let bases: BTreeSet<Noun> = nouns.into_iter().map(|n| n.positive()).collect();
        let mut list = Vec::with_capacity(bases.len() * 2);
        for b in bases {
            let neg = b.complement();
            list.push(b);
            list.push(neg);
        }
        let index = list.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();
        Atoms { nouns: list, index }
    }

    pub fn len(&self) -> usize {
        self.nouns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nouns.is_empty()
    }

    pub fn noun(&self, i: usize) -> &Noun {
        &self.nouns[i]
    }

    pub fn nouns(&self) -> &[Noun] {
        &self.nouns
    }

    pub fn index_of(&self, p: &Noun) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Noun) -> bool {
        self.index.contains_key(p)
    }

    pub fn comp(i: usize) -> usize {
        i ^ 1
    }
}
