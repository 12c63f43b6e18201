use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Cardinal;
use crate::syntax::{Form, Noun, Sentence};

/// Indices into a block list.
pub type BlockSet = BTreeSet<usize>;

/// A labelled piece of the universe with a cardinality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub id: String,
    pub size: Cardinal,
}

impl Block {
    pub fn new(id: impl Into<String>, size: Cardinal) -> Block {
        Block {
            id: id.into(),
            size,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// The universe must be infinite.
    Infinite,
    /// Finite universes are allowed.
    Unrestricted,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("noun {0} is not interpreted")]
    UnknownNoun(Noun),
    #[error("{0} and its complement do not partition the universe")]
    NotComplementClosed(Noun),
    #[error("block `{0}` is empty")]
    EmptyBlock(String),
    #[error("duplicate block id `{0}`")]
    DuplicateBlock(String),
    #[error("unknown block id `{0}`")]
    UnknownBlock(String),
    #[error("block index {0} out of range")]
    BlockIndex(usize),
    #[error("an infinite-mode model needs an infinite universe, found {0}")]
    FiniteUniverse(Cardinal),
    #[error("bad noun in model record: {0}")]
    BadNoun(String),
}

/// Blocks plus an interpretation of some nouns, with no complement requirement.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Structure {
    pub blocks: Vec<Block>,
    pub interp: BTreeMap<Noun, BlockSet>,
}

impl Structure {
    pub fn new() -> Structure {
        Structure::default()
    }

    /// Appends a block and returns its index.
    pub fn add_block(&mut self, id: impl Into<String>, size: Cardinal) -> usize {
        self.blocks.push(Block::new(id, size));
        self.blocks.len() - 1
    }

    pub fn all_blocks(&self) -> BlockSet {
        (0..self.blocks.len()).collect()
    }

    pub fn universe_size(&self) -> Cardinal {
        self.blocks.iter().map(|b| b.size).sum()
    }

    pub fn size_of(&self, set: &BlockSet) -> Cardinal {
        set.iter().map(|&i| self.blocks[i].size).sum()
    }

    pub fn extension(&self, p: &Noun) -> Result<&BlockSet, SemanticsError> {
        self.interp
            .get(p)
            .ok_or_else(|| SemanticsError::UnknownNoun(p.clone()))
    }

    pub fn card_of(&self, p: &Noun) -> Result<Cardinal, SemanticsError> {
        Ok(self.size_of(self.extension(p)?))
    }

    pub fn satisfies(&self, phi: &Sentence) -> Result<bool, SemanticsError> {
        let a = self.extension(&phi.left)?;
        let b = self.extension(&phi.right)?;
        Ok(match phi.form {
            Form::All => a.is_subset(b),
            Form::Some => !a.is_disjoint(b),
            Form::AtLeast => self.size_of(a) >= self.size_of(b),
            Form::More => self.size_of(a) > self.size_of(b),
        })
    }

    fn block_index(&self) -> BTreeMap<&str, usize> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.id.as_str(), i))
            .collect()
    }

    fn check_blocks(&self) -> Result<(), SemanticsError> {
        let mut seen = BTreeSet::new();
        for b in &self.blocks {
            if b.size.is_zero() {
                return Err(SemanticsError::EmptyBlock(b.id.clone()));
            }
            if !seen.insert(&b.id) {
                return Err(SemanticsError::DuplicateBlock(b.id.clone()));
            }
        }
        for set in self.interp.values() {
            if let Some(&i) = set.iter().find(|&&i| i >= self.blocks.len()) {
                return Err(SemanticsError::BlockIndex(i));
            }
        }
        Ok(())
    }
}

/// Disjoint sum of structures. Block ids are prefixed with the part index.
pub fn disjoint_sum(parts: &[Structure]) -> Structure {
    let mut out = Structure::new();
    for (k, part) in parts.iter().enumerate() {
        let offset = out.blocks.len();
        for b in &part.blocks {
            out.add_block(format!("{}.{}", k + 1, b.id), b.size);
        }
        for (noun, set) in &part.interp {
            out.interp
                .entry(noun.clone())
                .or_default()
                .extend(set.iter().map(|i| i + offset));
        }
    }
    out
}

/// A model: a structure whose interpretation is closed under complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicModel {
    structure: Structure,
    mode: Mode,
}

impl SymbolicModel {
    /// Validates block sizes, complement closure and (in infinite mode) the universe size.
    pub fn new(structure: Structure, mode: Mode) -> Result<SymbolicModel, SemanticsError> {
        structure.check_blocks()?;
        let all = structure.all_blocks();
        for (p, set) in &structure.interp {
            let comp = structure
                .interp
                .get(&p.complement())
                .ok_or_else(|| SemanticsError::UnknownNoun(p.complement()))?;
            if !set.is_disjoint(comp) || set.union(comp).count() != all.len() {
                return Err(SemanticsError::NotComplementClosed(p.clone()));
            }
        }
        let size = structure.universe_size();
        if mode == Mode::Infinite && !size.is_infinite() {
            return Err(SemanticsError::FiniteUniverse(size));
        }
        Ok(SymbolicModel { structure, mode })
    }

    /// Builds a model from the extensions of positive nouns; complements are filled in.
    pub fn from_positive(
        blocks: Vec<Block>,
        positive: BTreeMap<Noun, BlockSet>,
        mode: Mode,
    ) -> Result<SymbolicModel, SemanticsError> {
        let mut s = Structure {
            blocks,
            interp: BTreeMap::new(),
        };
        let all = s.all_blocks();
        for (p, set) in positive {
            let comp: BlockSet = all.difference(&set).copied().collect();
            s.interp.insert(p.complement(), comp);
            s.interp.insert(p, set);
        }
        SymbolicModel::new(s, mode)
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn into_structure(self) -> Structure {
        self.structure
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn blocks(&self) -> &[Block] {
        &self.structure.blocks
    }

    pub fn nouns(&self) -> impl Iterator<Item = &Noun> {
        self.structure.interp.keys()
    }

    pub fn extension(&self, p: &Noun) -> Result<&BlockSet, SemanticsError> {
        self.structure.extension(p)
    }

    pub fn universe_size(&self) -> Cardinal {
        self.structure.universe_size()
    }

    pub fn card_of(&self, p: &Noun) -> Result<Cardinal, SemanticsError> {
        self.structure.card_of(p)
    }

    pub fn satisfies(&self, phi: &Sentence) -> Result<bool, SemanticsError> {
        self.structure.satisfies(phi)
    }

    /// The sentences of `gamma` that fail in this model; empty means the model satisfies `gamma`.
    pub fn failures<'a, I>(&self, gamma: I) -> Result<Vec<Sentence>, SemanticsError>
    where
        I: IntoIterator<Item = &'a Sentence>,
    {
        let mut out = Vec::new();
        for s in gamma {
            if !self.satisfies(s)? {
                out.push(s.clone());
            }
        }
        Ok(out)
    }

    pub fn satisfies_all<'a, I>(&self, gamma: I) -> Result<bool, SemanticsError>
    where
        I: IntoIterator<Item = &'a Sentence>,
    {
        Ok(self.failures(gamma)?.is_empty())
    }

    /// Interprets a fresh noun (and its complement) by the given set; existing nouns are left alone.
    pub fn with_noun(mut self, p: &Noun, set: BlockSet) -> SymbolicModel {
        if !self.structure.interp.contains_key(p) {
            let comp = self.structure.all_blocks().difference(&set).copied().collect();
            self.structure.interp.insert(p.complement(), comp);
            self.structure.interp.insert(p.clone(), set);
        }
        self
    }

    pub fn max_aleph_index(&self) -> Option<u32> {
        self.blocks().iter().filter_map(|b| b.size.aleph_index()).max()
    }

    pub fn to_record(&self) -> ModelRecord {
        ModelRecord {
            mode: self.mode,
            blocks: self.structure.blocks.clone(),
            interp: self
                .structure
                .interp
                .iter()
                .map(|(n, set)| {
                    let ids = set
                        .iter()
                        .map(|&i| self.structure.blocks[i].id.clone())
                        .collect();
                    (n.to_string(), ids)
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &ModelRecord) -> Result<SymbolicModel, SemanticsError> {
        let s = Structure {
            blocks: rec.blocks.clone(),
            interp: BTreeMap::new(),
        };
        s.check_blocks()?;
        let index = s.block_index();
        let mut interp = BTreeMap::new();
        for (name, ids) in &rec.interp {
            let noun = Noun::parse(name).map_err(|_| SemanticsError::BadNoun(name.clone()))?;
            let mut set = BlockSet::new();
            for id in ids {
                let i = index
                    .get(id.as_str())
                    .ok_or_else(|| SemanticsError::UnknownBlock(id.clone()))?;
                set.insert(*i);
            }
            interp.insert(noun, set);
        }
        SymbolicModel::new(
            Structure {
                interp,
                ..s
            },
            rec.mode,
        )
    }

    /// Text rendering: a block table, then one line per noun.
    pub fn pretty(&self) -> String {
        let s = &self.structure;
        let mut out = String::new();
        let _ = writeln!(out, "universe: {} ({} blocks)", s.universe_size(), s.blocks.len());
        for b in &s.blocks {
            let _ = writeln!(out, "  {:<12} {}", b.id, b.size);
        }
        let width = s.interp.keys().map(|n| n.to_string().len()).max().unwrap_or(1);
        for (n, set) in &s.interp {
            let pad = width - n.to_string().len();
            let body = if set.is_empty() {
                "∅".to_string()
            } else {
                set.iter()
                    .map(|&i| s.blocks[i].id.as_str())
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            let _ = writeln!(
                out,
                "  ⟦{n}⟧{:pad$} = {body}    |{n}| = {}",
                "",
                s.size_of(set)
            );
        }
        out
    }
}

/// JSON shape of a model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelRecord {
    pub mode: Mode,
    pub blocks: Vec<Block>,
    pub interp: BTreeMap<String, Vec<String>>,
}
