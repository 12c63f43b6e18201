//! Bounded brute-force semantics.
//!
//! A model over k base nouns is determined, up to the truth of every sentence, by
//! the cardinality of each of its 2^k Boolean atoms. The oracle enumerates all
//! such assignments from a finite menu of cardinals and evaluates sentences on
//! them directly. It is used to cross-check the prover and the countermodel
//! builder at small scale; "entailed up to bound" says nothing about larger models.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::countermodel::{countermodel, Countermodel};
use crate::prover;
use crate::semantics::{BlockSet, Cardinal, Mode, Structure, SymbolicModel};
use crate::syntax::{Form, Noun, Sentence};

/// Largest number of base nouns the oracle accepts.
pub const MAX_BASE_NOUNS: usize = 4;

/// Largest number of atom assignments the oracle will scan.
pub const MAX_ASSIGNMENTS: u128 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBounds {
    pub max_aleph: u32,
    pub finite_sizes: BTreeSet<u64>,
    pub base_nouns: Vec<String>,
}

impl OracleBounds {
    /// Alephs up to ℵ2 and finite sizes {0,1,2}.
    pub fn new<I, S>(base_nouns: I) -> OracleBounds
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut bases: Vec<String> = base_nouns.into_iter().map(Into::into).collect();
        bases.sort();
        bases.dedup();
        OracleBounds {
            max_aleph: 2,
            finite_sizes: BTreeSet::from([0, 1, 2]),
            base_nouns: bases,
        }
    }

    /// Default bounds over the bases occurring in `gamma` and `phi`.
    pub fn covering(gamma: &[Sentence], phi: Option<&Sentence>) -> OracleBounds {
        let bases: BTreeSet<String> = gamma
            .iter()
            .chain(phi)
            .flat_map(|s| s.nouns())
            .map(|n| n.base().to_string())
            .collect();
        OracleBounds::new(bases)
    }

    pub fn with_max_aleph(mut self, k: u32) -> OracleBounds {
        self.max_aleph = k;
        self
    }

    pub fn with_finite_sizes<I: IntoIterator<Item = u64>>(mut self, sizes: I) -> OracleBounds {
        self.finite_sizes = sizes.into_iter().collect();
        self
    }

    /// The cardinals an atom may take, in increasing order.
    pub fn menu(&self) -> Vec<Cardinal> {
        self.finite_sizes
            .iter()
            .map(|&n| Cardinal::Finite(n))
            .chain((0..=self.max_aleph).map(Cardinal::Aleph))
            .collect()
    }

    /// Size of the raw search space: menu size to the power of the atom count.
    pub fn assignment_count(&self) -> u128 {
        let atoms = 1u32 << self.base_nouns.len();
        (self.menu().len() as u128).saturating_pow(atoms)
    }

    fn check(&self) -> Result<(), OracleError> {
        if self.base_nouns.len() > MAX_BASE_NOUNS {
            return Err(OracleError::TooManyBases(self.base_nouns.len()));
        }
        let count = self.assignment_count();
        if count > MAX_ASSIGNMENTS {
            return Err(OracleError::TooManyAssignments(count));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} base nouns exceeds the oracle limit of {MAX_BASE_NOUNS}")]
    TooManyBases(usize),
    #[error("{0} atom assignments exceeds the oracle limit of {MAX_ASSIGNMENTS}; shrink the size menu")]
    TooManyAssignments(u128),
    #[error("noun {0} is outside the oracle bounds")]
    UnknownNoun(Noun),
}

/// Atom `a` lies inside base `j` when bit `j` of `a` is set.
#[derive(Clone, Debug)]
struct Algebra {
    bases: Vec<String>,
}

impl Algebra {
    fn atoms(&self) -> usize {
        1 << self.bases.len()
    }

    /// The atoms inside a noun, as a bitmask.
    fn mask(&self, p: &Noun) -> Result<u16, OracleError> {
        let j = self
            .bases
            .iter()
            .position(|b| b == p.base())
            .ok_or_else(|| OracleError::UnknownNoun(p.clone()))?;
        let mut m = 0u16;
        for a in 0..self.atoms() {
            if ((a >> j) & 1 == 1) != p.is_negated() {
                m |= 1 << a;
            }
        }
        Ok(m)
    }

    fn atom_id(&self, a: usize) -> String {
        self.bases
            .iter()
            .enumerate()
            .map(|(j, b)| if (a >> j) & 1 == 1 { b.clone() } else { format!("~{b}") })
            .collect::<Vec<_>>()
            .join("&")
    }

    fn masks(&self) -> Vec<u16> {
        self.nouns()
            .iter()
            .map(|p| self.mask(p).expect("noun of the algebra"))
            .collect()
    }

    fn nouns(&self) -> Vec<Noun> {
        self.bases
            .iter()
            .flat_map(|b| [Noun::pos(b), Noun::neg(b)])
            .collect()
    }
}

/// What sentence truth depends on: the nonempty atoms and each noun's size.
struct Profile {
    nonempty: u16,
    cards: Vec<Cardinal>,
}

impl Profile {
    fn new(masks: &[u16], sizes: &[Cardinal]) -> Profile {
        let nonempty = (0..sizes.len())
            .filter(|&a| !sizes[a].is_zero())
            .fold(0u16, |m, a| m | 1 << a);
        let cards = masks
            .iter()
            .map(|&m| {
                (0..sizes.len())
                    .filter(|a| (m >> a) & 1 == 1)
                    .map(|a| sizes[a])
                    .sum()
            })
            .collect();
        Profile { nonempty, cards }
    }
}

/// A sentence as atom masks plus noun positions in [`Algebra::nouns`].
#[derive(Clone, Copy, Debug)]
struct Compiled {
    form: Form,
    left: u16,
    right: u16,
    li: usize,
    ri: usize,
}

impl Compiled {
    fn new(alg: &Algebra, s: &Sentence) -> Result<Compiled, OracleError> {
        let pos = |p: &Noun| alg.nouns().iter().position(|x| x == p);
        Ok(Compiled {
            form: s.form,
            left: alg.mask(&s.left)?,
            right: alg.mask(&s.right)?,
            li: pos(&s.left).expect("mask found the base"),
            ri: pos(&s.right).expect("mask found the base"),
        })
    }

    fn eval(&self, p: &Profile) -> bool {
        match self.form {
            Form::All => p.nonempty & self.left & !self.right == 0,
            Form::Some => p.nonempty & self.left & self.right != 0,
            Form::AtLeast => p.cards[self.li] >= p.cards[self.ri],
            Form::More => p.cards[self.li] > p.cards[self.ri],
        }
    }
}

/// All size assignments to the atoms, atom 0 varying fastest.
struct Assignments {
    menu: Vec<Cardinal>,
    digits: Vec<usize>,
    mode: Mode,
    done: bool,
}

impl Assignments {
    fn new(bounds: &OracleBounds, mode: Mode) -> Assignments {
        let menu = bounds.menu();
        let k = bounds.base_nouns.len();
        Assignments {
            done: k == 0 || menu.is_empty(),
            digits: vec![0; 1 << k],
            menu,
            mode,
        }
    }

    fn advance(&mut self) {
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < self.menu.len() {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

impl Iterator for Assignments {
    type Item = Vec<Cardinal>;

    fn next(&mut self) -> Option<Vec<Cardinal>> {
        while !self.done {
            let sizes: Vec<Cardinal> = self.digits.iter().map(|&d| self.menu[d]).collect();
            self.advance();
            if self.mode == Mode::Unrestricted || sizes.iter().any(|c| c.is_infinite()) {
                return Some(sizes);
            }
        }
        None
    }
}

fn to_model(alg: &Algebra, sizes: &[Cardinal], mode: Mode) -> SymbolicModel {
    let mut s = Structure::new();
    let mut index = BTreeMap::new();
    for (a, &c) in sizes.iter().enumerate() {
        if !c.is_zero() {
            index.insert(a, s.add_block(alg.atom_id(a), c));
        }
    }
    for p in alg.nouns() {
        let m = alg.mask(&p).expect("noun of the algebra");
        let set: BlockSet = index
            .iter()
            .filter(|(a, _)| (m >> **a) & 1 == 1)
            .map(|(_, &b)| b)
            .collect();
        s.interp.insert(p, set);
    }
    SymbolicModel::new(s, mode).expect("atom models are complement closed")
}

/// Every atom model within `bounds`; atoms of size 0 get no block.
///
/// With no base nouns the enumeration is empty.
pub fn enumerate_models(
    bounds: &OracleBounds,
    mode: Mode,
) -> Result<impl Iterator<Item = SymbolicModel>, OracleError> {
    bounds.check()?;
    let alg = Algebra {
        bases: bounds.base_nouns.clone(),
    };
    Ok(Assignments::new(bounds, mode).map(move |sizes| to_model(&alg, &sizes, mode)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    EntailedUpToBound,
    Countermodel(SymbolicModel),
}

impl OracleVerdict {
    pub fn is_entailed(&self) -> bool {
        matches!(self, OracleVerdict::EntailedUpToBound)
    }

    pub fn countermodel(&self) -> Option<&SymbolicModel> {
        match self {
            OracleVerdict::Countermodel(m) => Some(m),
            OracleVerdict::EntailedUpToBound => None,
        }
    }
}

/// The first enumerated model of `gamma` in which `phi` fails, in infinite mode.
pub fn oracle_entails(
    gamma: &[Sentence],
    phi: &Sentence,
    bounds: &OracleBounds,
) -> Result<OracleVerdict, OracleError> {
    oracle_entails_in(gamma, phi, bounds, Mode::Infinite)
}

pub fn oracle_entails_in(
    gamma: &[Sentence],
    phi: &Sentence,
    bounds: &OracleBounds,
    mode: Mode,
) -> Result<OracleVerdict, OracleError> {
    bounds.check()?;
    let alg = Algebra {
        bases: bounds.base_nouns.clone(),
    };
    let g: Vec<Compiled> = gamma
        .iter()
        .map(|s| Compiled::new(&alg, s))
        .collect::<Result<_, _>>()?;
    let f = Compiled::new(&alg, phi)?;
    let masks = alg.masks();
    for sizes in Assignments::new(bounds, mode) {
        let p = Profile::new(&masks, &sizes);
        if g.iter().all(|c| c.eval(&p)) && !f.eval(&p) {
            return Ok(OracleVerdict::Countermodel(to_model(&alg, &sizes, mode)));
        }
    }
    Ok(OracleVerdict::EntailedUpToBound)
}

/// Whether some enumerated model satisfies `gamma`.
pub fn oracle_model_of(
    gamma: &[Sentence],
    bounds: &OracleBounds,
    mode: Mode,
) -> Result<Option<SymbolicModel>, OracleError> {
    bounds.check()?;
    let alg = Algebra {
        bases: bounds.base_nouns.clone(),
    };
    let g: Vec<Compiled> = gamma
        .iter()
        .map(|s| Compiled::new(&alg, s))
        .collect::<Result<_, _>>()?;
    let masks = alg.masks();
    Ok(Assignments::new(bounds, mode)
        .find(|sizes| {
            let p = Profile::new(&masks, sizes);
            g.iter().all(|c| c.eval(&p))
        })
        .map(|sizes| to_model(&alg, &sizes, mode)))
}

/// Truth values of every sentence over the bases, in every enumerated model.
///
/// Sentence `i` is stored as a bitset over models, so a theory's models are an
/// intersection of rows and entailment is a subset test.
pub struct TruthTable {
    alg: Algebra,
    mode: Mode,
    sentences: Vec<Sentence>,
    index: BTreeMap<Sentence, usize>,
    menu: Vec<Cardinal>,
    /// Each model as a mixed-radix number over the menu, atom 0 least significant.
    models: Vec<u64>,
    rows: Vec<Vec<u64>>,
}

impl TruthTable {
    pub fn new(bounds: &OracleBounds, mode: Mode) -> Result<TruthTable, OracleError> {
        bounds.check()?;
        let alg = Algebra {
            bases: bounds.base_nouns.clone(),
        };
        let nouns = alg.nouns();
        let mut sentences = Vec::new();
        for form in [Form::All, Form::Some, Form::AtLeast, Form::More] {
            for p in &nouns {
                for q in &nouns {
                    sentences.push(Sentence::new(form, p.clone(), q.clone()));
                }
            }
        }
        let compiled: Vec<Compiled> = sentences
            .iter()
            .map(|s| Compiled::new(&alg, s))
            .collect::<Result<_, _>>()?;
        let menu = bounds.menu();
        let mut models = Vec::new();
        let mut rows: Vec<Vec<u64>> = vec![Vec::new(); sentences.len()];
        let masks = alg.masks();
        for (m, sizes) in Assignments::new(bounds, mode).enumerate() {
            models.push(Self::encode(&menu, &sizes));
            if m % 64 == 0 {
                rows.iter_mut().for_each(|r| r.push(0));
            }
            let p = Profile::new(&masks, &sizes);
            for (i, c) in compiled.iter().enumerate() {
                if c.eval(&p) {
                    rows[i][m / 64] |= 1 << (m % 64);
                }
            }
        }
        let index = sentences
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(TruthTable {
            alg,
            mode,
            sentences,
            index,
            menu,
            models,
            rows,
        })
    }

    fn encode(menu: &[Cardinal], sizes: &[Cardinal]) -> u64 {
        sizes.iter().rev().fold(0u64, |acc, c| {
            acc * menu.len() as u64 + menu.iter().position(|x| x == c).expect("size from the menu") as u64
        })
    }

    fn decode(&self, mut code: u64) -> Vec<Cardinal> {
        let radix = self.menu.len() as u64;
        (0..self.alg.atoms())
            .map(|_| {
                let d = code % radix;
                code /= radix;
                self.menu[d as usize]
            })
            .collect()
    }

    /// Every sentence over the bases, grouped by form.
    pub fn sentences(&self) -> &[Sentence] {
        &self.sentences
    }

    pub fn model_count(&self) -> usize {
        self.models.len()
    }

    fn row(&self, s: &Sentence) -> Result<&[u64], OracleError> {
        let i = self.index.get(s).ok_or_else(|| {
            let bad = s
                .nouns()
                .into_iter()
                .find(|n| !self.alg.bases.iter().any(|b| b == n.base()))
                .unwrap_or(&s.left);
            OracleError::UnknownNoun(bad.clone())
        })?;
        Ok(&self.rows[*i])
    }

    /// The enumerated models of `gamma`.
    pub fn satisfying(&self, gamma: &[Sentence]) -> Result<ModelSet, OracleError> {
        self.models_of(gamma).map(ModelSet)
    }

    /// Whether `phi` is true in every model of `set`.
    pub fn holds_throughout(&self, set: &ModelSet, phi: &Sentence) -> Result<bool, OracleError> {
        Ok(set.0.iter().zip(self.row(phi)?).all(|(a, r)| a & !r == 0))
    }

    fn models_of(&self, gamma: &[Sentence]) -> Result<Vec<u64>, OracleError> {
        let words = self.models.len().div_ceil(64);
        let mut acc = vec![u64::MAX; words];
        if let Some(last) = acc.last_mut() {
            let tail = self.models.len() % 64;
            if tail != 0 {
                *last = (1u64 << tail) - 1;
            }
        }
        for s in gamma {
            for (a, r) in acc.iter_mut().zip(self.row(s)?) {
                *a &= r;
            }
        }
        Ok(acc)
    }

    fn first(bits: &[u64]) -> Option<usize> {
        bits.iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn model(&self, m: usize) -> SymbolicModel {
        to_model(&self.alg, &self.decode(self.models[m]), self.mode)
    }

    pub fn model_of(&self, gamma: &[Sentence]) -> Result<Option<SymbolicModel>, OracleError> {
        Ok(Self::first(&self.models_of(gamma)?).map(|m| self.model(m)))
    }

    pub fn verdict(&self, gamma: &[Sentence], phi: &Sentence) -> Result<OracleVerdict, OracleError> {
        let mut bits = self.models_of(gamma)?;
        for (a, r) in bits.iter_mut().zip(self.row(phi)?) {
            *a &= !r;
        }
        Ok(match Self::first(&bits) {
            Some(m) => OracleVerdict::Countermodel(self.model(m)),
            None => OracleVerdict::EntailedUpToBound,
        })
    }
}

/// A set of models of a [`TruthTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSet(Vec<u64>);

impl ModelSet {
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Prover and oracle verdicts on one question.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub prover_verdict: bool,
    pub oracle_verdict: OracleVerdict,
    pub agreement: bool,
    /// The constructed countermodel, when the prover says no.
    pub artifacts: Option<Result<Countermodel, String>>,
}

impl CrossCheck {
    pub fn render(&self) -> String {
        let prover = if self.prover_verdict { "entailed" } else { "not entailed" };
        let oracle = match &self.oracle_verdict {
            OracleVerdict::EntailedUpToBound => "entailed up to bound",
            OracleVerdict::Countermodel(_) => "countermodel found",
        };
        let agree = if self.agreement { "agree" } else { "DISAGREE" };
        format!("prover: {prover}\noracle: {oracle}\n{agree}")
    }
}

pub fn cross_check(
    gamma: &[Sentence],
    phi: &Sentence,
    bounds: &OracleBounds,
) -> Result<CrossCheck, OracleError> {
    let verdict = oracle_entails(gamma, phi, bounds)?;
    Ok(judge(gamma, phi, verdict))
}

/// [`cross_check`] against a precomputed table.
pub fn cross_check_with(
    table: &TruthTable,
    gamma: &[Sentence],
    phi: &Sentence,
) -> Result<CrossCheck, OracleError> {
    let verdict = table.verdict(gamma, phi)?;
    Ok(judge(gamma, phi, verdict))
}

fn judge(gamma: &[Sentence], phi: &Sentence, oracle_verdict: OracleVerdict) -> CrossCheck {
    let prover_verdict = prover::entails(gamma, phi);
    let artifacts = (!prover_verdict).then(|| countermodel(gamma, phi).map_err(|e| e.to_string()));
    let agreement = if prover_verdict {
        oracle_verdict.is_entailed()
    } else {
        !oracle_verdict.is_entailed() || matches!(artifacts, Some(Ok(_)))
    };
    CrossCheck {
        prover_verdict,
        oracle_verdict,
        agreement,
        artifacts,
    }
}
