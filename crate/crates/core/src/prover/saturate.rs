use std::collections::VecDeque;

use super::atoms::Atoms;
use super::proof::ProofTree;
use super::rules::Rule;
use crate::syntax::{Form, Noun, Sentence};

pub type FactId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Just {
    Hypothesis,
    Rule(Rule, [FactId; 2]),
}

/// The closure of a theory under the rules, over a fixed atom universe.
#[derive(Clone, Debug)]
pub struct Saturation {
    atoms: Atoms,
    n: usize,
    just: Vec<Option<Just>>,
    bottom: Option<(Rule, [FactId; 2])>,
    hypotheses: Vec<Sentence>,
    derived_count: usize,
}

fn form_index(f: Form) -> usize {
    match f {
        Form::All => 0,
        Form::Some => 1,
        Form::AtLeast => 2,
        Form::More => 3,
    }
}

const FORMS: [Form; 4] = Form::ALL_FORMS;

impl Saturation {
    /// Saturates `gamma` over `atoms_of(gamma) ∪ extra`.
    pub fn new<'a, I, E>(gamma: I, extra: E) -> Saturation
    where
        I: IntoIterator<Item = &'a Sentence>,
        E: IntoIterator<Item = Noun>,
    {
        let hypotheses: Vec<Sentence> = gamma.into_iter().cloned().collect();
        let nouns = hypotheses
            .iter()
            .flat_map(|s| [s.left.clone(), s.right.clone()])
            .chain(extra);
        let atoms = Atoms::new(nouns);
        let n = atoms.len();
        let mut sat = Saturation {
            atoms,
            n,
            just: vec![None; 4 * n * n],
            bottom: None,
            hypotheses,
            derived_count: 0,
        };
        sat.run();
        sat
    }

    pub fn atoms(&self) -> &Atoms {
        &self.atoms
    }

    pub fn hypotheses(&self) -> &[Sentence] {
        &self.hypotheses
    }

    pub fn is_consistent(&self) -> bool {
        self.bottom.is_none()
    }

    /// Number of derived sentences (including hypotheses and axioms).
    pub fn len(&self) -> usize {
        self.derived_count
    }

    pub fn is_empty(&self) -> bool {
        self.derived_count == 0
    }

    fn id(&self, f: Form, a: usize, b: usize) -> usize {
        (form_index(f) * self.n + a) * self.n + b
    }

    fn decode(&self, id: FactId) -> (Form, usize, usize) {
        let id = id as usize;
        let nn = self.n * self.n;
        (FORMS[id / nn], (id % nn) / self.n, id % self.n)
    }

    fn sentence(&self, id: FactId) -> Sentence {
        let (f, a, b) = self.decode(id);
        Sentence::new(f, self.atoms.noun(a).clone(), self.atoms.noun(b).clone())
    }

    /// Index-level membership in the derived set (ignores ex falso).
    pub fn has(&self, f: Form, a: usize, b: usize) -> bool {
        self.just[self.id(f, a, b)].is_some()
    }

    fn index_of(&self, s: &Sentence) -> Option<usize> {
        let a = self.atoms.index_of(&s.left)?;
        let b = self.atoms.index_of(&s.right)?;
        Some(self.id(s.form, a, b))
    }

    /// Whether `s` is in the derived set. Sentences over unknown nouns are not.
    pub fn holds(&self, s: &Sentence) -> bool {
        self.index_of(s).is_some_and(|i| self.just[i].is_some())
    }

    /// Whether `s` follows: it is derived, or the theory is inconsistent.
    pub fn entails(&self, s: &Sentence) -> bool {
        !self.is_consistent() || self.holds(s)
    }

    /// All derived sentences, sorted.
    pub fn derived(&self) -> Vec<Sentence> {
        let mut out: Vec<Sentence> = (0..self.just.len())
            .filter(|&i| self.just[i].is_some())
            .map(|i| self.sentence(i as FactId))
            .collect();
        out.sort();
        out
    }

    /// A proof tree for `s`. Under inconsistency, the root applies an ex falso rule.
    pub fn proof(&self, s: &Sentence) -> Option<ProofTree> {
        if let Some(i) = self.index_of(s) {
            if self.just[i].is_some() {
                return Some(self.tree(i as FactId));
            }
        }
        let (rule, [a, b]) = self.bottom?;
        Some(ProofTree::node(
            Some(s.clone()),
            rule.name(),
            vec![self.tree(a), self.tree(b)],
        ))
    }

    /// The derivation of the first contradiction found, with an absent conclusion.
    pub fn contradiction(&self) -> Option<ProofTree> {
        let (rule, [a, b]) = self.bottom?;
        Some(ProofTree::node(
            None,
            rule.name(),
            vec![self.tree(a), self.tree(b)],
        ))
    }

    fn tree(&self, id: FactId) -> ProofTree {
        let conclusion = Some(self.sentence(id));
        match self.just[id as usize].expect("fact in derived set") {
            Just::Hypothesis => ProofTree::node(conclusion, "hypothesis", vec![]),
            Just::Rule(rule, prem) => {
                let children = prem[..rule.arity()].iter().map(|&p| self.tree(p)).collect();
                ProofTree::node(conclusion, rule.name(), children)
            }
        }
    }

    fn run(&mut self) {
        let mut queue = VecDeque::new();
        for i in 0..self.n {
            self.add(&mut queue, Form::All, i, i, Just::Rule(Rule::Axiom, [0, 0]));
        }
        for k in 0..self.hypotheses.len() {
            let s = &self.hypotheses[k];
            let a = self.atoms.index_of(&s.left).expect("hypothesis atom");
            let b = self.atoms.index_of(&s.right).expect("hypothesis atom");
            let f = s.form;
            self.add(&mut queue, f, a, b, Just::Hypothesis);
        }
        while let Some(id) = queue.pop_front() {
            self.process(&mut queue, id);
        }
    }

    fn add(&mut self, queue: &mut VecDeque<FactId>, f: Form, a: usize, b: usize, j: Just) {
        let id = self.id(f, a, b);
        if self.just[id].is_none() {
            self.just[id] = Some(j);
            self.derived_count += 1;
            queue.push_back(id as FactId);
        }
    }

    fn fid(&self, f: Form, a: usize, b: usize) -> FactId {
        self.id(f, a, b) as FactId
    }

    fn contradiction_found(&mut self, rule: Rule, p1: FactId, p2: FactId) {
        if self.bottom.is_none() {
            self.bottom = Some((rule, [p1, p2]));
        }
    }

    /// Fires every rule instance that uses `id` together with facts already present.
    fn process(&mut self, q: &mut VecDeque<FactId>, id: FactId) {
        use Form::*;
        let (form, a, b) = self.decode(id);
        let n = self.n;
        let c = Atoms::comp;
        let r = |rule: Rule, other: FactId| Just::Rule(rule, [id, other]);
        let r_rev = |rule: Rule, other: FactId| Just::Rule(rule, [other, id]);
        let r1 = |rule: Rule| Just::Rule(rule, [id, 0]);
        match form {
            All => {
                // barbara, popped as ∀(n,p)
                for z in 0..n {
                    if self.has(All, b, z) {
                        let o = self.fid(All, b, z);
                        self.add(q, All, a, z, r(Rule::Barbara, o));
                    }
                }
                // barbara, popped as ∀(p,q)
                for z in 0..n {
                    if self.has(All, z, a) {
                        let o = self.fid(All, z, a);
                        self.add(q, All, z, b, r_rev(Rule::Barbara, o));
                    }
                }
                // darii, popped as ∀(n,q)
                for z in 0..n {
                    if self.has(Some, z, a) {
                        let o = self.fid(Some, z, a);
                        self.add(q, Some, z, b, r_rev(Rule::Darii, o));
                    }
                }
                self.add(q, All, c(b), c(a), r1(Rule::Anti));
                if b == c(a) {
                    for z in 0..n {
                        self.add(q, All, a, z, r1(Rule::Zero));
                    }
                }
                if a == c(b) {
                    for z in 0..n {
                        self.add(q, All, z, b, r1(Rule::One));
                    }
                    self.add(q, More, b, a, r1(Rule::NonEmptyMore));
                }
                self.add(q, AtLeast, b, a, r1(Rule::SubsetSize));
                // x, popped as ∀(q,p̄): needs ∃(p,q) with p = b̄, q = a
                if self.has(Some, c(b), a) {
                    let o = self.fid(Some, c(b), a);
                    self.contradiction_found(Rule::X, o, id);
                }
            }
            Some => {
                self.add(q, Some, a, a, r1(Rule::Some));
                self.add(q, Some, b, a, r1(Rule::Conversion));
                for z in 0..n {
                    if self.has(All, b, z) {
                        let o = self.fid(All, b, z);
                        self.add(q, Some, a, z, r(Rule::Darii, o));
                    }
                }
                if a == b {
                    for z in 0..n {
                        if self.has(AtLeast, z, a) {
                            let o = self.fid(AtLeast, z, a);
                            self.add(q, Some, z, z, r(Rule::CardExists, o));
                        }
                    }
                }
                if self.has(All, b, c(a)) {
                    let o = self.fid(All, b, c(a));
                    self.contradiction_found(Rule::X, id, o);
                }
            }
            AtLeast => {
                for z in 0..n {
                    if self.has(AtLeast, b, z) {
                        let o = self.fid(AtLeast, b, z);
                        self.add(q, AtLeast, a, z, r(Rule::CardTrans, o));
                    }
                }
                for z in 0..n {
                    if self.has(AtLeast, z, a) {
                        let o = self.fid(AtLeast, z, a);
                        self.add(q, AtLeast, z, b, r_rev(Rule::CardTrans, o));
                    }
                }
                if self.has(Some, b, b) {
                    let o = self.fid(Some, b, b);
                    self.add(q, Some, a, a, r_rev(Rule::CardExists, o));
                }
                // more-left, popped as ∃≥(p,q)
                for z in 0..n {
                    if self.has(More, z, a) {
                        let o = self.fid(More, z, a);
                        self.add(q, More, z, b, r_rev(Rule::MoreLeft, o));
                    }
                }
                // more-right, popped as ∃≥(n,p)
                for z in 0..n {
                    if self.has(More, b, z) {
                        let o = self.fid(More, b, z);
                        self.add(q, More, a, z, r(Rule::MoreRight, o));
                    }
                }
                if self.has(More, b, a) {
                    let o = self.fid(More, b, a);
                    self.contradiction_found(Rule::XCard, o, id);
                }
                if b == c(a) {
                    self.add(q, Some, a, a, r1(Rule::NonEmpty));
                }
                if self.has(AtLeast, a, c(b)) {
                    let o = self.fid(AtLeast, a, c(b));
                    for z in 0..n {
                        self.add(q, AtLeast, a, z, r(Rule::Up, o));
                    }
                }
            }
            More => {
                self.add(q, AtLeast, a, b, r1(Rule::MoreAtLeast));
                for z in 0..n {
                    if self.has(AtLeast, b, z) {
                        let o = self.fid(AtLeast, b, z);
                        self.add(q, More, a, z, r(Rule::MoreLeft, o));
                    }
                }
                for z in 0..n {
                    if self.has(AtLeast, z, a) {
                        let o = self.fid(AtLeast, z, a);
                        self.add(q, More, z, b, r_rev(Rule::MoreRight, o));
                    }
                }
                self.add(q, Some, a, c(b), r1(Rule::MoreSome));
                if self.has(AtLeast, b, a) {
                    let o = self.fid(AtLeast, b, a);
                    self.contradiction_found(Rule::XCard, id, o);
                }
                for z in 0..n {
                    self.add(q, AtLeast, c(b), z, r1(Rule::WeakMoreAnti));
                }
            }
        }
    }
}
