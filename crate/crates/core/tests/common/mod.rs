//! Fixtures shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use syllogistic::prover::{self, ProofTree, Rule};
use syllogistic::semantics::Block;
use syllogistic::{parse, BlockSet, Cardinal, Form, Mode, Noun, Sentence, SymbolicModel};

pub const FIG7: &str = include_str!("../../../../theories/fig7.syl");

pub fn th(text: &str) -> Vec<Sentence> {
    parse(text).expect("fixture parses").sentences
}

pub fn s(text: &str) -> Sentence {
    Sentence::parse(text).expect("fixture parses")
}

pub fn n(token: &str) -> Noun {
    Noun::parse(token).expect("fixture noun")
}

pub fn fig7() -> Vec<Sentence> {
    th(FIG7)
}

/// Builds a model from block sizes and the extensions of positive nouns.
pub fn model(blocks: &[(&str, Cardinal)], positive: &[(&str, &[&str])]) -> SymbolicModel {
    let index: BTreeMap<&str, usize> = blocks.iter().enumerate().map(|(i, (id, _))| (*id, i)).collect();
    let bs = blocks.iter().map(|(id, c)| Block::new(*id, *c)).collect();
    let ext = positive
        .iter()
        .map(|(p, ids)| {
            let set: BlockSet = ids.iter().map(|id| index[id]).collect();
            (Noun::pos(p), set)
        })
        .collect();
    SymbolicModel::from_positive(bs, ext, Mode::Infinite).expect("fixture model is well formed")
}

/// The hand-made model printed alongside the 17-sentence running example.
///
/// φ1..φ5 are the unit witnesses for ∃(d,c̄), ∃(ē,f), ∃(ē,f̄), ∃(c,e), ∃(c,f).
pub fn fig7_model() -> SymbolicModel {
    let a0 = Cardinal::ALEPH_0;
    let a1 = Cardinal::Aleph(1);
    let one = Cardinal::ONE;
    model(
        &[
            ("A1", a0),
            ("A2", a0),
            ("B1", a1),
            ("B2", a1),
            ("B3", a1),
            ("phi1", one),
            ("phi2", one),
            ("phi3", one),
            ("phi4", one),
            ("phi5", one),
        ],
        &[
            ("a", &[]),
            ("b", &[]),
            ("c", &["A1", "phi4", "phi5"]),
            ("d", &["A1", "A2", "phi1", "phi4", "phi5"]),
            ("e", &["B1", "phi4"]),
            ("f", &["B1", "B2", "phi2", "phi4", "phi5"]),
            ("g", &["B3", "phi1", "phi2", "phi3", "phi4", "phi5"]),
        ],
    )
}

/// The atoms of the running example, positive before negative.
pub fn fig7_atoms() -> Vec<Noun> {
    "abcdefg"
        .chars()
        .flat_map(|c| {
            let b = c.to_string();
            [Noun::pos(&b), Noun::neg(&b)]
        })
        .collect()
}

fn pairs(xs: &[&str], ys: &[&str]) -> Vec<(Noun, Noun)> {
    let mut out = Vec::new();
    for x in xs {
        for y in ys {
            out.push((n(x), n(y)));
        }
    }
    out
}

fn all_but(skip: &[&str]) -> Vec<String> {
    fig7_atoms()
        .into_iter()
        .map(|x| x.to_string())
        .filter(|x| !skip.contains(&x.as_str()))
        .collect()
}

const WIDE: [&str; 8] = ["~a", "~b", "~c", "~d", "e", "~e", "f", "~f"];

/// Non-reflexive ≤ pairs, which the figure lists completely.
pub fn fig7_leq() -> Vec<(Noun, Noun)> {
    let every = all_but(&[]);
    let every: Vec<&str> = every.iter().map(String::as_str).collect();
    let mut out = pairs(&["a"], &every);
    out.extend(pairs(&every, &["~a"]));
    out.extend(pairs(&["c"], &["d"]));
    out.extend(pairs(&["e"], &["f"]));
    out.extend(pairs(&["~d"], &["~c"]));
    out.extend(pairs(&["~f"], &["~e"]));
    out.retain(|(x, y)| x != y);
    out.sort();
    out.dedup();
    out
}

/// ≤c pairs beyond those of ≤.
pub fn fig7_leqc() -> Vec<(Noun, Noun)> {
    let every = all_but(&[]);
    let every: Vec<&str> = every.iter().map(String::as_str).collect();
    let mut out = pairs(&["b"], &["c", "g"]);
    out.extend(pairs(&["c"], &["d", "e"]));
    out.extend(pairs(&["d"], &["c"]));
    out.extend(pairs(&["e"], &["~e", "f"]));
    out.extend(pairs(&["~e"], &["e"]));
    out.extend(pairs(&["f"], &["e", "~f"]));
    out.extend(pairs(&["~f"], &["f"]));
    out.extend(pairs(&every, &WIDE));
    out
}

pub fn fig7_ltc() -> Vec<(Noun, Noun)> {
    let rest = all_but(&["a"]);
    let rest: Vec<&str> = rest.iter().map(String::as_str).collect();
    let mut out = pairs(&["a"], &rest);
    out.extend(pairs(&["b"], &["c", "g"]));
    out.extend(pairs(&["c"], &["e", "~e", "f", "~f"]));
    out
}

/// The <more pairs stated with an explicit target list.
pub fn fig7_ltmore() -> Vec<(Noun, Noun)> {
    let mut out = pairs(&["a", "b"], &["c", "d"]);
    out.extend(pairs(&["a", "b", "c", "d"], &WIDE));
    out
}

pub fn fig7_equivc() -> Vec<(Noun, Noun)> {
    let mut out = pairs(&["c"], &["d"]);
    out.extend(pairs(&["e", "~e", "f", "~f"], &["e", "~e", "f", "~f"]));
    out
}

/// A rule that is sound on finite models only, with its counterexample over ω.
pub struct FiniteOnlyRule {
    pub name: &'static str,
    pub premises: Vec<Sentence>,
    pub conclusion: Sentence,
    pub model: SymbolicModel,
}

/// The six finite-only rules. Blocks stand for pieces of ω: "0" is {0},
/// "rest" is ω∖{0} and so on.
///
/// For card-mix and card-anti the roles of p and q in the printed counterexample
/// are swapped; as printed, a premise fails.
pub fn finite_only_rules() -> Vec<FiniteOnlyRule> {
    let one = Cardinal::ONE;
    let w = Cardinal::ALEPH_0;
    let zero_rest = [("0", one), ("rest", w)];
    vec![
        FiniteOnlyRule {
            name: "card-mix",
            premises: th("all p q\natleast p q"),
            conclusion: s("all q p"),
            model: model(&zero_rest, &[("p", &["rest"]), ("q", &["0", "rest"])]),
        },
        FiniteOnlyRule {
            name: "more",
            premises: th("all q p\nsome p ~q"),
            conclusion: s("more p q"),
            model: model(&zero_rest, &[("p", &["0", "rest"]), ("q", &["rest"])]),
        },
        FiniteOnlyRule {
            name: "more-anti",
            premises: th("more q p"),
            conclusion: s("more ~p ~q"),
            model: model(
                &[("0", one), ("1", one), ("rest", w)],
                &[("p", &["0"]), ("q", &["0", "1"])],
            ),
        },
        FiniteOnlyRule {
            name: "card-anti",
            premises: th("atleast p q"),
            conclusion: s("atleast ~q ~p"),
            model: model(&zero_rest, &[("p", &["rest"]), ("q", &["0", "rest"])]),
        },
        FiniteOnlyRule {
            name: "strict-half",
            premises: th("more p ~p\natleast ~q q"),
            conclusion: s("more p q"),
            model: model(
                &[("evens", w), ("odds", w)],
                &[("p", &["evens", "odds"]), ("q", &["evens"])],
            ),
        },
        FiniteOnlyRule {
            name: "maj",
            premises: th("atleast p ~p\natleast q ~q\nsome ~p ~q"),
            conclusion: s("some p q"),
            model: model(
                &[("3n", w), ("3n+1", w), ("3n+2", w)],
                &[("p", &["3n"]), ("q", &["3n+1"])],
            ),
        },
    ]
}

/// A worked derivation: the goal (None for a contradiction) and a rule the proof must use.
pub struct Worked {
    pub name: &'static str,
    pub gamma: Vec<Sentence>,
    pub goal: Option<Sentence>,
    pub uses: &'static str,
}

pub fn worked_examples() -> Vec<Worked> {
    vec![
        Worked {
            name: "Example 1",
            gamma: th("all ~x x"),
            goal: Some(s("some x x")),
            uses: "non-empty",
        },
        Worked {
            name: "Example 2",
            gamma: th("atleast p ~p"),
            goal: Some(s("atleast p q")),
            uses: "up",
        },
        Worked {
            name: "Example 3",
            gamma: th("atleast p ~p\natleast q p"),
            goal: Some(s("atleast q x")),
            uses: "card-trans",
        },
        Worked {
            name: "Example 4",
            gamma: th("atleast p ~p\nmore x q"),
            goal: Some(s("more p q")),
            uses: "more-right",
        },
        Worked {
            name: "Example 5",
            gamma: th("more p ~p\natleast ~p ~q"),
            goal: Some(s("more q ~q")),
            uses: "weak-more-anti",
        },
        Worked {
            name: "Example 6",
            gamma: th("atleast p ~p\nmore q ~q"),
            goal: Some(s("some p q")),
            uses: "more-some",
        },
        Worked {
            name: "Example 7",
            gamma: th("some p p\nmore q ~q"),
            goal: Some(s("some q q")),
            uses: "card-∃",
        },
        Worked {
            name: "Example 8",
            gamma: th("more p x\nmore q ~x"),
            goal: None,
            uses: "x-card",
        },
        Worked {
            name: "Example 9",
            gamma: th("atleast p ~p\nmore q p"),
            goal: None,
            uses: "x-card",
        },
    ]
}

fn hyp(text: &str) -> ProofTree {
    ProofTree::hypothesis(s(text))
}

fn step(rule: Rule, text: &str, children: Vec<ProofTree>) -> ProofTree {
    ProofTree::step(rule, s(text), children)
}

/// The two printed derivations of ∃(x,x) from ∀(x̄,x).
pub fn example1_trees() -> [ProofTree; 2] {
    [
        step(
            Rule::NonEmpty,
            "some x x",
            vec![step(Rule::SubsetSize, "atleast x ~x", vec![hyp("all ~x x")])],
        ),
        step(
            Rule::MoreSome,
            "some x x",
            vec![step(Rule::NonEmptyMore, "more x ~x", vec![hyp("all ~x x")])],
        ),
    ]
}

/// ∃(p,p), ∃>(q,q̄) ⊢ ∃(q,q) through (card-∃), the route taken by the printed derivation.
pub fn example7_tree() -> ProofTree {
    let qq = step(Rule::SubsetSize, "atleast q q", vec![step(Rule::Axiom, "all q q", vec![])]);
    let qqbar = step(Rule::MoreAtLeast, "atleast q ~q", vec![hyp("more q ~q")]);
    step(
        Rule::CardExists,
        "some q q",
        vec![hyp("some p p"), step(Rule::Up, "atleast q p", vec![qq, qqbar])],
    )
}

/// `len` nouns x0 > x1 > ... as a chain of strict comparisons.
pub fn chain(len: usize) -> Vec<Sentence> {
    (0..len)
        .map(|i| Sentence::more(Noun::pos(&format!("x{i}")), Noun::pos(&format!("x{}", i + 1))))
        .collect()
}

pub fn random_sentence<R: Rng>(rng: &mut R, bases: &[String]) -> Sentence {
    let noun = |rng: &mut R| {
        let b = bases.choose(rng).expect("at least one base");
        if rng.gen_bool(0.5) {
            Noun::neg(b)
        } else {
            Noun::pos(b)
        }
    };
    let form = *[Form::All, Form::Some, Form::AtLeast, Form::More]
        .choose(rng)
        .expect("four forms");
    let left = noun(rng);
    let right = noun(rng);
    Sentence::new(form, left, right)
}

/// A random theory over at most `max_bases` bases, drawn until it is consistent.
pub fn random_consistent<R: Rng>(rng: &mut R, max_bases: usize, max_sentences: usize) -> Vec<Sentence> {
    loop {
        let k = rng.gen_range(1..=max_bases);
        let bases: Vec<String> = (0..k).map(|i| format!("n{i}")).collect();
        let len = rng.gen_range(0..=max_sentences);
        let gamma: Vec<Sentence> = (0..len).map(|_| random_sentence(rng, &bases)).collect();
        if prover::is_consistent(&gamma) {
            return gamma;
        }
    }
}
