use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::rules::Rule;
use crate::syntax::Sentence;

/// A rule-labelled derivation tree. Leaves are hypotheses or axioms.
///
/// `conclusion` is absent only at the root of a bare contradiction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTree {
    pub conclusion: Option<Sentence>,
    pub rule: String,
    pub children: Vec<ProofTree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("`{0}` is used as a hypothesis but is not one")]
    NotAHypothesis(String),
    #[error("hypothesis leaf has children")]
    HypothesisWithChildren,
    #[error("node `{conclusion}` is not an instance of ({rule})")]
    BadStep { rule: String, conclusion: String },
    #[error("missing conclusion below the root")]
    MissingConclusion,
}

impl ProofTree {
    pub fn node(conclusion: Option<Sentence>, rule: &str, children: Vec<ProofTree>) -> ProofTree {
        ProofTree {
            conclusion,
            rule: rule.to_string(),
            children,
        }
    }

    pub fn hypothesis(s: Sentence) -> ProofTree {
        ProofTree::node(Some(s), "hypothesis", vec![])
    }

    pub fn step(rule: Rule, conclusion: Sentence, children: Vec<ProofTree>) -> ProofTree {
        ProofTree::node(Some(conclusion), rule.name(), children)
    }

    /// Checks every node against its rule schema and every hypothesis leaf against `gamma`.
    pub fn check(&self, gamma: &[Sentence]) -> Result<(), ProofError> {
        self.check_at(gamma, true)
    }

    fn check_at(&self, gamma: &[Sentence], root: bool) -> Result<(), ProofError> {
        if self.conclusion.is_none() && !root {
            return Err(ProofError::MissingConclusion);
        }
        if self.rule == "hypothesis" {
            if !self.children.is_empty() {
                return Err(ProofError::HypothesisWithChildren);
            }
            let c = self.conclusion.as_ref().ok_or(ProofError::MissingConclusion)?;
            return if gamma.contains(c) {
                Ok(())
            } else {
                Err(ProofError::NotAHypothesis(c.to_string()))
            };
        }
        let rule: Rule = self
            .rule
            .parse()
            .map_err(|_| ProofError::UnknownRule(self.rule.clone()))?;
        for child in &self.children {
            child.check_at(gamma, false)?;
        }
        let premises: Vec<&Sentence> = self
            .children
            .iter()
            .filter_map(|c| c.conclusion.as_ref())
            .collect();
        if self.conclusion.is_none() && !rule.is_ex_falso() {
            return Err(ProofError::MissingConclusion);
        }
        if rule.is_instance(&premises, self.conclusion.as_ref()) {
            Ok(())
        } else {
            Err(ProofError::BadStep {
                rule: self.rule.clone(),
                conclusion: self.label(),
            })
        }
    }

    fn label(&self) -> String {
        self.conclusion
            .as_ref()
            .map_or_else(|| "⊥".to_string(), Sentence::symbolic)
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(ProofTree::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(ProofTree::depth).max().unwrap_or(0)
    }

    /// Whether some node uses the named rule.
    pub fn uses(&self, rule: &str) -> bool {
        self.rule == rule || self.children.iter().any(|c| c.uses(rule))
    }

    /// Indented text, one node per line: `conclusion  [rule]`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let _ = writeln!(out, "{}{}  [{}]", "  ".repeat(depth), self.label(), self.rule);
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }
}
