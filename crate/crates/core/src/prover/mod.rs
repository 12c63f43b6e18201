//! Forward-chaining saturation, proof trees, consistency and derived relations.

mod atoms;
mod proof;
mod relations;
mod rules;
mod saturate;

pub use atoms::Atoms;
pub use proof::{ProofError, ProofTree};
pub use relations::{DerivedRelations, RelationTables};
pub use rules::{Rule, UnknownRule};
pub use saturate::Saturation;

use thiserror::Error;

use crate::syntax::{Noun, Sentence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("the theory is inconsistent")]
    Inconsistent,
}

/// Saturates `gamma` over its atoms plus `extra`.
pub fn saturate<E: IntoIterator<Item = Noun>>(gamma: &[Sentence], extra: E) -> Saturation {
    Saturation::new(gamma, extra)
}

fn goal_atoms(phi: &Sentence) -> [Noun; 2] {
    [phi.left.clone(), phi.right.clone()]
}

/// Whether `gamma ⊢ phi`.
pub fn entails(gamma: &[Sentence], phi: &Sentence) -> bool {
    saturate(gamma, goal_atoms(phi)).entails(phi)
}

/// A proof tree for `gamma ⊢ phi`, if there is one.
pub fn proof_of(gamma: &[Sentence], phi: &Sentence) -> Option<ProofTree> {
    saturate(gamma, goal_atoms(phi)).proof(phi)
}

pub fn is_consistent(gamma: &[Sentence]) -> bool {
    saturate(gamma, []).is_consistent()
}

/// The derived relations of a consistent theory over its atoms plus `extra`.
pub fn relations<E: IntoIterator<Item = Noun>>(
    gamma: &[Sentence],
    extra: E,
) -> Result<DerivedRelations, ProverError> {
    relations_of(&saturate(gamma, extra))
}

pub fn relations_of(sat: &Saturation) -> Result<DerivedRelations, ProverError> {
    if sat.is_consistent() {
        Ok(DerivedRelations::from_saturation(sat))
    } else {
        Err(ProverError::Inconsistent)
    }
}
