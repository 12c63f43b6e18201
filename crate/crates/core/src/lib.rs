//! Syllogistic logic with cardinality comparisons, interpreted over infinite sets.
//!
//! The crate provides a saturation prover for the 21-rule proof system, the
//! small/half/large partition machinery, a model builder for consistent
//! theories, a countermodel generator for non-entailments, and a bounded
//! semantic oracle used to cross-check the rest.

pub mod countermodel;
pub mod modelbuild;
pub mod oracle;
pub mod partition;
pub mod prover;
pub mod semantics;
pub mod syntax;

pub use semantics::{Block, BlockSet, Cardinal, Mode, Structure, SymbolicModel};
pub use syntax::{atoms_of, negate, parse, render, Form, Noun, Sentence, TheoryFile};
