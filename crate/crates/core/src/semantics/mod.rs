//! Cardinals, block-structured models and the satisfaction checker.

mod cardinal;
mod model;

pub use cardinal::{Cardinal, CardinalParseError};
pub use model::{
    disjoint_sum, Block, BlockSet, Mode, ModelRecord, SemanticsError, Structure, SymbolicModel,
};
