//! Induced subgraphs of variable sets and their trapping-set taxonomy.

mod category;
mod instance;
mod trichotomy;
mod verdict;

pub use category::{classify, Category, CategorySet};
pub use instance::{induce, StructureInstance};
pub use trichotomy::{class_trichotomy, ClassBehavior, ClassVerdict};
pub use verdict::{cycle_rank, AsymptoticVerdict, Verdict};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("variable set is empty")]
    Empty,
    #[error("variable id {id} out of range (graph has {n} variables)")]
    InvalidId { id: usize, n: usize },
    #[error("no class-level verdict is available for category {0}")]
    Unsupported(Category),
    #[error("unknown category {0:?}")]
    UnknownCategory(String),
}
