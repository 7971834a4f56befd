//! Exhaustive cycle and trapping-set enumeration, plus a brute-force census
//! used as an independent oracle.

mod adjacency;
mod brute;
mod cycles;
mod search;
mod table;

pub use brute::{brute_force_census, BRUTE_FORCE_MAX_N};
pub use cycles::{count_cycles, enumerate_cycles, for_each_cycle, CycleRecord, DEFAULT_CYCLE_CAP};
pub use search::{
    census, enumerate_structures, list_structures, FoundStructure, SearchOptions, Strategy, A_MAX_CAP,
};
pub use table::MultiplicityTable;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("brute-force census refuses n = {n} (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("a_max = {a_max} exceeds the enumeration cap {cap}")]
    SizeCap { a_max: usize, cap: usize },
    #[error("c_max must be even and at least 4, got {0}")]
    InvalidCycleLength(usize),
    #[error("structure budget of {budget} visited sets exhausted while at a = {level}; table is partial")]
    BudgetExceeded { budget: u64, level: usize, partial: Box<MultiplicityTable> },
    #[error("cycle cap of {cap} reached; {found} cycles listed before stopping")]
    CycleCap { cap: u64, found: u64 },
    #[error("variable set {0:?} generated twice")]
    Duplicate(Vec<u32>),
}
