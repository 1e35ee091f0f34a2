//! Exhaustive reference procedures: minimum sharing by search, and brute
//! force for Set Cover and Hamiltonian cycles.

mod enumerate;
mod hamiltonian;
mod search;
mod set_cover;

use thiserror::Error;

pub use enumerate::enumerate_routes;
pub use hamiltonian::{brute_force_hamiltonian, HAMILTONIAN_VERTEX_LIMIT};
pub(crate) use search::shortest_path;
pub use search::{default_length_cap, min_shared};
pub use set_cover::{brute_force_set_cover, SetCover};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search too large: {count} {what} exceed the budget of {budget}")]
    BudgetExceeded { what: &'static str, count: u128, budget: u64 },
    #[error("graph has {0} vertices, brute force is limited to {1}")]
    TooManyVertices(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Upper bound on enumerated routes, route tuples or search states.
    pub budget: u64,
    /// Overrides [`default_length_cap`].
    pub length_cap: Option<usize>,
    /// Stop at the first tuple sharing at most this many edges.
    pub target: Option<usize>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { budget: DEFAULT_BUDGET, length_cap: None, target: None }
    }
}

impl OracleOptions {
    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = Some(cap);
        self
    }

    pub fn with_target(mut self, target: usize) -> Self {
        self.target = Some(target);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}
