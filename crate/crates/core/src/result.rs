use std::fmt;

use crate::graph::EdgeSet;
use crate::route::Route;

/// Which procedure produced a [`SolveResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverUsed {
    /// t is not reachable from s within the length cap.
    Unreachable,
    /// p copies of a shortest path, which share at most dist(s, t) edges.
    ShortestPath,
    /// Closed form for walks on undirected graphs.
    UndirectedWalk,
    /// Time-expanded flow, with shared-arc guessing when k > 0.
    TimeExpandedFlow,
    /// Exhaustive search.
    Oracle,
}

impl SolverUsed {
    pub fn as_str(self) -> &'static str {
        match self {
            SolverUsed::Unreachable => "unreachable",
            SolverUsed::ShortestPath => "shortest-path",
            SolverUsed::UndirectedWalk => "undirected-walk",
            SolverUsed::TimeExpandedFlow => "time-expanded-flow",
            SolverUsed::Oracle => "oracle",
        }
    }
}

impl fmt::Display for SolverUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decision plus certificate. A `yes` with a witness carries exactly `p`
/// routes whose shared edges are listed in `shared_edges`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: bool,
    pub witness: Option<Vec<Route>>,
    pub shared_edges: Option<EdgeSet>,
    /// Exact optimum, reported by the oracle only.
    pub min_shared: Option<usize>,
    pub solver: SolverUsed,
    pub horizon: Option<usize>,
}

impl SolveResult {
    pub fn no(solver: SolverUsed) -> Self {
        SolveResult { decision: false, witness: None, shared_edges: None, min_shared: None, solver, horizon: None }
    }

    pub fn yes(solver: SolverUsed, witness: Vec<Route>, shared_edges: EdgeSet) -> Self {
        SolveResult {
            decision: true,
            witness: Some(witness),
            shared_edges: Some(shared_edges),
            min_shared: None,
            solver,
            horizon: None,
        }
    }

    pub fn with_horizon(mut self, horizon: usize) -> Self {
        self.horizon = Some(horizon);
        self
    }
}
