//! Routing `p` walkers from s to t so that few edges are used by two of them
//! at the same time step: exact solvers for the tractable cases, a
//! certificate verifier, exhaustive oracles, and instance generators for the
//! hardness constructions.
//!
//! ```
//! use rca::{solve, verify_solution, Graph, Instance, RouteKind, SolveOptions};
//!
//! let g = Graph::from_edges(true, 4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
//! let inst = Instance::new(g, 0, 3, 2, 0, RouteKind::Walk, None).unwrap();
//! let result = solve(&inst, &SolveOptions::default()).unwrap();
//! assert!(result.decision);
//! assert!(verify_solution(&inst, result.witness.as_ref().unwrap()).is_accept());
//! ```

pub mod cli;
pub mod flow;
pub mod format;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod result;
pub mod route;
pub mod solve;
pub mod verify;

pub use graph::{EdgeId, EdgeSet, Graph, GraphError, VertexId};
pub use instance::{Instance, RouteKind};
pub use result::{SolveResult, SolverUsed};
pub use route::{classify, shared_edges, Route, RouteClass};
pub use solve::{solve, SolveError, SolveOptions};
pub use verify::{verify_solution, Rejection, Verdict};
