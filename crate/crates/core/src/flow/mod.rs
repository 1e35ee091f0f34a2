//! Time-expanded networks, unit-capacity maximum flow, and decomposition of
//! flows into collision-free walks.

mod decompose;
mod maxflow;
mod network;

use thiserror::Error;

use crate::graph::VertexId;

pub use decompose::decompose_to_walks;
pub use maxflow::{max_flow, max_flow_limited, Flow};
pub use network::{expand, write_network, ArcOrigin, NetworkArc, NodeId, TimeExpandedNetwork};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlowError {
    #[error("time horizon must be positive")]
    ZeroHorizon,
    #[error("terminal {0} is not a vertex")]
    TerminalOutOfRange(VertexId),
    #[error("route count {0} does not fit an arc capacity")]
    CapacityOverflow(usize),
    #[error("infeasible flow: {0}")]
    Infeasible(&'static str),
}
