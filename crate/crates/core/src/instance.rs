use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Which routes an instance admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RouteKind {
    Walk,
    Trail,
    Path,
}

impl RouteKind {
    pub const ALL: [RouteKind; 3] = [RouteKind::Path, RouteKind::Trail, RouteKind::Walk];

    pub fn as_str(self) -> &'static str {
        match self {
            RouteKind::Path => "path",
            RouteKind::Trail => "trail",
            RouteKind::Walk => "walk",
        }
    }
}

impl fmt::Display for RouteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RouteKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(RouteKind::Path),
            "trail" => Ok(RouteKind::Trail),
            "walk" => Ok(RouteKind::Walk),
            other => Err(format!("unknown route kind `{other}`")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("terminal {0} is not a vertex")]
    TerminalOutOfRange(VertexId),
    #[error("source and sink must be distinct")]
    SameTerminals,
    #[error("route count must be at least 1")]
    NoRoutes,
    #[error("length cap must be at least 1")]
    ZeroLengthCap,
}

/// A routing instance: find `route_count` s-t routes of `kind` sharing at
/// most `budget` edges, each of length at most `max_length` when set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub source: VertexId,
    pub sink: VertexId,
    pub route_count: usize,
    pub budget: usize,
    pub kind: RouteKind,
    pub max_length: Option<usize>,
}

impl Instance {
    pub fn new(
        graph: Graph,
        source: VertexId,
        sink: VertexId,
        route_count: usize,
        budget: usize,
        kind: RouteKind,
        max_length: Option<usize>,
    ) -> Result<Self, InstanceError> {
        let inst = Instance { graph, source, sink, route_count, budget, kind, max_length };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<(), InstanceError> {
        let n = self.graph.vertex_count();
        for v in [self.source, self.sink] {
            if v >= n {
                return Err(InstanceError::TerminalOutOfRange(v));
            }
        }
        if self.source == self.sink {
            return Err(InstanceError::SameTerminals);
        }
        if self.route_count == 0 {
            return Err(InstanceError::NoRoutes);
        }
        if self.max_length == Some(0) {
            return Err(InstanceError::ZeroLengthCap);
        }
        Ok(())
    }

    pub fn with_budget(&self, budget: usize) -> Self {
        Instance { budget, ..self.clone() }
    }

    pub fn with_route_count(&self, route_count: usize) -> Self {
        Instance { route_count, ..self.clone() }
    }

    pub fn with_max_length(&self, max_length: Option<usize>) -> Self {
        Instance { max_length, ..self.clone() }
    }

    pub fn with_kind(&self, kind: RouteKind) -> Self {
        Instance { kind, ..self.clone() }
    }
}
