use std::fmt::Write as _;

use crate::graph::{EdgeId, Graph, VertexId};

use super::FlowError;

pub type NodeId = usize;

/// Where an arc of the expanded network comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcOrigin {
    /// A step along `edge` from layer `layer - 1` to `layer`.
    Movement { edge: EdgeId, layer: usize },
    /// The arc `(t^{layer-1}, t^{layer})` that lets finished routes wait at t.
    SinkChain { layer: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetworkArc {
    pub from: NodeId,
    pub to: NodeId,
    pub capacity: u32,
    pub origin: ArcOrigin,
}

/// Layered copy of a graph over `horizon + 1` time layers. Node `(v, i)` has
/// id `i * n + v`; the source is `(s, 0)` and the sink `(t, horizon)`.
#[derive(Debug, Clone)]
pub struct TimeExpandedNetwork {
    vertex_count: usize,
    horizon: usize,
    source: VertexId,
    sink: VertexId,
    route_count: usize,
    bidirected: bool,
    arcs: Vec<NetworkArc>,
}

impl TimeExpandedNetwork {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn route_count(&self) -> usize {
        self.route_count
    }

    /// True when the network was built from an undirected graph.
    pub fn is_bidirected(&self) -> bool {
        self.bidirected
    }

    pub fn terminals(&self) -> (VertexId, VertexId) {
        (self.source, self.sink)
    }

    pub fn node_count(&self) -> usize {
        self.vertex_count * (self.horizon + 1)
    }

    pub fn node(&self, v: VertexId, layer: usize) -> NodeId {
        layer * self.vertex_count + v
    }

    /// `(vertex, layer)` of a node.
    pub fn locate(&self, node: NodeId) -> (VertexId, usize) {
        (node % self.vertex_count, node / self.vertex_count)
    }

    pub fn source_node(&self) -> NodeId {
        self.node(self.source, 0)
    }

    pub fn sink_node(&self) -> NodeId {
        self.node(self.sink, self.horizon)
    }

    pub fn arcs(&self) -> &[NetworkArc] {
        &self.arcs
    }

    pub fn movement_arc_count(&self) -> usize {
        self.arcs.iter().filter(|a| matches!(a.origin, ArcOrigin::Movement { .. })).count()
    }

    pub fn sink_chain_arc_count(&self) -> usize {
        self.arcs.len() - self.movement_arc_count()
    }
}

/// Builds the `tau`-time-expanded network of `g` with one sink-chain arc of
/// capacity `p` per layer transition. Undirected edges contribute one arc
/// per direction, both carrying the edge's id as origin.
pub fn expand(g: &Graph, s: VertexId, t: VertexId, tau: usize, p: usize) -> Result<TimeExpandedNetwork, FlowError> {
    if tau == 0 {
        return Err(FlowError::ZeroHorizon);
    }
    let n = g.vertex_count();
    for v in [s, t] {
        if v >= n {
            return Err(FlowError::TerminalOutOfRange(v));
        }
    }
    let capacity = u32::try_from(p).map_err(|_| FlowError::CapacityOverflow(p))?;
    let per_layer = if g.is_directed() { g.edge_count() } else { 2 * g.edge_count() } + 1;
    let mut arcs = Vec::with_capacity(per_layer * tau);
    for layer in 1..=tau {
        let below = (layer - 1) * n;
        let above = layer * n;
        for (edge, e) in g.edges().iter().enumerate() {
            let origin = ArcOrigin::Movement { edge, layer };
            arcs.push(NetworkArc { from: below + e.tail, to: above + e.head, capacity: 1, origin });
            if !g.is_directed() {
                arcs.push(NetworkArc { from: below + e.head, to: above + e.tail, capacity: 1, origin });
            }
        }
        arcs.push(NetworkArc { from: below + t, to: above + t, capacity, origin: ArcOrigin::SinkChain { layer } });
    }
    Ok(TimeExpandedNetwork {
        vertex_count: n,
        horizon: tau,
        source: s,
        sink: t,
        route_count: p,
        bidirected: !g.is_directed(),
        arcs,
    })
}

/// Debug dump in the instance edge-list format, with one comment per arc.
pub fn write_network(net: &TimeExpandedNetwork) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# time-expanded network: tau {} nodes {} arcs {} (node id = layer * {} + vertex)",
        net.horizon,
        net.node_count(),
        net.arcs.len(),
        net.vertex_count
    )
    .unwrap();
    if net.bidirected {
        writeln!(out, "# undirected input bidirected: one arc per direction per layer").unwrap();
    }
    writeln!(out, "# source node {} sink node {}", net.source_node(), net.sink_node()).unwrap();
    writeln!(out, "rca 1\ndirected\nn {}", net.node_count()).unwrap();
    for a in &net.arcs {
        match a.origin {
            ArcOrigin::Movement { edge, layer } => {
                writeln!(out, "e {} {} # layer {layer} edge {edge}", a.from, a.to).unwrap()
            }
            ArcOrigin::SinkChain { layer } => {
                writeln!(out, "e {} {} # layer {layer} sink-chain cap {}", a.from, a.to, a.capacity).unwrap()
            }
        }
    }
    out
}
