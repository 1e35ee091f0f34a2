use crate::route::Route;

use super::maxflow::Flow;
use super::network::{ArcOrigin, TimeExpandedNetwork};
use super::FlowError;

/// Splits an integral flow into arc-disjoint source-sink paths and projects
/// each one onto the original graph, cutting it at its first visit of t.
///
/// The resulting walks have length at most the horizon and share no edge,
/// except that on a bidirected (undirected) input two walks may cross the
/// same edge in opposite directions at the same step.
pub fn decompose_to_walks(net: &TimeExpandedNetwork, flow: &Flow) -> Result<Vec<Route>, FlowError> {
    check_feasible(net, flow)?;
    let (s, t) = net.terminals();
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); net.node_count()];
    for (i, a) in net.arcs().iter().enumerate() {
        if flow.arc_flow[i] > 0 {
            out_arcs[a.from].push(i);
        }
    }
    let mut remaining = flow.arc_flow.clone();
    let mut routes = Vec::with_capacity(flow.value as usize);
    for _ in 0..flow.value {
        let mut node = net.source_node();
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        let mut arrived = false;
        while node != net.sink_node() {
            let &arc = out_arcs[node]
                .iter()
                .find(|&&i| remaining[i] > 0)
                .ok_or(FlowError::Infeasible("flow path ends before the sink"))?;
            remaining[arc] -= 1;
            let a = net.arcs()[arc];
            node = a.to;
            if arrived {
                continue;
            }
            match a.origin {
                ArcOrigin::Movement { edge, .. } => {
                    let (v, _) = net.locate(a.to);
                    vertices.push(v);
                    edges.push(edge);
                    arrived = v == t;
                }
                ArcOrigin::SinkChain { .. } => arrived = true,
            }
        }
        routes.push(Route::with_edges(vertices, edges));
    }
    Ok(routes)
}

fn check_feasible(net: &TimeExpandedNetwork, flow: &Flow) -> Result<(), FlowError> {
    if flow.arc_flow.len() != net.arcs().len() {
        return Err(FlowError::Infeasible("flow does not match the network"));
    }
    let mut balance = vec![0i64; net.node_count()];
    for (a, &f) in net.arcs().iter().zip(&flow.arc_flow) {
        if f > a.capacity {
            return Err(FlowError::Infeasible("capacity exceeded"));
        }
        balance[a.from] -= f as i64;
        balance[a.to] += f as i64;
    }
    let (src, snk) = (net.source_node(), net.sink_node());
    for (node, &b) in balance.iter().enumerate() {
        if node != src && node != snk && b != 0 {
            return Err(FlowError::Infeasible("conservation violated"));
        }
    }
    if balance[snk] != flow.value as i64 || balance[src] != -(flow.value as i64) {
        return Err(FlowError::Infeasible("flow value does not match arc flows"));
    }
    Ok(())
}
