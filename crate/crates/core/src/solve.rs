//! Decision procedures and the dispatcher that picks one per instance.

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::flow::{decompose_to_walks, expand, max_flow_limited, FlowError};
use crate::graph::{bfs_distance, is_dag, replicate_arcs, sink_eccentricity, EdgeId, EdgeSet, Graph, VertexId};
use crate::instance::{Instance, RouteKind};
use crate::oracle::{min_shared, shortest_path, OracleError, OracleOptions, DEFAULT_BUDGET};
use crate::result::{SolveResult, SolverUsed};
use crate::route::{shared_edges, Route};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("refusing exhaustive search: {0}")]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error("{0}")]
    Unsupported(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Size guard handed to the oracle fallback.
    pub oracle_budget: u64,
    /// Worker threads for the shared-arc enumeration; 1 runs sequentially.
    pub jobs: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { oracle_budget: DEFAULT_BUDGET, jobs: 1 }
    }
}

/// Time horizon used by the flow-based solver: n on a DAG and p * d_t
/// otherwise, where d_t is the largest distance to t; capped by alpha.
pub fn horizon(inst: &Instance) -> usize {
    let g = &inst.graph;
    let base = if g.is_directed() && is_dag(g).unwrap_or(false) {
        g.vertex_count()
    } else {
        inst.route_count * sink_eccentricity(g, inst.sink).max(1)
    };
    inst.max_length.map_or(base, |a| base.min(a))
}

/// Decides the instance and, on yes, returns `p` routes that pass
/// [`crate::verify_solution`].
pub fn solve(inst: &Instance, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let g = &inst.graph;
    let (s, t, p) = (inst.source, inst.sink, inst.route_count);
    let dist = match bfs_distance(g, s)[t] {
        Some(d) if inst.max_length.is_none_or(|a| d <= a) => d,
        _ => return Ok(SolveResult::no(SolverUsed::Unreachable)),
    };
    if p == 1 || dist <= inst.budget {
        let routes = vec![shortest_path(g, s, t); p];
        let shared = shared_edges(g, &routes).expect("shortest path is valid");
        return Ok(SolveResult::yes(SolverUsed::ShortestPath, routes, shared));
    }
    if !g.is_directed() && inst.kind == RouteKind::Walk && inst.max_length.is_none() {
        return solve_walk_undirected(inst);
    }
    if g.is_directed() && (inst.kind == RouteKind::Walk || is_dag(g).unwrap_or(false)) {
        let tau = horizon(inst);
        let found = solve_k_shared_directed(g, s, t, p, inst.budget, tau, opts.jobs)?;
        let result = match found {
            Some(routes) => {
                let shared = shared_edges(g, &routes).expect("flow routes are valid");
                SolveResult::yes(SolverUsed::TimeExpandedFlow, routes, shared)
            }
            None => SolveResult::no(SolverUsed::TimeExpandedFlow),
        };
        return Ok(result.with_horizon(tau));
    }
    let oracle = OracleOptions::default().with_budget(opts.oracle_budget).with_target(inst.budget);
    let mut r = min_shared(inst, &oracle)?;
    r.min_shared = None;
    Ok(r)
}

/// p walks of length at most `tau` sharing no edge, from a maximum flow over
/// the time-expanded network. Directed graphs only.
pub fn solve_zero_shared_directed(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    p: usize,
    tau: usize,
) -> Result<Option<Vec<Route>>, SolveError> {
    if !g.is_directed() {
        return Err(SolveError::Unsupported("flow solver needs a directed graph"));
    }
    let net = expand(g, s, t, tau, p)?;
    let flow = max_flow_limited(&net, Some(p as u32));
    if (flow.value as usize) < p {
        return Ok(None);
    }
    Ok(Some(decompose_to_walks(&net, &flow)?))
}

/// p walks of length at most `tau` sharing at most `k` arcs. Tries every arc
/// set K with |K| <= k in lexicographic order: arcs of K get p parallel
/// copies and a zero-sharing solution is sought in the result. The first K
/// that works (in that order) decides, also when run on several threads.
pub fn solve_k_shared_directed(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    p: usize,
    k: usize,
    tau: usize,
    jobs: usize,
) -> Result<Option<Vec<Route>>, SolveError> {
    if !g.is_directed() {
        return Err(SolveError::Unsupported("flow solver needs a directed graph"));
    }
    let m = g.edge_count();
    let attempt = |subset: Vec<EdgeId>| -> Result<Option<Vec<Route>>, SolveError> {
        let rep = replicate_arcs(g, &EdgeSet::from(subset), p).expect("subset arcs exist");
        let Some(routes) = solve_zero_shared_directed(&rep.graph, s, t, p, tau)? else {
            return Ok(None);
        };
        let lifted = routes
            .into_iter()
            .map(|r| {
                let edges = r.pins().iter().map(|e| rep.original[e.expect("flow routes are pinned")]).collect();
                Route::with_edges(r.vertices().to_vec(), edges)
            })
            .collect();
        Ok(Some(lifted))
    };
    let subsets = (0..=k.min(m)).flat_map(|size| (0..m).combinations(size));
    if jobs <= 1 {
        for subset in subsets {
            if let Some(found) = attempt(subset)? {
                return Ok(Some(found));
            }
        }
        return Ok(None);
    }
    let all: Vec<Vec<EdgeId>> = subsets.collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|_| SolveError::Unsupported("could not start worker threads"))?;
    pool.install(|| {
        all.into_par_iter()
            .map(attempt)
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            })
            .unwrap_or(Ok(None))
    })
}

/// Closed form for walks in undirected graphs without a length cap.
/// Walkers wait by stepping back and forth on an edge at s: with k >= 1 all
/// of them may share the first edge of a shortest path; with k = 0 each
/// needs its own edge at s, so the answer is yes iff deg(s) >= p.
pub fn solve_walk_undirected(inst: &Instance) -> Result<SolveResult, SolveError> {
    let g = &inst.graph;
    if g.is_directed() || inst.kind != RouteKind::Walk || inst.max_length.is_some() {
        return Err(SolveError::Unsupported("closed form covers uncapped walks in undirected graphs"));
    }
    let (s, t, p) = (inst.source, inst.sink, inst.route_count);
    if bfs_distance(g, s)[t].is_none() {
        return Ok(SolveResult::no(SolverUsed::Unreachable));
    }
    let path = shortest_path(g, s, t);
    let first = path.pins()[0].expect("shortest path is pinned");
    let waiting: Vec<EdgeId> = if inst.budget >= 1 || p == 1 {
        vec![first; p]
    } else {
        if g.degree(s) < p {
            return Ok(SolveResult::no(SolverUsed::UndirectedWalk));
        }
        let others = g.incident(s).iter().copied().filter(|&e| e != first);
        std::iter::once(first).chain(others).take(p).collect()
    };
    let routes: Vec<Route> = waiting
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let x = g.traverse(e, s).expect("edge at s");
            let mut vertices = Vec::with_capacity(2 * i + path.len() + 1);
            let mut edges = Vec::with_capacity(2 * i + path.len());
            for _ in 0..i {
                vertices.extend([s, x]);
                edges.extend([e, e]);
            }
            vertices.extend_from_slice(path.vertices());
            edges.extend(path.pins().iter().map(|e| e.expect("pinned")));
            Route::with_edges(vertices, edges)
        })
        .collect();
    let shared = shared_edges(g, &routes).expect("closed-form routes are valid");
    debug_assert!(shared.len() <= inst.budget);
    Ok(SolveResult::yes(SolverUsed::UndirectedWalk, routes, shared))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_solution;

    fn check(inst: &Instance) -> SolveResult {
        let r = solve(inst, &SolveOptions::default()).unwrap();
        if r.decision {
            assert!(verify_solution(inst, r.witness.as_ref().unwrap()).is_accept());
        }
        r
    }

    #[test]
    fn directed_diamond() {
        let g = Graph::from_edges(true, 4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let i = Instance::new(g, 0, 3, 2, 0, RouteKind::Walk, None).unwrap();
        assert!(check(&i).decision);
        assert!(!check(&i.with_route_count(3)).decision);
    }

    #[test]
    fn waiting_on_a_cycle() {
        // s=0 -> t=2 via 1, with a loop 0 -> 3 -> 0 to wait on
        let g = Graph::from_edges(true, 4, [(0, 1), (1, 2), (0, 3), (3, 0)]).unwrap();
        let i = Instance::new(g, 0, 2, 2, 0, RouteKind::Walk, None).unwrap();
        let r = check(&i);
        assert!(r.decision);
        assert_eq!(r.solver, SolverUsed::TimeExpandedFlow);
        assert!(!check(&i.with_kind(RouteKind::Path)).decision);
    }

    #[test]
    fn shared_arc_is_guessed() {
        // doubled first arc, single second arc used by both at step 2
        let g = Graph::from_edges(true, 3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let i = Instance::new(g.clone(), 0, 2, 2, 0, RouteKind::Walk, None).unwrap();
        assert!(!check(&i).decision);
        let r = check(&i.with_budget(1));
        assert!(r.decision);
        assert_eq!(r.shared_edges.unwrap().as_slice(), &[2]);
        let found = solve_k_shared_directed(&g, 0, 2, 2, 1, 4, 3).unwrap();
        assert!(found.is_some());
    }

    #[test]
    fn undirected_closed_form() {
        let g = Graph::from_edges(false, 4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let i = Instance::new(g, 0, 3, 2, 0, RouteKind::Walk, None).unwrap();
        assert!(check(&i).decision);
        assert!(!check(&i.with_route_count(3)).decision);
        assert!(check(&i.with_route_count(3).with_budget(1)).decision);
    }

    #[test]
    fn length_cap_makes_target_unreachable() {
        let g = Graph::from_edges(false, 3, [(0, 1), (1, 2)]).unwrap();
        let i = Instance::new(g, 0, 2, 1, 0, RouteKind::Path, Some(1)).unwrap();
        assert_eq!(check(&i).solver, SolverUsed::Unreachable);
    }
}
