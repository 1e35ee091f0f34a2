//! Exact minimum time-wise sharing over all p-tuples of routes.
//!
//! Paths and trails: branch and bound over the sorted list of all routes
//! within the length cap, choosing a nondecreasing index tuple and pruning on
//! the size of the shared set built so far.
//!
//! Walks: the route list grows exponentially with the cap, so walks are
//! searched time step by time step instead. A state is the multiset of
//! positions of the walkers still travelling plus the set of edges shared so
//! far; a state whose shared set contains another's at the same positions and
//! step is dropped. The threshold on the shared-set size is raised one edge
//! at a time until some joint move sequence brings every walker to t.

use std::collections::HashMap;

use crate::graph::{bfs_distance, distances_to, sink_eccentricity, EdgeId, Graph, VertexId};
use crate::instance::{Instance, RouteKind};
use crate::result::{SolveResult, SolverUsed};
use crate::route::{shared_edges, Route};

use super::enumerate::enumerate_pinned;
use super::{OracleError, OracleOptions};

/// Length cap the oracle uses when none is given: alpha if set, otherwise
/// n - 1 for paths, m for trails and p * d_t for walks.
pub fn default_length_cap(inst: &Instance) -> usize {
    if let Some(a) = inst.max_length {
        return a;
    }
    let g = &inst.graph;
    match inst.kind {
        RouteKind::Path => g.vertex_count().saturating_sub(1),
        RouteKind::Trail => g.edge_count(),
        RouteKind::Walk => inst.route_count * sink_eccentricity(g, inst.sink),
    }
}

/// Minimum number of shared edges over all choices of `p` routes of the
/// instance's kind (length at most the cap). The decision compares it with
/// the budget `k`. With `opts.target` set the search stops at the first
/// tuple sharing at most that many edges and `min_shared` is left unset.
pub fn min_shared(inst: &Instance, opts: &OracleOptions) -> Result<SolveResult, OracleError> {
    let cap = opts.length_cap.unwrap_or_else(|| default_length_cap(inst));
    let g = &inst.graph;
    let (s, t, p) = (inst.source, inst.sink, inst.route_count);
    let Some(dist) = bfs_distance(g, s)[t].filter(|&d| d <= cap) else {
        let mut r = SolveResult::no(SolverUsed::Oracle).with_horizon(cap);
        r.min_shared = None;
        return Ok(r);
    };
    // p copies of a shortest path share `dist` edges (none when p = 1)
    let upper = if p == 1 { 0 } else { dist };
    let found = match inst.kind {
        RouteKind::Walk => walk_search(g, s, t, p, cap, upper, opts)?,
        kind => route_list_search(g, s, t, p, kind, cap, upper, opts)?,
    };
    let (witness, exact) = match found {
        Some((routes, exact)) => (routes, exact),
        None => (vec![shortest_path(g, s, t); p], opts.target.is_none()),
    };
    let shared = shared_edges(g, &witness).expect("oracle routes are valid");
    let mut r = SolveResult::yes(SolverUsed::Oracle, witness, shared.clone()).with_horizon(cap);
    r.decision = shared.len() <= inst.budget;
    if exact {
        r.min_shared = Some(shared.len());
    }
    if !r.decision {
        r.witness = None;
        r.shared_edges = None;
    }
    Ok(r)
}

pub(crate) fn shortest_path(g: &Graph, s: VertexId, t: VertexId) -> Route {
    let dist = distances_to(g, t);
    let mut vertices = vec![s];
    let mut edges = Vec::new();
    let mut at = s;
    while at != t {
        let d = dist[at].expect("t reachable");
        let (e, w) = g.steps(at).find(|&(_, w)| dist[w] == Some(d - 1)).expect("a step towards t exists");
        vertices.push(w);
        edges.push(e);
        at = w;
    }
    Route::with_edges(vertices, edges)
}

/// Returns `Some((routes, exact))` when a tuple with fewer than `upper`
/// shared edges exists (or at most `target` in target mode).
#[allow(clippy::too_many_arguments)]
fn route_list_search(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    p: usize,
    kind: RouteKind,
    cap: usize,
    upper: usize,
    opts: &OracleOptions,
) -> Result<Option<(Vec<Route>, bool)>, OracleError> {
    // only strictly better than the shortest-path fallback is interesting
    let best = match opts.target {
        Some(k) if k >= upper => return Ok(None),
        Some(k) => k + 1,
        None => upper,
    };
    if best == 0 {
        return Ok(None);
    }
    let routes = enumerate_pinned(g, s, t, kind, cap, opts.budget)?;
    let combos = multisets(routes.len() as u128, p as u128);
    if combos > opts.budget as u128 {
        return Err(OracleError::BudgetExceeded { what: "route combinations", count: combos, budget: opts.budget });
    }
    let edge_lists: Vec<Vec<EdgeId>> =
        routes.iter().map(|r| r.pins().iter().map(|e| e.expect("pinned")).collect()).collect();
    let mut bb = BranchAndBound {
        m: g.edge_count(),
        edges: &edge_lists,
        occupancy: vec![0; (cap + 1) * g.edge_count()],
        shared_slots: vec![0; g.edge_count()],
        shared: 0,
        chosen: Vec::with_capacity(p),
        best,
        best_tuple: None,
        stop_at: opts.target.unwrap_or(0),
        p,
    };
    bb.descend(0);
    Ok(bb.best_tuple.map(|idx| {
        let tuple = idx.into_iter().map(|i| routes[i].clone()).collect();
        (tuple, opts.target.is_none())
    }))
}

/// Number of size-`k` multisets over `n` items, saturating.
fn multisets(n: u128, k: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n + i) / (i + 1);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

struct BranchAndBound<'a> {
    m: usize,
    edges: &'a [Vec<EdgeId>],
    occupancy: Vec<u16>,
    shared_slots: Vec<u32>,
    shared: usize,
    chosen: Vec<usize>,
    best: usize,
    best_tuple: Option<Vec<usize>>,
    stop_at: usize,
    p: usize,
}

impl BranchAndBound<'_> {
    fn add(&mut self, r: usize) {
        for (step, &e) in self.edges[r].iter().enumerate() {
            let slot = step * self.m + e;
            self.occupancy[slot] += 1;
            if self.occupancy[slot] == 2 {
                self.shared_slots[e] += 1;
                if self.shared_slots[e] == 1 {
                    self.shared += 1;
                }
            }
        }
    }

    fn remove(&mut self, r: usize) {
        for (step, &e) in self.edges[r].iter().enumerate() {
            let slot = step * self.m + e;
            if self.occupancy[slot] == 2 {
                self.shared_slots[e] -= 1;
                if self.shared_slots[e] == 0 {
                    self.shared -= 1;
                }
            }
            self.occupancy[slot] -= 1;
        }
    }

    /// Returns true once the search may stop.
    fn descend(&mut self, from: usize) -> bool {
        if self.chosen.len() == self.p {
            self.best = self.shared;
            self.best_tuple = Some(self.chosen.clone());
            return self.best <= self.stop_at;
        }
        for r in from..self.edges.len() {
            self.add(r);
            if self.shared < self.best {
                self.chosen.push(r);
                let done = self.descend(r);
                self.chosen.pop();
                if done {
                    self.remove(r);
                    return true;
                }
            }
            self.remove(r);
        }
        false
    }
}

/// One walker's step in a joint move: from, edge, to.
type Move = (VertexId, EdgeId, VertexId);

struct State {
    positions: Vec<VertexId>,
    shared: Vec<EdgeId>,
    parent: usize,
    moves: Vec<Move>,
}

fn walk_search(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    p: usize,
    cap: usize,
    upper: usize,
    opts: &OracleOptions,
) -> Result<Option<(Vec<Route>, bool)>, OracleError> {
    let dist = distances_to(g, t);
    let mut budget_left = opts.budget;
    match opts.target {
        Some(k) => {
            if k >= upper {
                return Ok(None);
            }
            Ok(walk_threshold(g, &dist, s, t, p, cap, k, &mut budget_left)?.map(|r| (r, false)))
        }
        None => {
            for b in 0..upper {
                if let Some(r) = walk_threshold(g, &dist, s, t, p, cap, b, &mut budget_left)? {
                    return Ok(Some((r, true)));
                }
            }
            Ok(None)
        }
    }
}

/// Layered search for p walks sharing at most `limit` edges.
#[allow(clippy::too_many_arguments)]
fn walk_threshold(
    g: &Graph,
    dist: &[Option<usize>],
    s: VertexId,
    t: VertexId,
    p: usize,
    cap: usize,
    limit: usize,
    budget_left: &mut u64,
) -> Result<Option<Vec<Route>>, OracleError> {
    let mut arena = vec![State { positions: vec![s; p], shared: Vec::new(), parent: usize::MAX, moves: Vec::new() }];
    let mut layer = vec![0usize];
    let spent_before = *budget_left;
    for step in 1..=cap {
        let mut next: HashMap<Vec<VertexId>, Vec<usize>> = HashMap::new();
        let mut order: Vec<Vec<VertexId>> = Vec::new();
        for &idx in &layer {
            let positions = arena[idx].positions.clone();
            let options: Vec<Vec<(EdgeId, VertexId)>> = positions
                .iter()
                .map(|&v| g.steps(v).filter(|&(_, w)| dist[w].is_some_and(|d| step + d <= cap)).collect())
                .collect();
            let mut choice = vec![0usize; positions.len()];
            let mut moves = Vec::new();
            let mut pending: Vec<(Vec<VertexId>, Vec<EdgeId>, Vec<Move>)> = Vec::new();
            joint_moves(&positions, &options, 0, &mut choice, &mut moves, &mut |mv| {
                let mut used: Vec<EdgeId> = mv.iter().map(|&(_, e, _)| e).collect();
                used.sort_unstable();
                let mut shared = arena[idx].shared.clone();
                for w in used.windows(2) {
                    if w[0] == w[1] {
                        if let Err(pos) = shared.binary_search(&w[0]) {
                            shared.insert(pos, w[0]);
                        }
                    }
                }
                if shared.len() <= limit {
                    let mut pos: Vec<VertexId> = mv.iter().map(|&(_, _, w)| w).filter(|&w| w != t).collect();
                    pos.sort_unstable();
                    pending.push((pos, shared, mv.to_vec()));
                }
            });
            for (pos, shared, mv) in pending {
                let finished = pos.is_empty();
                let bucket = next.entry(pos.clone()).or_default();
                if bucket.iter().any(|&o| is_subset(&arena[o].shared, &shared)) {
                    continue;
                }
                bucket.retain(|&o| !is_subset(&shared, &arena[o].shared));
                if *budget_left == 0 {
                    return Err(OracleError::BudgetExceeded {
                        what: "search states",
                        count: spent_before as u128 + 1,
                        budget: spent_before,
                    });
                }
                *budget_left -= 1;
                arena.push(State { positions: pos.clone(), shared, parent: idx, moves: mv });
                let id = arena.len() - 1;
                if finished {
                    return Ok(Some(rebuild(&arena, id, s, t, p)));
                }
                if bucket.is_empty() {
                    order.push(pos);
                }
                bucket.push(id);
            }
        }
        order.sort();
        layer = order.iter().flat_map(|k| next[k].iter().copied()).collect();
        if layer.is_empty() {
            break;
        }
    }
    Ok(None)
}

fn is_subset(a: &[EdgeId], b: &[EdgeId]) -> bool {
    a.iter().all(|e| b.binary_search(e).is_ok())
}

/// Enumerates one move per walker; walkers on the same vertex pick moves in
/// nondecreasing option order since they are interchangeable.
fn joint_moves(
    positions: &[VertexId],
    options: &[Vec<(EdgeId, VertexId)>],
    i: usize,
    choice: &mut [usize],
    moves: &mut Vec<Move>,
    visit: &mut dyn FnMut(&[Move]),
) {
    if i == positions.len() {
        visit(moves);
        return;
    }
    let start = if i > 0 && positions[i] == positions[i - 1] { choice[i - 1] } else { 0 };
    for c in start..options[i].len() {
        choice[i] = c;
        let (e, w) = options[i][c];
        moves.push((positions[i], e, w));
        joint_moves(positions, options, i + 1, choice, moves, visit);
        moves.pop();
    }
}

fn rebuild(arena: &[State], last: usize, s: VertexId, t: VertexId, p: usize) -> Vec<Route> {
    let mut chain = Vec::new();
    let mut at = last;
    while arena[at].parent != usize::MAX {
        chain.push(at);
        at = arena[at].parent;
    }
    chain.reverse();
    let mut vertices: Vec<Vec<VertexId>> = vec![vec![s]; p];
    let mut edges: Vec<Vec<EdgeId>> = vec![Vec::new(); p];
    let mut done = vec![false; p];
    for &id in &chain {
        let mut moved = vec![false; p];
        for &(from, e, to) in &arena[id].moves {
            let w = (0..p)
                .find(|&w| !done[w] && !moved[w] && *vertices[w].last().unwrap() == from)
                .expect("a walker waits at every move origin");
            moved[w] = true;
            vertices[w].push(to);
            edges[w].push(e);
        }
        for w in 0..p {
            done[w] |= moved[w] && *vertices[w].last().unwrap() == t;
        }
    }
    vertices.into_iter().zip(edges).map(|(v, e)| Route::with_edges(v, e)).collect()
}
