use crate::graph::{distances_to, EdgeId, Graph, VertexId};
use crate::instance::RouteKind;
use crate::route::Route;

use super::OracleError;

/// Every s-t route of `kind` with length at most `maxlen`, each vertex
/// sequence once, in lexicographic order. Routes end at their first visit
/// of t.
pub fn enumerate_routes(g: &Graph, s: VertexId, t: VertexId, kind: RouteKind, maxlen: usize) -> Vec<Route> {
    let mut seqs: Vec<Vec<VertexId>> = Vec::new();
    let mut sink = |vs: &[VertexId], _: &[EdgeId]| {
        seqs.push(vs.to_vec());
        true
    };
    // dedupe below takes care of parallel copies
    dfs_routes(g, s, t, kind, maxlen, &mut sink);
    seqs.sort();
    seqs.dedup();
    seqs.into_iter().map(Route::new).collect()
}

/// Edge-level routes: one entry per distinct copy assignment, pinned.
/// Fails once more than `limit` routes have been produced.
pub(crate) fn enumerate_pinned(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    kind: RouteKind,
    maxlen: usize,
    limit: u64,
) -> Result<Vec<Route>, OracleError> {
    let mut out = Vec::new();
    let mut sink = |vs: &[VertexId], es: &[EdgeId]| {
        out.push(Route::with_edges(vs.to_vec(), es.to_vec()));
        (out.len() as u64) <= limit
    };
    if !dfs_routes(g, s, t, kind, maxlen, &mut sink) {
        return Err(OracleError::BudgetExceeded { what: "enumerated routes", count: out.len() as u128, budget: limit });
    }
    out.sort_by(|a, b| (a.len(), a.vertices(), a.pins()).cmp(&(b.len(), b.vertices(), b.pins())));
    Ok(out)
}

/// Depth-first search over edge sequences; `emit` returns false to abort.
/// Returns false if aborted.
fn dfs_routes(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    kind: RouteKind,
    maxlen: usize,
    emit: &mut dyn FnMut(&[VertexId], &[EdgeId]) -> bool,
) -> bool {
    let dist = distances_to(g, t);
    if dist[s].is_none_or(|d| d > maxlen) {
        return true;
    }
    let mut st = Dfs {
        g,
        t,
        kind,
        maxlen,
        dist,
        vertices: vec![s],
        edges: Vec::new(),
        on_route: vec![false; g.vertex_count()],
        used: vec![false; g.edge_count()],
    };
    st.on_route[s] = true;
    st.go(emit)
}

struct Dfs<'a> {
    g: &'a Graph,
    t: VertexId,
    kind: RouteKind,
    maxlen: usize,
    dist: Vec<Option<usize>>,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    on_route: Vec<bool>,
    used: Vec<bool>,
}

impl Dfs<'_> {
    fn go(&mut self, emit: &mut dyn FnMut(&[VertexId], &[EdgeId]) -> bool) -> bool {
        let v = *self.vertices.last().unwrap();
        if v == self.t {
            return emit(&self.vertices, &self.edges);
        }
        let depth = self.edges.len();
        for (e, w) in self.g.steps(v) {
            match self.dist[w] {
                Some(d) if depth + 1 + d <= self.maxlen => {}
                _ => continue,
            }
            match self.kind {
                RouteKind::Path if self.on_route[w] => continue,
                RouteKind::Trail if self.used[e] => continue,
                _ => {}
            }
            let was_on = self.on_route[w];
            self.on_route[w] = true;
            self.used[e] = true;
            self.vertices.push(w);
            self.edges.push(e);
            let keep_going = self.go(emit);
            self.vertices.pop();
            self.edges.pop();
            self.used[e] = false;
            self.on_route[w] = was_on;
            if !keep_going {
                return false;
            }
        }
        true
    }
}
