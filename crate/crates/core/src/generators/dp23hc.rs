use crate::graph::{Graph, VertexId};
use crate::instance::{Instance, RouteKind};
use crate::route::Route;

use super::{add_chain, check_hamiltonian, rotate_to, GenError, GeneratedInstance, NameMap};

/// Input: a directed graph with in- and out-degree at most 2 and total
/// degree at most 3 at every vertex. Vertex layout: the copy of `g` keeps
/// ids 0..n, then s, t, v, w, then the internals of the chains s -> w of
/// lengths 3..=n+2 (`chain[m].i`). Arcs (s,v), (v,x), (x,w), (w,t).
/// p = n + 1, k = 0, kind trail.
pub fn gen_dp23hc_trail(g: &Graph, x: VertexId) -> Result<GeneratedInstance, GenError> {
    if !g.is_directed() {
        return Err(GenError::WrongGraphType("construction needs a directed graph"));
    }
    let n = g.vertex_count();
    if x >= n {
        return Err(GenError::VertexOutOfRange(x));
    }
    for vertex in 0..n {
        let (indeg, outdeg) = (g.in_degree(vertex), g.degree(vertex));
        if indeg > 2 || outdeg > 2 || indeg + outdeg > 3 {
            return Err(GenError::DegreeBound { vertex, indeg, outdeg });
        }
    }
    let mut h = g.clone();
    let mut names = NameMap::default();
    for u in 0..n {
        names.insert(format!("h[{u}]"), u);
    }
    names.insert("x", x);
    let [s, t, v, w] = [0, 1, 2, 3].map(|_| h.add_vertex());
    for (role, id) in [("s", s), ("t", t), ("v", v), ("w", w)] {
        names.insert(role, id);
    }
    for m in 3..=n + 2 {
        add_chain(&mut h, &mut names, &format!("chain[{m}]"), s, w, m)?;
    }
    for (a, b) in [(s, v), (v, x), (x, w), (w, t)] {
        h.add_edge(a, b)?;
    }
    let instance = Instance::new(h, s, t, n + 1, 0, RouteKind::Trail, None)?;
    Ok(GeneratedInstance { instance, names })
}

/// One trail per chain (shortest first), then s, v, x, around the directed
/// Hamiltonian cycle back to x, w, t.
pub fn gen_dp23hc_trail_witness(
    gen: &GeneratedInstance,
    g: &Graph,
    cycle: &[VertexId],
) -> Result<Vec<Route>, GenError> {
    check_hamiltonian(g, cycle)?;
    let n = g.vertex_count();
    let role = |r: &str| gen.names.get(r).expect("generated role");
    let (s, t, v, w, x) = (role("s"), role("t"), role("v"), role("w"), role("x"));
    let mut routes = Vec::with_capacity(n + 1);
    for m in 3..=n + 2 {
        let mut vs = vec![s];
        vs.extend((1..m).map(|i| role(&format!("chain[{m}].{i}"))));
        vs.extend([w, t]);
        routes.push(Route::new(vs));
    }
    let mut long = vec![s, v];
    long.extend(rotate_to(cycle, x)?);
    long.extend([x, w, t]);
    routes.push(Route::new(long));
    Ok(routes)
}
