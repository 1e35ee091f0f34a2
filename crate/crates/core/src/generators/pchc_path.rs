use crate::graph::{Graph, VertexId};
use crate::instance::{Instance, RouteKind};
use crate::route::Route;

use super::{
    add_chain, check_hamiltonian, require_cubic, rotate_to, GenError, GeneratedInstance, NameMap, Orientation,
};

/// Three vertices on the outer face: x2 and x3 are neighbours of x1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OuterTriple {
    pub x1: VertexId,
    pub x2: VertexId,
    pub x3: VertexId,
}

/// Vertex layout: the copy of `g` keeps ids 0..n, then s, t, v, w, then
/// the internals of the chains s-w of lengths 4..=n+1 (`chain[m].i`), then
/// the padding chain. p = n - 1, kind path. With `pad = k > 0` a chain of
/// k edges leads from a new source (`pad[0]`) to s and the budget becomes k,
/// since every route must cross the whole chain in lockstep. The directed
/// orientation turns each edge of the copy into two opposite arcs and
/// directs everything else towards t.
pub fn gen_pchc_path(
    g: &Graph,
    triple: OuterTriple,
    orientation: Orientation,
    pad: usize,
) -> Result<GeneratedInstance, GenError> {
    require_cubic(g)?;
    let n = g.vertex_count();
    let OuterTriple { x1, x2, x3 } = triple;
    for x in [x1, x2, x3] {
        if x >= n {
            return Err(GenError::VertexOutOfRange(x));
        }
    }
    if x1 == x2 || x1 == x3 || x2 == x3 {
        return Err(GenError::TripleNotDistinct);
    }
    for x in [x2, x3] {
        if g.edges_between(x1, x).is_empty() {
            return Err(GenError::NotAdjacent(x1, x));
        }
    }
    let mut h = Graph::new(orientation == Orientation::Directed, n);
    let mut names = NameMap::default();
    for v in 0..n {
        names.insert(format!("h[{v}]"), v);
    }
    for e in g.edges() {
        h.add_edge(e.tail, e.head)?;
        if orientation == Orientation::Directed {
            h.add_edge(e.head, e.tail)?;
        }
    }
    let [s, t, v, w] = [0, 1, 2, 3].map(|_| h.add_vertex());
    for (role, id) in [("s", s), ("t", t), ("v", v), ("w", w)] {
        names.insert(role, id);
    }
    for m in 4..=n + 1 {
        add_chain(&mut h, &mut names, &format!("chain[{m}]"), s, w, m)?;
    }
    for (a, b) in [(s, v), (v, x1), (x2, w), (x3, w), (w, t)] {
        h.add_edge(a, b)?;
    }
    let source = if pad > 0 {
        let start = h.add_vertex();
        names.insert("pad[0]", start);
        add_chain(&mut h, &mut names, "pad", start, s, pad)?;
        start
    } else {
        s
    };
    let instance = Instance::new(h, source, t, n - 1, pad, RouteKind::Path, None)?;
    Ok(GeneratedInstance { instance, names })
}

/// The n - 1 paths for a Hamiltonian cycle of `g`: one through each chain,
/// and s, v, x1, around the cycle, w, t. The cycle must use {x1, x2} or
/// {x1, x3}. Routes are listed chain by chain (shortest first), long path
/// last.
pub fn gen_pchc_path_witness(
    gen: &GeneratedInstance,
    g: &Graph,
    triple: OuterTriple,
    cycle: &[VertexId],
) -> Result<Vec<Route>, GenError> {
    check_hamiltonian(g, cycle)?;
    let n = g.vertex_count();
    let names = &gen.names;
    let role = |r: &str| names.get(r).expect("generated role");
    let (s, t, v, w) = (role("s"), role("t"), role("v"), role("w"));
    let mut order = rotate_to(cycle, triple.x1)?;
    if ![triple.x2, triple.x3].contains(&order[n - 1]) {
        order[1..].reverse();
        if ![triple.x2, triple.x3].contains(&order[n - 1]) {
            return Err(GenError::CycleAvoidsTriple);
        }
    }
    let prefix: Vec<VertexId> = match names.get("pad[0]") {
        Some(start) => {
            let pad = gen.instance.budget;
            let mut p = vec![start];
            p.extend((1..pad).map(|i| role(&format!("pad.{i}"))));
            p
        }
        None => Vec::new(),
    };
    let mut routes = Vec::with_capacity(n - 1);
    for m in 4..=n + 1 {
        let mut vs = prefix.clone();
        vs.push(s);
        vs.extend((1..m).map(|i| role(&format!("chain[{m}].{i}"))));
        vs.extend([w, t]);
        routes.push(Route::new(vs));
    }
    let mut long = prefix;
    long.extend([s, v]);
    long.extend(order);
    long.extend([w, t]);
    routes.push(Route::new(long));
    Ok(routes)
}
