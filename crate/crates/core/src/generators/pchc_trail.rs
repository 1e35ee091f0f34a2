use crate::graph::{subdivide3, EdgeId, Graph, VertexId};
use crate::instance::{Instance, RouteKind};
use crate::route::Route;

use super::{check_hamiltonian, require_cubic, rotate_to, walk_edges, GenError, GeneratedInstance, NameMap};

/// Multigraph before the final subdivision. Vertex layout: the copy of `g`
/// keeps ids 0..n, then one subdivision vertex per edge of `g` (`sub[e]`),
/// then s, v, w, t, then b[1]..b[n-1]. Edges in order: the subdivided copy
/// (edge e becomes 2e, 2e + 1), then {s,x}, {s,v}, {v,w}, {w,t}, {x,w},
/// then two parallel edges {s,b[i]} per i. p = 2n, k = 0, kind trail.
pub fn gen_pchc_trail_unsubdivided(g: &Graph, x: VertexId) -> Result<GeneratedInstance, GenError> {
    require_cubic(g)?;
    let n = g.vertex_count();
    if x >= n {
        return Err(GenError::VertexOutOfRange(x));
    }
    let mut h = Graph::undirected(n);
    let mut names = NameMap::default();
    for v in 0..n {
        names.insert(format!("h[{v}]"), v);
    }
    names.insert("x", x);
    for (i, e) in g.edges().iter().enumerate() {
        let mid = h.add_vertex();
        names.insert(format!("sub[{i}]"), mid);
        h.add_edge(e.tail, mid)?;
        h.add_edge(mid, e.head)?;
    }
    let [s, v, w, t] = [0, 1, 2, 3].map(|_| h.add_vertex());
    for (role, id) in [("s", s), ("v", v), ("w", w), ("t", t)] {
        names.insert(role, id);
    }
    for (a, b) in [(s, x), (s, v), (v, w), (w, t), (x, w)] {
        h.add_edge(a, b)?;
    }
    for i in 1..n {
        let b = h.add_vertex();
        names.insert(format!("b[{i}]"), b);
        h.add_edge(s, b)?;
        h.add_edge(s, b)?;
    }
    let instance = Instance::new(h, s, t, 2 * n, 0, RouteKind::Trail, None)?;
    Ok(GeneratedInstance { instance, names })
}

/// [`gen_pchc_trail_unsubdivided`] with every edge replaced by a path of
/// length three, which makes the graph simple. Names of the multigraph carry
/// over; the new vertices on edge e are `path[e].1` and `path[e].2`.
pub fn gen_pchc_trail(g: &Graph, x: VertexId) -> Result<GeneratedInstance, GenError> {
    let base = gen_pchc_trail_unsubdivided(g, x)?;
    let sub = subdivide3(&base.instance.graph)?;
    let mut names = base.names;
    for (e, path) in sub.paths.iter().enumerate() {
        names.insert(format!("path[{e}].1"), path[1]);
        names.insert(format!("path[{e}].2"), path[2]);
    }
    let instance = Instance { graph: sub.graph, ..base.instance };
    Ok(GeneratedInstance { instance, names })
}

/// The 2n trails for a Hamiltonian cycle of `g`, for the subdivided
/// instance (or the multigraph with `subdivided = false`). Group 1 trail j
/// visits b[j..n) going out on the first parallel edge and back on the
/// second, then runs s, v, w, t; group 2 uses the parallel edges the other
/// way round, then s, x, around the subdivided cycle, x, w, t. Trails are
/// listed group 1 first, each group ordered by j.
pub fn gen_pchc_trail_witness(
    g: &Graph,
    x: VertexId,
    cycle: &[VertexId],
    subdivided: bool,
) -> Result<Vec<Route>, GenError> {
    check_hamiltonian(g, cycle)?;
    let base = gen_pchc_trail_unsubdivided(g, x)?;
    let h = &base.instance.graph;
    let n = g.vertex_count();
    let me = g.edge_count();
    // edge ids fixed by the layout above
    let gadget = 2 * me;
    let (sx, sv, vw, wt, xw) = (gadget, gadget + 1, gadget + 2, gadget + 3, gadget + 4);
    let b_edges = |i: usize| (gadget + 5 + 2 * (i - 1), gadget + 6 + 2 * (i - 1));
    let s = base.names.get("s").unwrap();

    let order = rotate_to(cycle, x)?;
    let mut around: Vec<EdgeId> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (a, b) = (order[i], order[(i + 1) % n]);
        let e = (0..me)
            .find(|&e| {
                let ed = g.edge(e);
                (ed.tail, ed.head) == (a, b) || (ed.tail, ed.head) == (b, a)
            })
            .expect("cycle edge exists");
        let into_mid = if g.edge(e).tail == a { 2 * e } else { 2 * e + 1 };
        let out_of_mid = if into_mid == 2 * e { 2 * e + 1 } else { 2 * e };
        around.extend([into_mid, out_of_mid]);
    }

    let mut routes = Vec::with_capacity(2 * n);
    for group in [1, 2] {
        for j in 1..=n {
            let mut edges = Vec::new();
            for i in j..n {
                let (first, second) = b_edges(i);
                if group == 1 {
                    edges.extend([first, second]);
                } else {
                    edges.extend([second, first]);
                }
            }
            if group == 1 {
                edges.extend([sv, vw, wt]);
            } else {
                edges.push(sx);
                edges.extend(&around);
                edges.extend([xw, wt]);
            }
            routes.push(walk_edges(h, s, &edges));
        }
    }
    if !subdivided {
        return Ok(routes);
    }
    let sub = subdivide3(h)?;
    Ok(routes
        .iter()
        .map(|r| {
            let mut edges = Vec::with_capacity(3 * r.len());
            for (step, e) in r.pins().iter().enumerate() {
                let e = e.expect("pinned");
                let forward = sub.paths[e][0] == r.vertices()[step];
                let mut p = sub.edge_paths[e];
                if !forward {
                    p.reverse();
                }
                edges.extend(p);
            }
            walk_edges(&sub.graph, s, &edges)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_solution, Verdict};

    fn k4() -> Graph {
        Graph::from_edges(false, 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_counts() {
        let base = gen_pchc_trail_unsubdivided(&k4(), 0).unwrap();
        assert_eq!(base.instance.graph.vertex_count(), 17);
        assert_eq!(base.instance.graph.edge_count(), 12 + 5 + 6);
        let gen = gen_pchc_trail(&k4(), 0).unwrap();
        assert_eq!(gen.instance.graph.vertex_count(), 17 + 2 * 23);
        assert_eq!(gen.instance.graph.edge_count(), 3 * 23);
        assert_eq!(gen.instance.route_count, 8);
    }

    #[test]
    fn k4_witness_is_accepted() {
        for subdivided in [false, true] {
            let inst = if subdivided {
                gen_pchc_trail(&k4(), 2).unwrap().instance
            } else {
                gen_pchc_trail_unsubdivided(&k4(), 2).unwrap().instance
            };
            let routes = gen_pchc_trail_witness(&k4(), 2, &[0, 1, 2, 3], subdivided).unwrap();
            let Verdict::Accept { shared } = verify_solution(&inst, &routes) else { panic!() };
            assert!(shared.is_empty());
        }
    }
}
