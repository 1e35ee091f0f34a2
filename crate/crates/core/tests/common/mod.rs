//! Shared helpers for the integration tests: seeded random inputs and small
//! reference computations written independently of the library.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rca::flow::TimeExpandedNetwork;
use rca::{Graph, Instance, RouteKind};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` arcs drawn uniformly with replacement from the ordered pairs of
/// distinct vertices, so parallel arcs can occur.
pub fn random_directed(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut g = Graph::directed(n);
    for _ in 0..m {
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        g.add_edge(a, b).unwrap();
    }
    g
}

/// Simple connected undirected graph: a random spanning tree plus up to
/// `extra` further distinct edges.
pub fn random_connected_simple(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut g = Graph::undirected(n);
    let mut present = HashSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        let (a, b) = (order[i].min(parent), order[i].max(parent));
        present.insert((a, b));
        g.add_edge(a, b).unwrap();
    }
    for _ in 0..extra {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        let key = (a.min(b), a.max(b));
        if a != b && present.insert(key) {
            g.add_edge(key.0, key.1).unwrap();
        }
    }
    g
}

pub fn distinct_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let s = rng.random_range(0..n);
    let mut t = rng.random_range(0..n - 1);
    if t >= s {
        t += 1;
    }
    (s, t)
}

pub fn instance(g: Graph, s: usize, t: usize, p: usize, k: usize, kind: RouteKind, alpha: Option<usize>) -> Instance {
    Instance::new(g, s, t, p, k, kind, alpha).unwrap()
}

/// Longest finite BFS distance to `t`, computed here rather than by the
/// library.
pub fn dist_to(g: &Graph, t: usize) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    dist[t] = Some(0);
    let mut queue = VecDeque::from([t]);
    while let Some(u) = queue.pop_front() {
        for e in g.edges() {
            let mut preds = vec![];
            if e.head == u {
                preds.push(e.tail);
            }
            if !g.is_directed() && e.tail == u {
                preds.push(e.head);
            }
            for w in preds {
                if dist[w].is_none() {
                    dist[w] = Some(dist[u].unwrap() + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

pub fn d_t(g: &Graph, t: usize) -> usize {
    dist_to(g, t).into_iter().flatten().max().unwrap_or(0)
}

/// Maximum flow by Edmonds-Karp on a dense capacity matrix.
pub fn reference_max_flow(net: &TimeExpandedNetwork) -> u64 {
    let n = net.node_count();
    let mut cap = vec![vec![0u64; n]; n];
    for a in net.arcs() {
        cap[a.from][a.to] += a.capacity as u64;
    }
    let (s, t) = (net.source_node(), net.sink_node());
    let mut total = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return total;
        }
        let mut bottleneck = u64::MAX;
        let mut v = t;
        while v != s {
            bottleneck = bottleneck.min(cap[prev[v]][v]);
            v = prev[v];
        }
        let mut v = t;
        while v != s {
            cap[prev[v]][v] -= bottleneck;
            cap[v][prev[v]] += bottleneck;
            v = prev[v];
        }
        total += bottleneck;
    }
}

/// Edge sequences of every s-t route of `kind` with at most `cap` steps,
/// ending at the first visit of t.
pub fn naive_routes(g: &Graph, s: usize, t: usize, kind: RouteKind, cap: usize) -> Vec<Vec<usize>> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &Graph,
        t: usize,
        kind: RouteKind,
        cap: usize,
        at: usize,
        seen: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == t {
            out.push(edges.clone());
            return;
        }
        if edges.len() == cap {
            return;
        }
        for (e, ed) in g.edges().iter().enumerate() {
            let next = if ed.tail == at {
                ed.head
            } else if !g.is_directed() && ed.head == at {
                ed.tail
            } else {
                continue;
            };
            if kind == RouteKind::Path && seen.contains(&next) {
                continue;
            }
            if kind == RouteKind::Trail && edges.contains(&e) {
                continue;
            }
            seen.push(next);
            edges.push(e);
            go(g, t, kind, cap, next, seen, edges, out);
            edges.pop();
            seen.pop();
        }
    }
    let mut out = Vec::new();
    go(g, t, kind, cap, s, &mut vec![s], &mut Vec::new(), &mut out);
    out
}

/// Number of edges used by two routes at the same step.
pub fn naive_shared(routes: &[&Vec<usize>]) -> usize {
    let mut shared = HashSet::new();
    for i in 0..routes.len() {
        for j in i + 1..routes.len() {
            for (a, b) in routes[i].iter().zip(routes[j].iter()) {
                if a == b {
                    shared.insert(*a);
                }
            }
        }
    }
    shared.len()
}

/// Minimum sharing over all multisets of `p` routes, by plain enumeration.
pub fn naive_min_shared(g: &Graph, s: usize, t: usize, p: usize, kind: RouteKind, cap: usize) -> Option<usize> {
    let routes = naive_routes(g, s, t, kind, cap);
    if routes.is_empty() {
        return None;
    }
    let mut best = usize::MAX;
    let mut idx = vec![0usize; p];
    loop {
        let chosen: Vec<&Vec<usize>> = idx.iter().map(|&i| &routes[i]).collect();
        best = best.min(naive_shared(&chosen));
        // next nondecreasing index tuple
        let mut pos = p;
        while pos > 0 && idx[pos - 1] == routes.len() - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return Some(best);
        }
        idx[pos - 1] += 1;
        let v = idx[pos - 1];
        for slot in idx.iter_mut().skip(pos) {
            *slot = v;
        }
    }
}

/// Small cubic graphs: K4, triangular prism, K3,3, cube.
pub fn k4() -> Graph {
    Graph::from_edges(false, 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn prism() -> Graph {
    Graph::from_edges(false, 6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()
}

pub fn k33() -> Graph {
    Graph::from_edges(false, 6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap()
}

pub fn cube() -> Graph {
    let mut g = Graph::undirected(8);
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                g.add_edge(v, v | bit).unwrap();
            }
        }
    }
    g
}

/// `g` with vertices renamed by a random permutation and edges shuffled.
pub fn relabel(rng: &mut impl Rng, g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (perm[e.tail], perm[e.head])).collect();
    edges.shuffle(rng);
    Graph::from_edges(g.is_directed(), n, edges).unwrap()
}
