//! Multigraph representation and the structural transformations the solvers
//! and generators build on.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: VertexId, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge id {edge} out of range (graph has {count} edges)")]
    EdgeOutOfRange { edge: EdgeId, count: usize },
    #[error("{0} requires a directed graph")]
    NeedsDirected(&'static str),
    #[error("{0} requires an undirected graph")]
    NeedsUndirected(&'static str),
}

/// One edge (or arc). Undirected edges are stored with `tail < head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

/// Directed or undirected multigraph over dense vertex ids `0..n`.
///
/// Edge ids are dense and follow insertion order. Parallel edges are allowed,
/// self-loops are not. The adjacency list of a vertex holds its out-arcs when
/// the graph is directed and all incident edges otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<EdgeId>>,
    in_adjacency: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(directed: bool, vertex_count: usize) -> Self {
        Graph {
            directed,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
            in_adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn directed(vertex_count: usize) -> Self {
        Self::new(true, vertex_count)
    }

    pub fn undirected(vertex_count: usize) -> Self {
        Self::new(false, vertex_count)
    }

    /// Builds a graph from an edge list, validating every endpoint.
    pub fn from_edges(
        directed: bool,
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(directed, vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        self.in_adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    pub fn add_edge(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.vertex_count();
        for v in [tail, head] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, count: n });
            }
        }
        if tail == head {
            return Err(GraphError::SelfLoop(tail));
        }
        let edge =
            if self.directed { Edge { tail, head } } else { Edge { tail: tail.min(head), head: tail.max(head) } };
        let id = self.edges.len();
        self.edges.push(edge);
        self.adjacency[edge.tail].push(id);
        if self.directed {
            self.in_adjacency[edge.head].push(id);
        } else {
            self.adjacency[edge.head].push(id);
        }
        Ok(id)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Out-arcs (directed) or incident edges (undirected) of `v`.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adjacency[v]
    }

    /// In-arcs of `v`; for undirected graphs this equals [`Graph::incident`].
    pub fn incoming(&self, v: VertexId) -> &[EdgeId] {
        if self.directed {
            &self.in_adjacency[v]
        } else {
            &self.adjacency[v]
        }
    }

    /// Out-degree when directed, degree otherwise.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.incoming(v).len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| if self.directed { self.degree(v) + self.in_degree(v) } else { self.degree(v) })
            .max()
            .unwrap_or(0)
    }

    /// The endpoint reached when traversing `e` out of `from`, or `None` if
    /// `e` cannot be traversed out of `from` (wrong direction or not incident).
    pub fn traverse(&self, e: EdgeId, from: VertexId) -> Option<VertexId> {
        let Edge { tail, head } = self.edges[e];
        if tail == from {
            Some(head)
        } else if !self.directed && head == from {
            Some(tail)
        } else {
            None
        }
    }

    /// `(edge, next vertex)` for every step that can be taken out of `v`.
    pub fn steps(&self, v: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.adjacency[v].iter().map(move |&e| (e, self.traverse(e, v).expect("adjacency is consistent")))
    }

    /// All parallel copies that realise a step `u -> v`, in id order.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return Vec::new();
        }
        self.adjacency[u].iter().copied().filter(|&e| self.traverse(e, u) == Some(v)).collect()
    }

    /// Directed copy of an undirected graph: edge `i` becomes arcs `2i`
    /// (tail to head) and `2i + 1` (head to tail). Directed graphs are
    /// returned unchanged with the identity map.
    pub fn bidirected(&self) -> (Graph, Vec<EdgeId>) {
        if self.directed {
            return (self.clone(), (0..self.edge_count()).collect());
        }
        let mut g = Graph::directed(self.vertex_count());
        let mut origin = Vec::with_capacity(2 * self.edge_count());
        for (id, e) in self.edges.iter().enumerate() {
            g.add_edge(e.tail, e.head).expect("valid edge");
            g.add_edge(e.head, e.tail).expect("valid edge");
            origin.push(id);
            origin.push(id);
        }
        (g, origin)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.directed { "->" } else { "--" };
        write!(f, "{}[", if self.directed { "digraph" } else { "graph" })?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", e.tail, sep, e.head)?;
        }
        write!(f, "]")
    }
}

/// Sorted, duplicate-free set of edge ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        match self.0.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, e);
                true
            }
        }
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    /// Fails if some id is not an edge of `g`.
    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&e) if e >= g.edge_count() => Err(GraphError::EdgeOutOfRange { edge: e, count: g.edge_count() }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut v: Vec<EdgeId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

impl From<Vec<EdgeId>> for EdgeSet {
    fn from(v: Vec<EdgeId>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a EdgeId;
    type IntoIter = std::slice::Iter<'a, EdgeId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Graph with some arcs replaced by parallel copies, plus the map from each
/// new edge id back to the edge it copies.
#[derive(Debug, Clone)]
pub struct Replicated {
    pub graph: Graph,
    pub original: Vec<EdgeId>,
}

/// Replaces every edge in `k_set` by `copies` parallel copies with
/// consecutive ids. Edges keep their relative order.
pub fn replicate_arcs(g: &Graph, k_set: &EdgeSet, copies: usize) -> Result<Replicated, GraphError> {
    k_set.check(g)?;
    let mut graph = Graph::new(g.is_directed(), g.vertex_count());
    let mut original = Vec::with_capacity(g.edge_count() + copies.saturating_sub(1) * k_set.len());
    for (id, e) in g.edges().iter().enumerate() {
        let times = if k_set.contains(id) { copies } else { 1 };
        for _ in 0..times {
            graph.add_edge(e.tail, e.head)?;
            original.push(id);
        }
    }
    Ok(Replicated { graph, original })
}

/// Hop distances from `from`, following edge directions. `None` = unreachable.
pub fn bfs_distance(g: &Graph, from: VertexId) -> Vec<Option<usize>> {
    bfs(g, from, false)
}

/// Hop distances from every vertex to `to`.
pub fn distances_to(g: &Graph, to: VertexId) -> Vec<Option<usize>> {
    bfs(g, to, true)
}

fn bfs(g: &Graph, root: VertexId, reverse: bool) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[root] = Some(0);
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        let list = if reverse { g.incoming(u) } else { g.incident(u) };
        for &e in list {
            let Edge { tail, head } = g.edge(e);
            let w = if tail == u { head } else { tail };
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Largest finite distance from any vertex to `t`.
pub fn sink_eccentricity(g: &Graph, t: VertexId) -> usize {
    distances_to(g, t).into_iter().flatten().max().unwrap_or(0)
}

/// Result of [`subdivide3`]: `paths[e]` lists the four vertices of the path
/// replacing edge `e`, from its stored tail to its stored head, and
/// `edge_paths[e]` the three edge ids in the same order.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    pub paths: Vec<[VertexId; 4]>,
    pub edge_paths: Vec<[EdgeId; 3]>,
}

/// Replaces every edge by a path of length three through two fresh vertices.
/// Original vertices keep their ids; new vertices are appended edge by edge.
pub fn subdivide3(g: &Graph) -> Result<Subdivision, GraphError> {
    if g.is_directed() {
        return Err(GraphError::NeedsUndirected("subdivide3"));
    }
    let mut graph = Graph::undirected(g.vertex_count());
    let mut paths = Vec::with_capacity(g.edge_count());
    let mut edge_paths = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let a = graph.add_vertex();
        let b = graph.add_vertex();
        let e1 = graph.add_edge(e.tail, a)?;
        let e2 = graph.add_edge(a, b)?;
        let e3 = graph.add_edge(b, e.head)?;
        paths.push([e.tail, a, b, e.head]);
        edge_paths.push([e1, e2, e3]);
    }
    Ok(Subdivision { graph, paths, edge_paths })
}

/// Kahn's algorithm; true iff the directed graph has no cycle.
pub fn is_dag(g: &Graph) -> Result<bool, GraphError> {
    if !g.is_directed() {
        return Err(GraphError::NeedsDirected("is_dag"));
    }
    let n = g.vertex_count();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for &e in g.incident(u) {
            let w = g.edge(e).head;
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    Ok(seen == n)
}
