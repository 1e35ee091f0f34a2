//! Instance generators for the hardness constructions, with the intended
//! certificates for yes-instances of the source problems.

mod dp23hc;
mod pchc_path;
mod pchc_trail;
mod setcover;

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphError, VertexId};
use crate::instance::{Instance, InstanceError};

pub use dp23hc::{gen_dp23hc_trail, gen_dp23hc_trail_witness};
pub use pchc_path::{gen_pchc_path, gen_pchc_path_witness, OuterTriple};
pub use pchc_trail::{gen_pchc_trail, gen_pchc_trail_unsubdivided, gen_pchc_trail_witness};
pub use setcover::{gen_setcover, gen_setcover_witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("vertex {vertex} has degree {degree}, expected a cubic graph")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("vertex {vertex} violates the degree bounds (in {indeg}, out {outdeg})")]
    DegreeBound { vertex: VertexId, indeg: usize, outdeg: usize },
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("vertex {0} does not exist")]
    VertexOutOfRange(VertexId),
    #[error("outer triple must consist of three distinct vertices")]
    TripleNotDistinct,
    #[error("not a Hamiltonian cycle: {0}")]
    InvalidCycle(String),
    #[error("cycle uses neither {{x1,x2}} nor {{x1,x3}}; supply a cycle through one of them")]
    CycleAvoidsTriple,
    #[error("not a set cover within the budget: {0}")]
    InvalidCover(String),
    #[error("set cover instance with no elements and no sets yields no routes")]
    EmptySetCover,
    #[error("{0}")]
    WrongGraphType(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// Whether a generator emits a directed or an undirected graph. For Set
/// Cover the directed output is acyclic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Directed,
    Undirected,
}

/// Roles of gadget vertices, e.g. `s`, `elem[0]`, `chain[4].2`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NameMap(Vec<(String, VertexId)>);

impl NameMap {
    pub fn insert(&mut self, role: impl Into<String>, v: VertexId) {
        self.0.push((role.into(), v));
    }

    pub fn get(&self, role: &str) -> Option<VertexId> {
        self.0.iter().find(|(r, _)| r == role).map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, VertexId)> {
        self.0.iter().map(|(r, v)| (r.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `<role> <vertex-id>` lines in vertex order.
    pub fn to_text(&self) -> String {
        let mut entries: Vec<_> = self.0.iter().collect();
        entries.sort_by_key(|(r, v)| (*v, r.clone()));
        let mut out = String::new();
        for (role, v) in entries {
            writeln!(out, "{role} {v}").unwrap();
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub instance: Instance,
    pub names: NameMap,
}

/// Appends a chain of `len` edges from `from` to `to` with `len - 1` fresh
/// internal vertices named `<label>.1`, `<label>.2`, ...; returns its edges.
fn add_chain(
    g: &mut Graph,
    names: &mut NameMap,
    label: &str,
    from: VertexId,
    to: VertexId,
    len: usize,
) -> Result<Vec<EdgeId>, GraphError> {
    assert!(len >= 1);
    let mut edges = Vec::with_capacity(len);
    let mut at = from;
    for i in 1..len {
        let next = g.add_vertex();
        names.insert(format!("{label}.{i}"), next);
        edges.push(g.add_edge(at, next)?);
        at = next;
    }
    edges.push(g.add_edge(at, to)?);
    Ok(edges)
}

fn require_cubic(g: &Graph) -> Result<(), GenError> {
    if g.is_directed() {
        return Err(GenError::WrongGraphType("construction needs an undirected cubic graph"));
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) != 3 {
            return Err(GenError::NotCubic { vertex: v, degree: g.degree(v) });
        }
    }
    Ok(())
}

/// Checks that `cycle` lists every vertex once and that consecutive vertices
/// (cyclically) are joined by an edge usable in that direction.
fn check_hamiltonian(g: &Graph, cycle: &[VertexId]) -> Result<(), GenError> {
    let n = g.vertex_count();
    if cycle.len() != n || n < 3 {
        return Err(GenError::InvalidCycle(format!("expected {n} vertices, got {}", cycle.len())));
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(GenError::InvalidCycle(format!("vertex {v} is repeated or out of range")));
        }
    }
    for i in 0..n {
        let (a, b) = (cycle[i], cycle[(i + 1) % n]);
        if g.edges_between(a, b).is_empty() {
            return Err(GenError::InvalidCycle(format!("no edge from {a} to {b}")));
        }
    }
    Ok(())
}

/// Cycle rotated so that it starts at `x`.
fn rotate_to(cycle: &[VertexId], x: VertexId) -> Result<Vec<VertexId>, GenError> {
    let i =
        cycle.iter().position(|&v| v == x).ok_or_else(|| GenError::InvalidCycle(format!("vertex {x} is missing")))?;
    Ok(cycle[i..].iter().chain(&cycle[..i]).copied().collect())
}

/// Route following `edges` from `start`.
fn walk_edges(g: &Graph, start: VertexId, edges: &[EdgeId]) -> crate::route::Route {
    crate::route::Route::from_edge_sequence(g, start, edges).expect("generator routes follow edges")
}
