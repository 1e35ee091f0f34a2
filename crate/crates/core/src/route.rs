//! Routes as timed vertex sequences, their classification, and time-wise
//! edge sharing.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::instance::RouteKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RouteError {
    #[error("route has no vertices")]
    Empty,
    #[error("vertex {vertex} at position {position} is not in the graph")]
    VertexOutOfRange { position: usize, vertex: VertexId },
    #[error("no edge {from} -> {to} for time step {step}")]
    NoEdge { step: usize, from: VertexId, to: VertexId },
    #[error("edge {edge} does not join the endpoints of time step {step}")]
    PinMismatch { step: usize, edge: EdgeId },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("route {route}: {source}")]
pub struct InvalidRoute {
    pub route: usize,
    pub source: RouteError,
}

/// A vertex sequence read as a timed traversal: the edge between positions
/// `i` and `i + 1` is used at time step `i + 1`.
///
/// On multigraphs a step may be pinned to a specific parallel copy. Unpinned
/// steps resolve to the lowest-id copy this route has not used yet, falling
/// back to the lowest-id copy once all are taken.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Route {
    vertices: Vec<VertexId>,
    pins: Vec<Option<EdgeId>>,
}

impl Route {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        let steps = vertices.len().saturating_sub(1);
        Route { vertices, pins: vec![None; steps] }
    }

    /// Route with every step pinned; `edges.len()` must be `vertices.len() - 1`.
    pub fn with_edges(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        assert_eq!(edges.len() + 1, vertices.len().max(1), "one edge per step");
        Route { vertices, pins: edges.into_iter().map(Some).collect() }
    }

    /// Walks `edges` out of `start` in `g`.
    pub fn from_edge_sequence(g: &Graph, start: VertexId, edges: &[EdgeId]) -> Option<Self> {
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        vertices.push(start);
        let mut at = start;
        for &e in edges {
            at = g.traverse(e, at)?;
            vertices.push(at);
        }
        Some(Route::with_edges(vertices, edges.to_vec()))
    }

    pub fn with_pins(vertices: Vec<VertexId>, pins: Vec<Option<EdgeId>>) -> Self {
        assert_eq!(pins.len() + 1, vertices.len().max(1), "one pin slot per step");
        Route { vertices, pins }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn pins(&self) -> &[Option<EdgeId>] {
        &self.pins
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.pins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn start(&self) -> Option<VertexId> {
        self.vertices.first().copied()
    }

    pub fn end(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    pub fn unpinned(&self) -> Route {
        Route::new(self.vertices.clone())
    }

    /// Maps every step (pinned or not) to a concrete edge id of `g`.
    pub fn resolve(&self, g: &Graph) -> Result<Vec<EdgeId>, RouteError> {
        if self.vertices.is_empty() {
            return Err(RouteError::Empty);
        }
        for (position, &vertex) in self.vertices.iter().enumerate() {
            if vertex >= g.vertex_count() {
                return Err(RouteError::VertexOutOfRange { position, vertex });
            }
        }
        let mut copies = Vec::with_capacity(self.len());
        for (i, w) in self.vertices.windows(2).enumerate() {
            let c = g.edges_between(w[0], w[1]);
            if c.is_empty() {
                return Err(RouteError::NoEdge { step: i + 1, from: w[0], to: w[1] });
            }
            if let Some(e) = self.pins[i] {
                if !c.contains(&e) {
                    return Err(RouteError::PinMismatch { step: i + 1, edge: e });
                }
            }
            copies.push(c);
        }
        let mut used: Vec<EdgeId> = self.pins.iter().flatten().copied().collect();
        let mut out = Vec::with_capacity(self.len());
        for (i, c) in copies.iter().enumerate() {
            let e = match self.pins[i] {
                Some(e) => e,
                None => {
                    let e = c.iter().copied().find(|e| !used.contains(e)).unwrap_or(c[0]);
                    used.push(e);
                    e
                }
            };
            out.push(e);
        }
        Ok(out)
    }

    /// Same route with each step pinned to its resolved copy.
    pub fn pinned(&self, g: &Graph) -> Result<Route, RouteError> {
        let edges = self.resolve(g)?;
        Ok(Route::with_edges(self.vertices.clone(), edges))
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " {v}")?;
                if let Some(e) = self.pins[i - 1] {
                    write!(f, "@{e}")?;
                }
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Strongest route type a vertex sequence satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RouteClass {
    Invalid,
    Walk,
    Trail,
    Path,
}

impl RouteClass {
    pub fn satisfies(self, kind: RouteKind) -> bool {
        let needed = match kind {
            RouteKind::Walk => RouteClass::Walk,
            RouteKind::Trail => RouteClass::Trail,
            RouteKind::Path => RouteClass::Path,
        };
        self >= needed
    }
}

pub fn classify(g: &Graph, r: &Route) -> RouteClass {
    let Ok(edges) = r.resolve(g) else {
        return RouteClass::Invalid;
    };
    let mut vs = r.vertices().to_vec();
    vs.sort_unstable();
    if vs.windows(2).all(|w| w[0] != w[1]) {
        return RouteClass::Path;
    }
    let mut es = edges;
    es.sort_unstable();
    if es.windows(2).all(|w| w[0] != w[1]) {
        RouteClass::Trail
    } else {
        RouteClass::Walk
    }
}

/// Edges traversed by two different routes of the list at the same time step.
/// Direction is irrelevant on undirected graphs.
pub fn shared_edges(g: &Graph, routes: &[Route]) -> Result<EdgeSet, InvalidRoute> {
    let mut first_user: HashMap<(usize, EdgeId), usize> = HashMap::new();
    let mut shared = EdgeSet::new();
    for (idx, r) in routes.iter().enumerate() {
        let edges = r.resolve(g).map_err(|source| InvalidRoute { route: idx, source })?;
        for (step, e) in edges.into_iter().enumerate() {
            match first_user.get(&(step, e)) {
                Some(&other) if other != idx => {
                    shared.insert(e);
                }
                Some(_) => {}
                None => {
                    first_user.insert((step, e), idx);
                }
            }
        }
    }
    Ok(shared)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        // s=0 a=1 b=2 t=3
        Graph::from_edges(true, 4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn classify_basic() {
        let g = diamond();
        assert_eq!(classify(&g, &Route::new(vec![0, 1, 3])), RouteClass::Path);
        assert_eq!(classify(&g, &Route::new(vec![0, 3])), RouteClass::Invalid);
        assert_eq!(classify(&g, &Route::new(vec![0, 9])), RouteClass::Invalid);
        assert_eq!(classify(&g, &Route::new(vec![])), RouteClass::Invalid);
        assert_eq!(classify(&g, &Route::new(vec![0])), RouteClass::Path);
    }

    #[test]
    fn alternation_is_a_walk() {
        let g = Graph::from_edges(false, 3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(classify(&g, &Route::new(vec![0, 1, 0, 1, 2])), RouteClass::Walk);
        assert!(RouteClass::Walk.satisfies(RouteKind::Walk));
        assert!(!RouteClass::Walk.satisfies(RouteKind::Trail));
        assert!(RouteClass::Path.satisfies(RouteKind::Walk));
    }

    #[test]
    fn trail_needs_enough_parallel_copies() {
        // directed 3-cycle 0->1->2->0
        let single = Graph::from_edges(true, 3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = Route::new(vec![0, 1, 2, 0, 1]);
        assert_eq!(classify(&single, &r), RouteClass::Walk);
        let doubled = Graph::from_edges(true, 3, [(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        assert_eq!(classify(&doubled, &r), RouteClass::Trail);
        assert_eq!(r.resolve(&doubled).unwrap(), vec![0, 1, 2, 3]);
        // pinning both uses to the same copy makes it a walk again
        let pinned = Route::with_pins(vec![0, 1, 2, 0, 1], vec![Some(3), None, None, Some(3)]);
        assert_eq!(classify(&doubled, &pinned), RouteClass::Walk);
        // a pin on the later step steers the unpinned earlier step away
        let later = Route::with_pins(vec![0, 1, 2, 0, 1], vec![None, None, None, Some(0)]);
        assert_eq!(later.resolve(&doubled).unwrap(), vec![3, 1, 2, 0]);
    }

    #[test]
    fn pin_must_match_step() {
        let g = diamond();
        let r = Route::with_pins(vec![0, 1, 3], vec![Some(2), None]);
        assert_eq!(r.resolve(&g), Err(RouteError::PinMismatch { step: 1, edge: 2 }));
    }

    #[test]
    fn sharing_examples() {
        let path = Graph::from_edges(true, 3, [(0, 1), (1, 2)]).unwrap();
        let r = Route::new(vec![0, 1, 2]);
        assert_eq!(shared_edges(&path, &[r.clone(), r]).unwrap(), EdgeSet::from(vec![0, 1]));

        let g = diamond();
        let a = Route::new(vec![0, 1, 3]);
        let b = Route::new(vec![0, 2, 3]);
        assert!(shared_edges(&g, &[a, b]).unwrap().is_empty());

        // s=0 v=1 t=2 w=3: arcs s->v, v->t, s->w, w->s
        let g = Graph::from_edges(true, 4, [(0, 1), (1, 2), (0, 3), (3, 0)]).unwrap();
        let short = Route::new(vec![0, 1, 2]);
        let long = Route::new(vec![0, 3, 0, 1, 2]);
        assert!(shared_edges(&g, &[short, long]).unwrap().is_empty());
    }

    #[test]
    fn opposite_directions_share_on_undirected() {
        let g = Graph::from_edges(false, 2, [(0, 1)]).unwrap();
        let a = Route::new(vec![0, 1]);
        let b = Route::new(vec![1, 0]);
        assert_eq!(shared_edges(&g, &[a, b]).unwrap(), EdgeSet::from(vec![0]));
    }

    #[test]
    fn parallel_copies_do_not_collide() {
        let g = Graph::from_edges(true, 2, [(0, 1), (0, 1)]).unwrap();
        let a = Route::with_pins(vec![0, 1], vec![Some(0)]);
        let b = Route::with_pins(vec![0, 1], vec![Some(1)]);
        assert!(shared_edges(&g, &[a.clone(), b]).unwrap().is_empty());
        assert_eq!(shared_edges(&g, &[a.clone(), a]).unwrap().len(), 1);
    }

    #[test]
    fn invalid_route_is_reported_by_index() {
        let g = diamond();
        let err = shared_edges(&g, &[Route::new(vec![0, 1, 3]), Route::new(vec![0, 3])]).unwrap_err();
        assert_eq!(err.route, 1);
    }

    #[test]
    fn display_shows_pins() {
        let r = Route::with_pins(vec![0, 1, 2], vec![None, Some(7)]);
        assert_eq!(r.to_string(), "0 1 2@7");
    }
}
