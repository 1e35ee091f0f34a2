//! Certificate checking: a list of routes either solves an instance or is
//! rejected with a machine-readable reason.

use std::fmt;

use crate::graph::EdgeSet;
use crate::instance::{Instance, RouteKind};
use crate::route::{classify, shared_edges, Route, RouteClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    Count { expected: usize, found: usize },
    Endpoint { route: usize },
    Kind { route: usize, found: RouteClass, required: RouteKind },
    Length { route: usize, length: usize, cap: usize },
    Budget { shared: EdgeSet, budget: usize },
}

impl Rejection {
    /// Stable reason code: `count`, `endpoint`, `kind`, `length` or `budget`.
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::Count { .. } => "count",
            Rejection::Endpoint { .. } => "endpoint",
            Rejection::Kind { .. } => "kind",
            Rejection::Length { .. } => "length",
            Rejection::Budget { .. } => "budget",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Count { expected, found } => {
                write!(f, "count: expected {expected} routes, found {found}")
            }
            Rejection::Endpoint { route } => {
                write!(f, "endpoint: route {route} does not run from s to t")
            }
            Rejection::Kind { route, found, required } => {
                write!(f, "kind: route {route} is {found:?}, {required} required")
            }
            Rejection::Length { route, length, cap } => {
                write!(f, "length: route {route} has length {length} > {cap}")
            }
            Rejection::Budget { shared, budget } => {
                write!(f, "budget: {} shared edges > {budget}:", shared.len())?;
                for e in shared.iter() {
                    write!(f, " {e}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept { shared: EdgeSet },
    Reject(Rejection),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept { .. })
    }
}

pub fn verify_solution(inst: &Instance, routes: &[Route]) -> Verdict {
    if routes.len() != inst.route_count {
        return Verdict::Reject(Rejection::Count { expected: inst.route_count, found: routes.len() });
    }
    for (i, r) in routes.iter().enumerate() {
        if r.start() != Some(inst.source) || r.end() != Some(inst.sink) {
            return Verdict::Reject(Rejection::Endpoint { route: i });
        }
    }
    for (i, r) in routes.iter().enumerate() {
        let class = classify(&inst.graph, r);
        if !class.satisfies(inst.kind) {
            return Verdict::Reject(Rejection::Kind { route: i, found: class, required: inst.kind });
        }
    }
    if let Some(cap) = inst.max_length {
        for (i, r) in routes.iter().enumerate() {
            if r.len() > cap {
                return Verdict::Reject(Rejection::Length { route: i, length: r.len(), cap });
            }
        }
    }
    let shared = shared_edges(&inst.graph, routes).expect("routes classified as valid");
    if shared.len() > inst.budget {
        return Verdict::Reject(Rejection::Budget { shared, budget: inst.budget });
    }
    Verdict::Accept { shared }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn diamond_instance(p: usize, k: usize) -> Instance {
        let g = Graph::from_edges(true, 4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        Instance::new(g, 0, 3, p, k, RouteKind::Walk, None).unwrap()
    }

    #[test]
    fn accepts_disjoint_routes() {
        let inst = diamond_instance(2, 0);
        let v = verify_solution(&inst, &[Route::new(vec![0, 1, 3]), Route::new(vec![0, 2, 3])]);
        assert!(v.is_accept());
    }

    #[test]
    fn rejection_codes() {
        let inst = diamond_instance(2, 0);
        let one = verify_solution(&inst, &[Route::new(vec![0, 1, 3])]);
        assert_eq!(one, Verdict::Reject(Rejection::Count { expected: 2, found: 1 }));

        let truncated = verify_solution(&inst, &[Route::new(vec![0, 1, 3]), Route::new(vec![0, 1])]);
        assert!(matches!(truncated, Verdict::Reject(Rejection::Endpoint { route: 1 })));

        let bogus = verify_solution(&inst, &[Route::new(vec![0, 1, 3]), Route::new(vec![0, 3])]);
        assert!(matches!(bogus, Verdict::Reject(ref r) if r.code() == "kind"));

        let same = verify_solution(&inst, &[Route::new(vec![0, 1, 3]), Route::new(vec![0, 1, 3])]);
        match same {
            Verdict::Reject(r @ Rejection::Budget { .. }) => {
                assert_eq!(r.code(), "budget");
                assert_eq!(r.to_string(), "budget: 2 shared edges > 0: 0 1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn length_cap() {
        // s=0 v=1 t=2 w=3
        let g = Graph::from_edges(true, 4, [(0, 1), (1, 2), (0, 3), (3, 0)]).unwrap();
        let inst = Instance::new(g, 0, 2, 1, 0, RouteKind::Walk, Some(3)).unwrap();
        let v = verify_solution(&inst, &[Route::new(vec![0, 3, 0, 1, 2])]);
        assert_eq!(v, Verdict::Reject(Rejection::Length { route: 0, length: 4, cap: 3 }));
        assert!(verify_solution(&inst, &[Route::new(vec![0, 1, 2])]).is_accept());
    }

    #[test]
    fn kind_is_checked_against_instance() {
        let g = Graph::from_edges(false, 3, [(0, 1), (1, 2)]).unwrap();
        let inst = Instance::new(g, 0, 2, 1, 0, RouteKind::Trail, None).unwrap();
        let v = verify_solution(&inst, &[Route::new(vec![0, 1, 0, 1, 2])]);
        assert!(matches!(v, Verdict::Reject(Rejection::Kind { found: RouteClass::Walk, .. })));
    }
}
