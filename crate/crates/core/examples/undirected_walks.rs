//! Walks in undirected graphs: the answer depends only on k and deg(s).

use rca::solve::solve_walk_undirected;
use rca::{verify_solution, Graph, Instance, RouteKind};

fn main() {
    let g = Graph::from_edges(false, 5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
    for (p, k) in [(2, 0), (3, 0), (3, 1)] {
        let inst = Instance::new(g.clone(), 0, 4, p, k, RouteKind::Walk, None).unwrap();
        let r = solve_walk_undirected(&inst).unwrap();
        println!("p {p} k {k}: {}", if r.decision { "yes" } else { "no" });
        if let Some(routes) = &r.witness {
            assert!(verify_solution(&inst, routes).is_accept());
            for route in routes {
                println!("  {route}");
            }
        }
    }
}
