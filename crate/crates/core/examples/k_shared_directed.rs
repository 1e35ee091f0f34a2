//! Directed walks with a sharing budget: the solver tries every arc set of
//! size at most k as the shared arcs.

use rca::solve::{horizon, solve_k_shared_directed};
use rca::{shared_edges, Graph, Instance, RouteKind};

fn main() {
    // two parallel first arcs, then a single arc both walkers reach together
    let g = Graph::from_edges(true, 3, [(0, 1), (0, 1), (1, 2)]).unwrap();
    for k in 0..=2 {
        let inst = Instance::new(g.clone(), 0, 2, 2, k, RouteKind::Walk, None).unwrap();
        let tau = horizon(&inst);
        match solve_k_shared_directed(&g, 0, 2, 2, k, tau, 2).unwrap() {
            Some(routes) => {
                let shared = shared_edges(&g, &routes).unwrap();
                println!("k {k}: yes, shared arcs {:?}", shared.as_slice());
                for r in &routes {
                    println!("  {r}");
                }
            }
            None => println!("k {k}: no"),
        }
    }
}
