//! Exact minimum sharing by exhaustive search, for every route kind.

use rca::oracle::{min_shared, OracleOptions};
use rca::{Graph, Instance, RouteKind};

fn main() {
    let g = Graph::from_edges(false, 5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 2), (1, 3)]).unwrap();
    for kind in RouteKind::ALL {
        for p in 1..=3 {
            let inst = Instance::new(g.clone(), 0, 4, p, 0, kind, None).unwrap();
            let r = min_shared(&inst, &OracleOptions::default()).unwrap();
            println!("{kind} p {p}: min shared {:?} (cap {:?})", r.min_shared, r.horizon);
        }
    }
}
