//! Directed Hamiltonian cycles (degree-bounded digraphs) to directed trails.

use rca::generators::{gen_dp23hc_trail, gen_dp23hc_trail_witness};
use rca::oracle::{brute_force_hamiltonian, min_shared, OracleOptions};
use rca::{verify_solution, Graph};

fn main() {
    let cycle3 = Graph::from_edges(true, 3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    let path3 = Graph::from_edges(true, 3, [(0, 1), (1, 2)]).unwrap();
    for (name, g) in [("3-cycle", cycle3), ("3-path", path3)] {
        let gen = gen_dp23hc_trail(&g, 0).unwrap();
        let oracle = min_shared(&gen.instance, &OracleOptions::default().with_target(0)).unwrap();
        println!("{name}: p {}, oracle {}", gen.instance.route_count, oracle.decision);
        if let Some(cycle) = brute_force_hamiltonian(&g).unwrap() {
            let routes = gen_dp23hc_trail_witness(&gen, &g, &cycle).unwrap();
            println!("  witness: {:?}", verify_solution(&gen.instance, &routes));
        }
    }
}
