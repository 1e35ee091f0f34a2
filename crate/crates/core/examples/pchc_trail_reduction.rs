//! Hamiltonian cycles of a cubic graph to trails, made simple by
//! subdividing every edge twice.

use rca::generators::{gen_pchc_trail, gen_pchc_trail_unsubdivided, gen_pchc_trail_witness};
use rca::oracle::brute_force_hamiltonian;
use rca::{verify_solution, Graph};

fn main() {
    let k4 = Graph::from_edges(false, 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let base = gen_pchc_trail_unsubdivided(&k4, 0).unwrap();
    let gen = gen_pchc_trail(&k4, 0).unwrap();
    println!(
        "multigraph {} vertices / {} edges, subdivided {} / {}, p {}",
        base.instance.graph.vertex_count(),
        base.instance.graph.edge_count(),
        gen.instance.graph.vertex_count(),
        gen.instance.graph.edge_count(),
        gen.instance.route_count
    );
    let cycle = brute_force_hamiltonian(&k4).unwrap().unwrap();
    let routes = gen_pchc_trail_witness(&k4, 0, &cycle, false).unwrap();
    for r in &routes {
        println!("  {r}");
    }
    println!("multigraph witness: {:?}", verify_solution(&base.instance, &routes));
    let lifted = gen_pchc_trail_witness(&k4, 0, &cycle, true).unwrap();
    println!("subdivided witness: {:?}", verify_solution(&gen.instance, &lifted));
}
