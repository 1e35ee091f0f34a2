//! Hamiltonian cycles of a cubic graph to edge-disjoint-in-time paths.

use rca::generators::{gen_pchc_path, gen_pchc_path_witness, Orientation, OuterTriple};
use rca::oracle::{brute_force_hamiltonian, min_shared, OracleOptions};
use rca::{verify_solution, Graph};

fn main() {
    // triangular prism
    let g =
        Graph::from_edges(false, 6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
    let triple = OuterTriple { x1: 0, x2: 1, x3: 2 };
    let gen = gen_pchc_path(&g, triple, Orientation::Undirected, 0).unwrap();
    println!("{} vertices, p {}", gen.instance.graph.vertex_count(), gen.instance.route_count);
    print!("{}", gen.names.to_text());
    let cycle = brute_force_hamiltonian(&g).unwrap().expect("prism is Hamiltonian");
    let routes = gen_pchc_path_witness(&gen, &g, triple, &cycle).unwrap();
    for r in &routes {
        println!("  {r}");
    }
    println!("witness: {:?}", verify_solution(&gen.instance, &routes));
    let r = min_shared(&gen.instance, &OracleOptions::default()).unwrap();
    println!("oracle min shared {:?}", r.min_shared);
}
