//! Set Cover to walk routing: the generated instance is yes exactly when a
//! cover within the budget exists.

use rca::generators::{gen_setcover, gen_setcover_witness, Orientation};
use rca::oracle::{brute_force_set_cover, SetCover};
use rca::{solve, verify_solution, SolveOptions};

fn main() {
    let sc = SetCover { universe: 4, family: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], budget: 2 };
    let gen = gen_setcover(&sc, Orientation::Directed).unwrap();
    let inst = &gen.instance;
    println!("{} vertices, p {}, k {}", inst.graph.vertex_count(), inst.route_count, inst.budget);
    let cover = brute_force_set_cover(&sc).expect("coverable");
    println!("cover {cover:?}");
    let routes = gen_setcover_witness(&gen, &sc, &cover).unwrap();
    println!("witness accepted: {}", verify_solution(inst, &routes).is_accept());
    let r = solve(inst, &SolveOptions::default()).unwrap();
    println!("solver: {} via {}", r.decision, r.solver);
    let tight = SetCover { budget: 1, ..sc };
    let gen = gen_setcover(&tight, Orientation::Directed).unwrap();
    println!("budget 1: {}", solve(&gen.instance, &SolveOptions::default()).unwrap().decision);
}
