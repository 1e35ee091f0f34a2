mod common;

use rand::Rng;
use rca::generators::{
    gen_dp23hc_trail, gen_dp23hc_trail_witness, gen_pchc_path, gen_pchc_path_witness, gen_setcover,
    gen_setcover_witness, Orientation, OuterTriple,
};
use rca::graph::is_dag;
use rca::oracle::{brute_force_hamiltonian, min_shared, OracleOptions, SetCover};
use rca::{verify_solution, Graph, Verdict};

use common::*;

fn two_k4() -> Graph {
    let mut edges = Vec::new();
    for base in [0, 4] {
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((base + a, base + b));
            }
        }
    }
    Graph::from_edges(false, 8, edges).unwrap()
}

#[test]
fn pchc_path_decision_follows_hamiltonicity() {
    let triple = OuterTriple { x1: 0, x2: 1, x3: 2 };
    for (name, g) in [("K4", k4()), ("prism", prism()), ("two K4", two_k4())] {
        let hamiltonian = brute_force_hamiltonian(&g).unwrap().is_some();
        for orientation in [Orientation::Undirected, Orientation::Directed] {
            let gen = gen_pchc_path(&g, triple, orientation, 0).unwrap();
            let r = min_shared(&gen.instance, &OracleOptions::default().with_target(0)).unwrap();
            assert_eq!(r.decision, hamiltonian, "{name} {orientation:?}");
        }
    }
}

#[test]
fn pchc_path_padding_keeps_the_decision() {
    let triple = OuterTriple { x1: 0, x2: 1, x3: 2 };
    for (g, hamiltonian) in [(k4(), true), (two_k4(), false)] {
        for pad in 1..=2 {
            let gen = gen_pchc_path(&g, triple, Orientation::Undirected, pad).unwrap();
            let r = min_shared(&gen.instance, &OracleOptions::default().with_target(pad)).unwrap();
            assert_eq!(r.decision, hamiltonian);
            if hamiltonian {
                let cycle = brute_force_hamiltonian(&g).unwrap().unwrap();
                let routes = gen_pchc_path_witness(&gen, &g, triple, &cycle).unwrap();
                let Verdict::Accept { shared } = verify_solution(&gen.instance, &routes) else { panic!() };
                assert_eq!(shared.len(), pad);
            }
        }
    }
}

#[test]
fn pchc_path_chain_and_long_path_timing() {
    let g = prism();
    let triple = OuterTriple { x1: 0, x2: 1, x3: 3 };
    let gen = gen_pchc_path(&g, triple, Orientation::Undirected, 0).unwrap();
    let cycle = brute_force_hamiltonian(&g).unwrap().unwrap();
    let routes = gen_pchc_path_witness(&gen, &g, triple, &cycle).unwrap();
    let (w, t) = (gen.names.get("w").unwrap(), gen.names.get("t").unwrap());
    let n = g.vertex_count();
    // 1-based step at which each route crosses {w,t}
    let steps: Vec<usize> =
        routes.iter().map(|r| r.vertices().windows(2).position(|p| p == [w, t]).unwrap() + 1).collect();
    let expected: Vec<usize> = (5..=n + 2).chain([n + 3]).collect();
    assert_eq!(steps, expected);
}

#[test]
fn dp23hc_decision_follows_hamiltonicity() {
    let mut rng = rng(23);
    let mut seen = [0usize; 2];
    let mut graphs = vec![Graph::from_edges(true, 3, [(0, 1), (1, 2), (2, 0)]).unwrap()];
    while graphs.len() < 40 {
        let n = rng.random_range(3..=4);
        let mut g = Graph::directed(n);
        for _ in 0..3 * n {
            let (a, b) = distinct_pair(&mut rng, n);
            let fits = |v: usize, g: &Graph| g.in_degree(v) + g.degree(v) < 3;
            if g.degree(a) < 2 && g.in_degree(b) < 2 && fits(a, &g) && fits(b, &g) && g.edges_between(a, b).is_empty() {
                g.add_edge(a, b).unwrap();
            }
        }
        graphs.push(g);
    }
    for g in &graphs {
        let cycle = brute_force_hamiltonian(g).unwrap();
        let gen = gen_dp23hc_trail(g, 0).unwrap();
        let r = min_shared(&gen.instance, &OracleOptions::default().with_target(0)).unwrap();
        assert_eq!(r.decision, cycle.is_some(), "{g}");
        seen[usize::from(r.decision)] += 1;
        if let Some(cycle) = cycle {
            let routes = gen_dp23hc_trail_witness(&gen, g, &cycle).unwrap();
            assert!(verify_solution(&gen.instance, &routes).is_accept());
            let (w, t) = (gen.names.get("w").unwrap(), gen.names.get("t").unwrap());
            let n = g.vertex_count();
            let last = routes.last().unwrap();
            assert_eq!(last.vertices().windows(2).position(|p| p == [w, t]).unwrap() + 1, n + 4);
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "both outcomes exercised: {seen:?}");
}

#[test]
fn setcover_outputs() {
    let sc = SetCover { universe: 3, family: vec![vec![0, 1], vec![1, 2], vec![2]], budget: 2 };
    let dag = gen_setcover(&sc, Orientation::Directed).unwrap();
    assert!(is_dag(&dag.instance.graph).unwrap());
    assert_eq!(dag.instance.route_count, 6);
    for cover in [vec![0, 1], vec![0, 2]] {
        let routes = gen_setcover_witness(&dag, &sc, &cover).unwrap();
        let Verdict::Accept { shared } = verify_solution(&dag.instance, &routes) else { panic!() };
        assert_eq!(shared.len(), 2);
        let und = gen_setcover(&sc, Orientation::Undirected).unwrap();
        assert!(verify_solution(&und.instance, &routes).is_accept());
    }
    // budget at least the number of sets: yes iff the family covers U
    let uncovered = SetCover { universe: 2, family: vec![vec![0]], budget: 3 };
    let gen = gen_setcover(&uncovered, Orientation::Directed).unwrap();
    assert!(!rca::solve(&gen.instance, &Default::default()).unwrap().decision);
}

#[test]
fn generators_are_deterministic() {
    let a = gen_pchc_path(&prism(), OuterTriple { x1: 0, x2: 1, x3: 2 }, Orientation::Directed, 1).unwrap();
    let b = gen_pchc_path(&prism(), OuterTriple { x1: 0, x2: 1, x3: 2 }, Orientation::Directed, 1).unwrap();
    assert_eq!(a.instance, b.instance);
    assert_eq!(a.names.to_text(), b.names.to_text());
}
