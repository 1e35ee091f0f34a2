//! Build a time-expanded network, run max flow, and turn the flow into
//! collision-free walks.

use rca::flow::{decompose_to_walks, expand, max_flow, write_network};
use rca::Graph;

fn main() {
    // s = 0, t = 2; the loop 0 -> 3 -> 0 lets a second walker wait two steps
    let g = Graph::from_edges(true, 4, [(0, 1), (1, 2), (0, 3), (3, 0)]).unwrap();
    for tau in 1..=4 {
        let net = expand(&g, 0, 2, tau, 2).unwrap();
        let flow = max_flow(&net);
        println!("tau {tau}: flow value {}", flow.value);
        if flow.value >= 2 {
            for walk in decompose_to_walks(&net, &flow).unwrap() {
                println!("  walk {walk}");
            }
        }
    }
    print!("{}", write_network(&expand(&g, 0, 2, 2, 2).unwrap()));
}
