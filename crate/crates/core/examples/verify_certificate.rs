//! Parse an instance and a route file, then check the certificate.

use rca::format::{parse_instance, parse_routes};
use rca::{verify_solution, Verdict};

const INSTANCE: &str = "\
rca 1
directed
n 4
e 0 1
e 1 3
e 0 2
e 2 3
s 0
t 3
p 2
k 0
kind path
";

fn main() {
    let inst = parse_instance(INSTANCE).expect("valid instance");
    for routes in ["0 1 3\n0 2 3\n", "0 1 3\n0 1 3\n", "0 1 3\n0 2\n"] {
        let parsed = parse_routes(routes).expect("valid route file");
        match verify_solution(&inst, &parsed) {
            Verdict::Accept { shared } => println!("accept, {} shared edges", shared.len()),
            Verdict::Reject(reason) => println!("reject {reason}"),
        }
    }
}
