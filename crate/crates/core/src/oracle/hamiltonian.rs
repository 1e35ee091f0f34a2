use crate::graph::{Graph, VertexId};

use super::OracleError;

pub const HAMILTONIAN_VERTEX_LIMIT: usize = 12;

/// A Hamiltonian cycle as a vertex order starting at 0 (the closing edge back
/// to 0 is implied), or `None`. Graphs with fewer than three vertices have
/// none. Held-Karp style DP over subsets.
pub fn brute_force_hamiltonian(g: &Graph) -> Result<Option<Vec<VertexId>>, OracleError> {
    let n = g.vertex_count();
    if n > HAMILTONIAN_VERTEX_LIMIT {
        return Err(OracleError::TooManyVertices(n, HAMILTONIAN_VERTEX_LIMIT));
    }
    if n < 3 {
        return Ok(None);
    }
    let mut adj = vec![vec![false; n]; n];
    for (v, row) in adj.iter_mut().enumerate() {
        for (_, w) in g.steps(v) {
            row[w] = true;
        }
    }
    // reach[mask][v]: a path from 0 through exactly `mask` ending at v
    let full = (1usize << n) - 1;
    let mut prev = vec![vec![usize::MAX; n]; 1 << n];
    prev[1][0] = 0;
    for mask in 1..=full {
        if mask & 1 == 0 {
            continue;
        }
        for v in 0..n {
            if prev[mask][v] == usize::MAX {
                continue;
            }
            for w in 0..n {
                if adj[v][w] && mask >> w & 1 == 0 && prev[mask | 1 << w][w] == usize::MAX {
                    prev[mask | 1 << w][w] = v;
                }
            }
        }
    }
    let Some(last) = (1..n).find(|&v| prev[full][v] != usize::MAX && adj[v][0]) else {
        return Ok(None);
    };
    let mut order = vec![last];
    let (mut mask, mut v) = (full, last);
    while v != 0 {
        let u = prev[mask][v];
        mask &= !(1 << v);
        v = u;
        order.push(v);
    }
    order.reverse();
    Ok(Some(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_and_path() {
        let k4 = Graph::from_edges(false, 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = brute_force_hamiltonian(&k4).unwrap().unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], 0);
        let path = Graph::from_edges(false, 3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_hamiltonian(&path).unwrap(), None);
        let arc_cycle = Graph::from_edges(true, 3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(brute_force_hamiltonian(&arc_cycle).unwrap(), Some(vec![0, 1, 2]));
        let reversed = Graph::from_edges(true, 3, [(0, 2), (1, 0), (2, 1)]).unwrap();
        assert_eq!(brute_force_hamiltonian(&reversed).unwrap(), Some(vec![0, 2, 1]));
    }
}
