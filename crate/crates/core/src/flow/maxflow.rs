use std::collections::VecDeque;

use super::network::{NodeId, TimeExpandedNetwork};

/// Integral flow on the arcs of a [`TimeExpandedNetwork`], indexed like
/// [`TimeExpandedNetwork::arcs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    pub arc_flow: Vec<u32>,
    pub value: u32,
}

/// Dinic's algorithm on a residual graph stored as paired forward/backward
/// edges (`e ^ 1` is the reverse of `e`).
pub(crate) struct Dinic {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

const UNSEEN: u32 = u32::MAX;

impl Dinic {
    pub(crate) fn new(nodes: usize) -> Self {
        Dinic {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
            level: vec![UNSEEN; nodes],
            iter: vec![0; nodes],
        }
    }

    /// Returns the index of the forward edge.
    pub(crate) fn add_edge(&mut self, from: NodeId, to: NodeId, cap: u32) -> usize {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(cap);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.adj[to].push(id + 1);
        id
    }

    /// Flow currently pushed through forward edge `id`.
    pub(crate) fn flow_on(&self, id: usize) -> u32 {
        self.cap[id ^ 1]
    }

    fn bfs(&mut self, s: NodeId, t: NodeId) -> bool {
        self.level.fill(UNSEEN);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let w = self.head[e];
                if self.cap[e] > 0 && self.level[w] == UNSEEN {
                    self.level[w] = self.level[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] != UNSEEN
    }

    /// Blocking flow on the current level graph, iteratively.
    fn blocking(&mut self, s: NodeId, t: NodeId, limit: u64) -> u64 {
        self.iter.fill(0);
        let mut pushed = 0u64;
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        while pushed < limit {
            if u == t {
                let room = (limit - pushed).min(u32::MAX as u64) as u32;
                let f = path.iter().map(|&e| self.cap[e]).min().unwrap_or(0).min(room);
                for &e in &path {
                    self.cap[e] -= f;
                    self.cap[e ^ 1] += f;
                }
                pushed += f as u64;
                path.clear();
                u = s;
                continue;
            }
            let mut advanced = false;
            while self.iter[u] < self.adj[u].len() {
                let e = self.adj[u][self.iter[u]];
                let w = self.head[e];
                if self.cap[e] > 0 && self.level[w] == self.level[u] + 1 {
                    path.push(e);
                    u = w;
                    advanced = true;
                    break;
                }
                self.iter[u] += 1;
            }
            if !advanced {
                // dead end: drop u from the level graph and step back
                self.level[u] = UNSEEN;
                match path.pop() {
                    Some(e) => {
                        u = self.head[e ^ 1];
                        self.iter[u] += 1;
                    }
                    None => break,
                }
            }
        }
        pushed
    }

    pub(crate) fn run(&mut self, s: NodeId, t: NodeId, limit: Option<u64>) -> u64 {
        let limit = limit.unwrap_or(u64::MAX);
        let mut total = 0;
        if s == t {
            return 0;
        }
        while total < limit && self.bfs(s, t) {
            let f = self.blocking(s, t, limit - total);
            if f == 0 {
                break;
            }
            total += f;
        }
        total
    }
}

/// Maximum integral flow from `(s, 0)` to `(t, horizon)`.
pub fn max_flow(net: &TimeExpandedNetwork) -> Flow {
    max_flow_limited(net, None)
}

/// Like [`max_flow`] but stops once `limit` units are routed.
pub fn max_flow_limited(net: &TimeExpandedNetwork, limit: Option<u32>) -> Flow {
    let mut dinic = Dinic::new(net.node_count());
    let ids: Vec<usize> = net.arcs().iter().map(|a| dinic.add_edge(a.from, a.to, a.capacity)).collect();
    let value = dinic.run(net.source_node(), net.sink_node(), limit.map(u64::from));
    Flow { arc_flow: ids.iter().map(|&id| dinic.flow_on(id)).collect(), value: value as u32 }
}
