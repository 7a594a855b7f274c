//! Integral maximum flow (Dinic).

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
}

/// Residual graph; arc `2i` is the forward arc of edge `i`, `2i + 1` its
/// reverse.
#[derive(Debug, Clone)]
pub struct FlowGraph {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    original: Vec<u64>,
}

impl FlowGraph {
    pub fn new(nodes: usize) -> Self {
        FlowGraph {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            original: Vec::new(),
        }
    }

    /// Adds an edge and returns its id.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let id = self.original.len();
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
        self.original.push(cap);
        id
    }

    pub fn flow_on(&self, edge: usize) -> u64 {
        self.original[edge] - self.arcs[2 * edge].cap
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let n = self.adj.len();
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; n];
            level[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && level[v] == usize::MAX {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0usize; n];
            loop {
                let f = self.augment(s, t, u64::MAX, &level, &mut next);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    /// One blocking-flow path search, iterative to keep deep graphs off the
    /// call stack.
    fn augment(
        &mut self,
        s: usize,
        t: usize,
        limit: u64,
        level: &[usize],
        next: &mut [usize],
    ) -> u64 {
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let f = path
                    .iter()
                    .map(|&a| self.arcs[a].cap)
                    .min()
                    .unwrap_or(limit)
                    .min(limit);
                for &a in &path {
                    self.arcs[a].cap -= f;
                    self.arcs[a ^ 1].cap += f;
                }
                return f;
            }
            let mut advanced = false;
            while next[u] < self.adj[u].len() {
                let a = self.adj[u][next[u]];
                let v = self.arcs[a].to;
                if self.arcs[a].cap > 0 && level[v] == level[u] + 1 {
                    path.push(a);
                    u = v;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if !advanced {
                match path.pop() {
                    None => return 0,
                    Some(a) => {
                        u = self.arcs[a ^ 1].to;
                        next[u] += 1;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_network() {
        let mut g = FlowGraph::new(6);
        let e = [
            g.add_edge(0, 1, 16),
            g.add_edge(0, 2, 13),
            g.add_edge(1, 2, 10),
            g.add_edge(2, 1, 4),
            g.add_edge(1, 3, 12),
            g.add_edge(3, 2, 9),
            g.add_edge(2, 4, 14),
            g.add_edge(4, 3, 7),
            g.add_edge(3, 5, 20),
            g.add_edge(4, 5, 4),
        ];
        assert_eq!(g.max_flow(0, 5), 23);
        assert_eq!(g.flow_on(e[8]) + g.flow_on(e[9]), 23);
    }

    #[test]
    fn bipartite_matching() {
        // 3 left, 3 right, perfect matching forced through a single choice.
        let mut g = FlowGraph::new(8);
        for l in 1..=3 {
            g.add_edge(0, l, 1);
            g.add_edge(l + 3, 7, 1);
        }
        g.add_edge(1, 4, 1);
        g.add_edge(2, 4, 1);
        g.add_edge(2, 5, 1);
        g.add_edge(3, 5, 1);
        g.add_edge(3, 6, 1);
        assert_eq!(g.max_flow(0, 7), 3);
    }
}
