//! Global minimum edge cut of an undirected unit-capacity graph.
//!
//! Fixes source s = 0 and runs a breadth-first max-flow to every other
//! sink, taking the minimum. Every minimum cut separates vertex 0 from
//! some sink, so scanning all sinks is exact. The witness side is the
//! set of vertices reachable from 0 in the final residual network.

use std::collections::VecDeque;

const UNSET: usize = usize::MAX;

/// Residual network over a fixed vertex set. Each undirected edge becomes
/// a pair of opposed arcs of capacity 1 stored at indices (2i, 2i+1).
struct FlowNetwork {
    vertex_count: usize,
    // arc i: head[i] is the target; residual[i] the remaining capacity.
    head: Vec<usize>,
    residual: Vec<u8>,
    // per-vertex arc index lists, in edge construction order.
    out_arcs: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut head = Vec::with_capacity(2 * edges.len());
        let mut out_arcs = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            out_arcs[u].push(head.len());
            head.push(v);
            out_arcs[v].push(head.len());
            head.push(u);
        }
        let residual = vec![1u8; head.len()];
        Self {
            vertex_count,
            head,
            residual,
            out_arcs,
        }
    }

    fn reset(&mut self) {
        self.residual.fill(1);
    }

    /// Shortest augmenting path search; returns the arc path into `parent_arc`.
    fn bfs(&self, source: usize, sink: usize, parent_arc: &mut [usize]) -> bool {
        parent_arc.fill(UNSET);
        let mut seen = vec![false; self.vertex_count];
        seen[source] = true;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.out_arcs[u] {
                let v = self.head[arc];
                if !seen[v] && self.residual[arc] > 0 {
                    seen[v] = true;
                    parent_arc[v] = arc;
                    if v == sink {
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }

    /// Unit-capacity max-flow from `source` to `sink` (Edmonds-Karp).
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        self.reset();
        let mut flow = 0;
        let mut parent_arc = vec![UNSET; self.vertex_count];
        while self.bfs(source, sink, &mut parent_arc) {
            // Walk the path back, pushing one unit.
            let mut v = sink;
            while v != source {
                let arc = parent_arc[v];
                self.residual[arc] -= 1;
                self.residual[arc ^ 1] += 1;
                v = self.head[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// Vertices reachable from `source` in the current residual network.
    fn residual_reachable(&self, source: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        seen[source] = true;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.out_arcs[u] {
                let v = self.head[arc];
                if !seen[v] && self.residual[arc] > 0 {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        (0..self.vertex_count).filter(|&v| seen[v]).collect()
    }
}

/// Exact global minimum edge cut. Returns (cut size, witness side W with
/// 0 in W). For a disconnected graph the cut size is 0 and W is the
/// component of vertex 0.
pub(crate) fn global_min_cut(vertex_count: usize, edges: &[(usize, usize)]) -> (usize, Vec<usize>) {
    assert!(vertex_count >= 2, "cut needs at least two vertices");
    let mut net = FlowNetwork::new(vertex_count, edges);
    let mut best = usize::MAX;
    let mut best_sink = 1;
    for sink in 1..vertex_count {
        let flow = net.max_flow(0, sink);
        if flow < best {
            best = flow;
            best_sink = sink;
            if best == 0 {
                break;
            }
        }
    }
    // Rerun the minimizing sink so the residual network certifies the cut.
    let flow = net.max_flow(0, best_sink);
    debug_assert_eq!(flow, best);
    let witness = net.residual_reachable(0);
    debug_assert!(!witness.contains(&best_sink));
    (best, witness)
}

/// Number of edges with exactly one endpoint in `side`.
pub(crate) fn crossing_edges(side: &[usize], edges: &[(usize, usize)]) -> usize {
    let inside: std::collections::HashSet<usize> = side.iter().copied().collect();
    edges
        .iter()
        .filter(|(u, v)| inside.contains(u) != inside.contains(v))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force minimum cut over all vertex subsets containing 0.
    fn brute_min_cut(vertex_count: usize, edges: &[(usize, usize)]) -> usize {
        assert!(vertex_count <= 20);
        let mut best = usize::MAX;
        for mask in 0u32..(1 << (vertex_count - 1)) {
            // subsets with vertex 0 fixed inside; complement covers the rest
            let side: Vec<usize> = std::iter::once(0)
                .chain((1..vertex_count).filter(|&v| mask >> (v - 1) & 1 == 1))
                .collect();
            if side.len() == vertex_count {
                continue;
            }
            best = best.min(crossing_edges(&side, edges));
        }
        best
    }

    #[test]
    fn single_edge_is_a_bridge() {
        let (cut, side) = global_min_cut(2, &[(0, 1)]);
        assert_eq!(cut, 1);
        assert_eq!(side, vec![0]);
    }

    #[test]
    fn disconnected_graph_has_zero_cut() {
        // two triangles
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        let (cut, side) = global_min_cut(6, &edges);
        assert_eq!(cut, 0);
        assert_eq!(side, vec![0, 1, 2]);
        assert_eq!(crossing_edges(&side, &edges), 0);
    }

    #[test]
    fn two_cliques_joined_by_bridges() {
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in (a + 1)..4 {
                edges.push((a, b));
                edges.push((a + 4, b + 4));
            }
        }
        edges.push((0, 4));
        edges.push((1, 5));
        let (cut, side) = global_min_cut(8, &edges);
        assert_eq!(cut, 2);
        assert_eq!(crossing_edges(&side, &edges), 2);
    }

    #[test]
    fn matches_brute_force_on_cycles_and_paths() {
        for n in 3..9usize {
            let cycle: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let (cut, side) = global_min_cut(n, &cycle);
            assert_eq!(cut, 2);
            assert_eq!(cut, brute_min_cut(n, &cycle));
            assert_eq!(crossing_edges(&side, &cycle), cut);

            let path: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let (cut, _) = global_min_cut(n, &path);
            assert_eq!(cut, 1);
        }
    }
}
