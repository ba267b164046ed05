//! The unit graph G(Z_n): vertices are the residues 0..n−1, and two
//! distinct vertices x, y are adjacent iff (x + y) mod n is a unit.
//! The graph is simple — even when 2x is a unit there is no loop at x.

use serde::Serialize;

use crate::mincut;
use crate::modring::{is_prime, ResidueRing};

/// Unit graph over a residue ring, with a canonical edge order:
/// edges are stored as (u, v) with u < v, sorted lexicographically.
#[derive(Debug, Clone)]
pub struct UnitGraph {
    ring: ResidueRing,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// Outcome of the degree-pattern check. `pass` is false iff `offenders`
/// is nonempty; each offender records the vertex, the degree the pattern
/// demands, and the degree actually observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub two_is_unit: bool,
    pub pass: bool,
    pub offenders: Vec<RegularityOffender>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityOffender {
    pub vertex: usize,
    pub expected: usize,
    pub actual: usize,
}

/// Connected components as a breadth-first labeling. Components are
/// numbered 0.. in order of their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub count: usize,
    pub labels: Vec<usize>,
}

/// A proper 2-coloring: every edge joins `left` to `right`. Vertex 0 is
/// always in `left`; both sides are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// A minimum edge cut: exactly `lambda` edges have one endpoint in
/// `witness_side` (a nonempty proper subset of the vertices, sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub lambda: usize,
    pub witness_side: Vec<usize>,
}

/// Builds G(Z_n) from a ring by scanning all vertex pairs.
pub fn build_unit_graph(ring: ResidueRing) -> UnitGraph {
    let n = ring.modulus() as usize;
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            let sum = ((u + v) as u64) % ring.modulus();
            if ring.is_unit_unchecked(sum) {
                edges.push((u, v));
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    // The scan order already yields lexicographic edges and sorted
    // adjacency lists; keep that as a checked invariant.
    debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
    UnitGraph {
        ring,
        edges,
        adjacency,
    }
}

impl UnitGraph {
    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Degree of each vertex, indexed by vertex.
    pub fn degree_profile(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Checks the degree pattern of the unit graph against its two
    /// regimes: when 2 is not a unit the graph must be phi-regular;
    /// when 2 is a unit, units must have degree phi−1 and non-units
    /// degree phi.
    pub fn check_regularity(&self) -> RegularityVerdict {
        let phi = self.ring.phi() as usize;
        let two_is_unit = self.ring.modulus() > 2 && self.ring.is_unit_unchecked(2);
        let degrees = self.degree_profile();
        let mut offenders = Vec::new();
        for (vertex, &actual) in degrees.iter().enumerate() {
            let vertex_is_unit = self.ring.is_unit_unchecked(vertex as u64);
            let expected = if two_is_unit && vertex_is_unit {
                phi - 1
            } else {
                phi
            };
            if actual != expected {
                offenders.push(RegularityOffender {
                    vertex,
                    expected,
                    actual,
                });
            }
        }
        RegularityVerdict {
            two_is_unit,
            pass: offenders.is_empty(),
            offenders,
        }
    }

    /// Breadth-first component labeling; count ≥ 1.
    pub fn connected_components(&self) -> ComponentLabeling {
        const UNLABELED: usize = usize::MAX;
        let n = self.vertex_count();
        let mut labels = vec![UNLABELED; n];
        let mut count = 0;
        for root in 0..n {
            if labels[root] != UNLABELED {
                continue;
            }
            labels[root] = count;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if labels[v] == UNLABELED {
                        labels[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        ComponentLabeling { count, labels }
    }

    /// Proper 2-coloring if the graph is bipartite (no odd cycle),
    /// `None` otherwise. Each component's root gets the `left` color.
    pub fn bipartition(&self) -> Option<Bipartition> {
        const UNCOLORED: u8 = 2;
        let n = self.vertex_count();
        let mut color = vec![UNCOLORED; n];
        for root in 0..n {
            if color[root] != UNCOLORED {
                continue;
            }
            color[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if color[v] == UNCOLORED {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let side = |c: u8| (0..n).filter(|&v| color[v] == c).collect();
        Some(Bipartition {
            left: side(0),
            right: side(1),
        })
    }

    /// Exact edge-connectivity λ(G) with a witness cut, via unit-capacity
    /// max-flow from vertex 0 to every other sink. A disconnected graph
    /// has λ = 0 and the witness is the component of vertex 0.
    pub fn edge_connectivity(&self) -> CutResult {
        let (lambda, witness_side) = mincut::global_min_cut(self.vertex_count(), &self.edges);
        // Certify the witness by recounting its crossing edges.
        assert_eq!(
            mincut::crossing_edges(&witness_side, &self.edges),
            lambda,
            "witness side does not recount to lambda"
        );
        CutResult {
            lambda,
            witness_side,
        }
    }

    /// DOT rendering: vertices 0..n−1, unlabeled edges in canonical order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph unit_graph {\n");
        for v in 0..self.vertex_count() {
            out.push_str(&format!("    {v};\n"));
        }
        for (u, v) in &self.edges {
            out.push_str(&format!("    {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Closed-form edge count where one is known: (p−1)²/2 for an odd prime
/// p, and p(p−1) for n = 2p with p an odd prime. `None` for other n.
pub fn predicted_edge_count(n: u64) -> Option<u64> {
    if n % 2 == 1 && is_prime(n) {
        return Some((n - 1) * (n - 1) / 2);
    }
    if n.is_multiple_of(2) {
        let p = n / 2;
        if p % 2 == 1 && is_prime(p) {
            return Some(p * (p - 1));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modring::ResidueRing;

    fn graph(n: u64) -> UnitGraph {
        build_unit_graph(ResidueRing::new(n).unwrap())
    }

    #[test]
    fn canonical_edge_lists() {
        assert_eq!(graph(2).edges(), &[(0, 1)]);
        assert_eq!(graph(3).edges(), &[(0, 1), (0, 2)]);
        assert_eq!(graph(4).edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(
            graph(6).edges(),
            &[(0, 1), (0, 5), (1, 4), (2, 3), (2, 5), (3, 4)]
        );
        // n = 5: all C(5,2) = 10 pairs except {1,4} and {2,3}, whose sums
        // are 0 mod 5.
        let g5 = graph(5);
        assert_eq!(g5.edge_count(), 8);
        assert!(!g5.edges().contains(&(1, 4)));
        assert!(!g5.edges().contains(&(2, 3)));
    }

    #[test]
    fn no_loops_even_when_twice_x_is_a_unit() {
        // In Z_5, 2·3 = 6 ≡ 1 is a unit, but 3 must not be self-adjacent.
        let g = graph(5);
        assert!(!g.neighbors(3).contains(&3));
        assert!(g.edges().iter().all(|&(u, v)| u != v));
    }

    #[test]
    fn degree_profiles() {
        assert_eq!(graph(2).degree_profile(), vec![1, 1]);
        assert_eq!(graph(5).degree_profile(), vec![4, 3, 3, 3, 3]);
        assert_eq!(graph(6).degree_profile(), vec![2; 6]);
        assert_eq!(graph(9).degree_profile(), vec![6, 5, 5, 6, 5, 5, 6, 5, 5]);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for n in 2..=40 {
            let g = graph(n);
            let total: usize = g.degree_profile().iter().sum();
            assert_eq!(total, 2 * g.edge_count(), "n = {n}");
        }
    }

    #[test]
    fn regularity_passes_for_small_moduli() {
        for n in 2..=50 {
            let g = graph(n);
            let verdict = g.check_regularity();
            assert!(verdict.pass, "n = {n}: {:?}", verdict.offenders);
            assert_eq!(verdict.two_is_unit, n % 2 == 1, "n = {n}");
        }
    }

    #[test]
    fn regularity_verdict_reports_offenders() {
        // Tamper with a graph's adjacency to force a degree mismatch.
        let mut g = graph(6);
        g.adjacency[0].pop();
        let verdict = g.check_regularity();
        assert!(!verdict.pass);
        assert_eq!(
            verdict.offenders,
            vec![RegularityOffender {
                vertex: 0,
                expected: 2,
                actual: 1
            }]
        );
    }

    #[test]
    fn small_unit_graphs_are_connected() {
        for n in 2..=30 {
            let labeling = graph(n).connected_components();
            assert_eq!(labeling.count, 1, "n = {n}");
            assert!(labeling.labels.iter().all(|&l| l == 0));
        }
    }

    #[test]
    fn component_labeling_on_a_disconnected_graph() {
        // Not reachable through build_unit_graph (those are connected for
        // small n), so exercise the labeling through a stripped clone.
        let mut g = graph(4);
        g.edges.clear();
        g.adjacency = vec![Vec::new(); 4];
        let labeling = g.connected_components();
        assert_eq!(labeling.count, 4);
        assert_eq!(labeling.labels, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bipartitions_match_parity_for_even_moduli() {
        for n in (2..=30).step_by(2) {
            let b = graph(n).bipartition().expect("even n must be bipartite");
            let even: Vec<usize> = (0..n as usize).step_by(2).collect();
            let odd: Vec<usize> = (1..n as usize).step_by(2).collect();
            assert_eq!(b.left, even, "n = {n}");
            assert_eq!(b.right, odd, "n = {n}");
        }
    }

    #[test]
    fn odd_moduli_are_not_bipartite_except_three() {
        assert_eq!(
            graph(3).bipartition(),
            Some(Bipartition {
                left: vec![0],
                right: vec![1, 2],
            })
        );
        for n in (5..=29).step_by(2) {
            assert_eq!(graph(n).bipartition(), None, "n = {n}");
        }
    }

    #[test]
    fn bipartition_separates_every_edge() {
        for n in 2..=30 {
            let g = graph(n);
            if let Some(b) = g.bipartition() {
                for &(u, v) in g.edges() {
                    assert_ne!(
                        b.left.binary_search(&u).is_ok(),
                        b.left.binary_search(&v).is_ok(),
                        "edge ({u},{v}) not separated at n = {n}"
                    );
                }
                let mut all: Vec<usize> = b.left.iter().chain(&b.right).copied().collect();
                all.sort_unstable();
                assert_eq!(all, (0..g.vertex_count()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn edge_connectivity_of_small_moduli() {
        let expected = [
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 3),
            (6, 2),
            (7, 5),
            (8, 4),
            (9, 5),
            (10, 4),
            (11, 9),
            (12, 4),
        ];
        for (n, lambda) in expected {
            let cut = graph(n).edge_connectivity();
            assert_eq!(cut.lambda, lambda, "n = {n}");
            assert!(!cut.witness_side.is_empty());
            assert!(cut.witness_side.len() < n as usize);
        }
    }

    #[test]
    fn edge_connectivity_matches_exhaustive_cuts() {
        // Independent oracle: minimize crossing edges over every vertex
        // subset containing 0.
        for n in 2..=10u64 {
            let g = graph(n);
            let v = g.vertex_count();
            let mut best = usize::MAX;
            for mask in 0u32..(1 << (v - 1)) {
                let side: Vec<usize> = std::iter::once(0)
                    .chain((1..v).filter(|&x| mask >> (x - 1) & 1 == 1))
                    .collect();
                if side.len() == v {
                    continue;
                }
                best = best.min(mincut::crossing_edges(&side, g.edges()));
            }
            assert_eq!(g.edge_connectivity().lambda, best, "n = {n}");
        }
    }

    #[test]
    fn edge_connectivity_bounded_by_min_degree() {
        for n in 2..=30 {
            let g = graph(n);
            let min_degree = g.degree_profile().into_iter().min().unwrap();
            assert!(g.edge_connectivity().lambda <= min_degree, "n = {n}");
        }
    }

    #[test]
    fn predicted_edge_counts() {
        assert_eq!(predicted_edge_count(3), Some(2));
        assert_eq!(predicted_edge_count(5), Some(8));
        assert_eq!(predicted_edge_count(7), Some(18));
        assert_eq!(predicted_edge_count(6), Some(6));
        assert_eq!(predicted_edge_count(10), Some(20));
        assert_eq!(predicted_edge_count(26), Some(156));
        assert_eq!(predicted_edge_count(2), None);
        assert_eq!(predicted_edge_count(4), None);
        assert_eq!(predicted_edge_count(9), None);
        assert_eq!(predicted_edge_count(12), None);
    }

    #[test]
    fn predictions_match_constructed_graphs() {
        for n in 2..=60 {
            if let Some(count) = predicted_edge_count(n) {
                assert_eq!(graph(n).edge_count() as u64, count, "n = {n}");
            }
        }
    }

    #[test]
    fn unit_multiplication_is_an_automorphism() {
        // For every unit u, x ↦ u·x mod n permutes vertices and maps the
        // edge set onto itself, because u(x+y) is a unit iff x+y is.
        for n in 2..=20u64 {
            let g = graph(n);
            for &u in g.ring().units() {
                let mut mapped: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .map(|&(x, y)| {
                        let a = (u * x as u64 % n) as usize;
                        let b = (u * y as u64 % n) as usize;
                        (a.min(b), a.max(b))
                    })
                    .collect();
                mapped.sort_unstable();
                assert_eq!(mapped, g.edges(), "n = {n}, u = {u}");
            }
        }
    }

    #[test]
    fn dot_rendering_is_canonical() {
        let dot = graph(3).to_dot();
        assert_eq!(
            dot,
            "graph unit_graph {\n    0;\n    1;\n    2;\n    0 -- 1;\n    0 -- 2;\n}\n"
        );
    }
}
