//! The underlying graph of a triple system and exact 3-vertex subgraph counts.
//!
//! A cherry is an unordered path on three vertices, so a vertex of degree `d`
//! is the centre of `C(d, 2)` cherries.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::triple_system::{LinearTripleSystem, VertexId};

pub type Count = u128;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for n = {n}"
            );
            if u != v {
                adjacency[u as usize].push(v);
                adjacency[v as usize].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Self { adjacency, edge_count }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self) -> bool {
        self.adjacency.windows(2).all(|w| w[0].len() == w[1].len())
    }
}

/// The graph on `V(H)` joining two vertices iff some triple contains both.
pub fn underlying_graph(system: &LinearTripleSystem) -> SimpleGraph {
    let graph = SimpleGraph::from_edges(system.n(), system.edges().iter().flat_map(|t| t.pairs()));
    debug_assert_eq!(graph.edge_count(), 3 * system.m());
    graph
}

/// Triangle count by forward-neighbour intersection.
///
/// Vertices are ranked by `(degree, id)`; each vertex keeps only neighbours of
/// higher rank, so every triangle is found exactly once from its lowest-ranked
/// corner. Runs in `O(e^1.5)`.
pub fn count_triangles(graph: &SimpleGraph) -> Count {
    let n = graph.n();
    let rank_key = |v: usize| (graph.adjacency[v].len(), v);
    let forward: Vec<Vec<VertexId>> = (0..n)
        .map(|u| {
            graph.adjacency[u]
                .iter()
                .copied()
                .filter(|&v| rank_key(v as usize) > rank_key(u))
                .collect()
        })
        .collect();

    let mut total: Count = 0;
    for u in 0..n {
        let fu = &forward[u];
        for &v in fu {
            total += sorted_intersection_len(fu, &forward[v as usize]) as Count;
        }
    }
    total
}

fn sorted_intersection_len(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut hits) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                hits += 1;
                i += 1;
                j += 1;
            }
        }
    }
    hits
}

/// `sum_v C(deg(v), 2)`.
pub fn count_cherries(graph: &SimpleGraph) -> Count {
    graph.adjacency.iter().map(|list| choose2(list.len() as Count)).sum()
}

pub(crate) fn choose2(x: Count) -> Count {
    x * x.saturating_sub(1) / 2
}

pub(crate) fn choose3(x: Count) -> Count {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

/// Induced 3-vertex subgraph counts by number of edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadCensus {
    pub p0: Count,
    pub p1: Count,
    pub p2: Count,
    pub p3: Count,
    pub kappa_triangle: Count,
    pub kappa_cherry: Count,
}

impl TriadCensus {
    /// Derives the census from `e`, the triangle and the cherry counts:
    /// `p2 = cherries - 3 triangles`, `p1 = e(n-2) - 3 triangles - 2 p2` and
    /// `p0` from the total `C(n, 3)`.
    pub fn compute(graph: &SimpleGraph) -> Self {
        let triangles = count_triangles(graph);
        let cherries = count_cherries(graph);
        Self::from_counts(graph.n(), graph.edge_count(), triangles, cherries)
    }

    pub(crate) fn from_counts(n: usize, e: usize, triangles: Count, cherries: Count) -> Self {
        let (n, e, t, c) = (n as i128, e as i128, triangles as i128, cherries as i128);
        let p2 = c - 3 * t;
        let p1 = e * (n - 2).max(0) - 3 * t - 2 * p2;
        let p0 = choose3(n as Count) as i128 - p1 - p2 - t;
        assert!(
            p0 >= 0 && p1 >= 0 && p2 >= 0,
            "census derivation went negative: p0={p0} p1={p1} p2={p2}; counting bug"
        );
        Self {
            p0: p0 as Count,
            p1: p1 as Count,
            p2: p2 as Count,
            p3: triangles,
            kappa_triangle: triangles,
            kappa_cherry: cherries,
        }
    }

    /// Enumerates all `C(n, 3)` vertex triples. Meant for cross-checking on
    /// small graphs.
    pub fn brute_force(graph: &SimpleGraph) -> Self {
        let n = graph.n();
        let mut matrix = vec![false; n * n];
        for u in 0..n {
            for &v in &graph.adjacency[u] {
                matrix[u * n + v as usize] = true;
            }
        }
        let mut p = [0 as Count; 4];
        let mut cherries: Count = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                let ab = matrix[a * n + b];
                for c in (b + 1)..n {
                    let (ac, bc) = (matrix[a * n + c], matrix[b * n + c]);
                    let edges = ab as usize + ac as usize + bc as usize;
                    p[edges] += 1;
                    // An induced path contains one cherry, a triangle three.
                    cherries += match edges {
                        2 => 1,
                        3 => 3,
                        _ => 0,
                    };
                }
            }
        }
        Self {
            p0: p[0],
            p1: p[1],
            p2: p[2],
            p3: p[3],
            kappa_triangle: p[3],
            kappa_cherry: cherries,
        }
    }

    pub fn total(&self) -> Count {
        self.p0 + self.p1 + self.p2 + self.p3
    }
}

/// `3 triangles - 2 cherries + e(n - 2)`. This equals `p1`, so the
/// Goodman-type inequality `3 triangles >= 2 cherries - e(n-2)` holds with
/// exactly `p1` to spare.
pub fn goodman_slack(graph: &SimpleGraph) -> i128 {
    let t = count_triangles(graph) as i128;
    let c = count_cherries(graph) as i128;
    let e = graph.edge_count() as i128;
    let n = graph.n() as i128;
    3 * t - 2 * c + e * (n - 2)
}

/// `n * C(x, 2)` with the real-valued `x = 6 e(H) / n`, the average degree of
/// the underlying graph. By convexity the cherry count of the underlying graph
/// is at least this, with equality iff that graph is regular.
pub fn jensen_cherry_lower_bound(system: &LinearTripleSystem) -> Rational {
    let n = system.n() as i128;
    if n == 0 {
        return Rational::from_integer(0);
    }
    let six_m = 6 * system.m() as i128;
    // n * x (x - 1) / 2 = 6m (6m - n) / (2n)
    Rational::new(six_m * (six_m - n), 2 * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple_system::generate_random_linear;
    use crate::triple_system::tests::fano;
    use proptest::prelude::*;

    fn complete(n: u32) -> SimpleGraph {
        SimpleGraph::from_edges(n as usize, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
    }

    /// Independent brute-force path count: ordered (a, centre, b) with a < b.
    fn brute_cherries(g: &SimpleGraph) -> Count {
        let n = g.n() as u32;
        let mut count = 0;
        for centre in 0..n {
            for a in 0..n {
                for b in (a + 1)..n {
                    if a != centre && b != centre && g.has_edge(a, centre) && g.has_edge(b, centre) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn underlying_graph_examples() {
        let single = LinearTripleSystem::validate(5, &[[0, 1, 2]]).unwrap();
        let u = underlying_graph(&single);
        assert_eq!(u.edge_count(), 3);
        assert_eq!(u.n(), 5);
        assert_eq!(count_triangles(&u), 1);

        let k7 = underlying_graph(&fano());
        assert_eq!(k7, complete(7));
        assert_eq!(k7.edge_count(), 21);

        let two = LinearTripleSystem::validate(6, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        let u = underlying_graph(&two);
        assert_eq!(u.edge_count(), 6);
        assert_eq!(count_triangles(&u), 2);
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(count_triangles(&complete(7)), 35);
        assert_eq!(TriadCensus::brute_force(&complete(7)).p3, 35);
        let c5 = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(count_triangles(&c5), 0);
    }

    #[test]
    fn cherry_examples() {
        let k7 = complete(7);
        assert_eq!(count_cherries(&k7), 105);
        assert_eq!(brute_cherries(&k7), 105);
        assert_eq!(count_cherries(&SimpleGraph::from_edges(2, [(0, 1)])), 0);
        assert_eq!(count_cherries(&SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)])), 3);
    }

    #[test]
    fn census_examples() {
        let k7 = TriadCensus::compute(&complete(7));
        assert_eq!((k7.p0, k7.p1, k7.p2, k7.p3), (0, 0, 0, 35));
        let empty = TriadCensus::compute(&SimpleGraph::from_edges(5, []));
        assert_eq!((empty.p0, empty.p1, empty.p2, empty.p3), (10, 0, 0, 0));
        let path = TriadCensus::compute(&SimpleGraph::from_edges(3, [(0, 1), (1, 2)]));
        assert_eq!((path.p0, path.p1, path.p2, path.p3), (0, 0, 1, 0));
    }

    #[test]
    fn goodman_examples() {
        assert_eq!(goodman_slack(&complete(7)), 0);
        assert_eq!(goodman_slack(&SimpleGraph::from_edges(3, [(0, 1)])), 1);
        assert_eq!(goodman_slack(&SimpleGraph::from_edges(6, [])), 0);
    }

    #[test]
    fn jensen_examples() {
        assert_eq!(jensen_cherry_lower_bound(&fano()), Rational::from_integer(105));
        assert_eq!(
            jensen_cherry_lower_bound(&LinearTripleSystem::empty(8)),
            Rational::from_integer(0)
        );
    }

    fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
        (1usize..=24).prop_flat_map(|n| {
            proptest::collection::vec((0..n as u32, 0..n as u32), 0..(n * n))
                .prop_map(move |edges| SimpleGraph::from_edges(n, edges))
        })
    }

    proptest! {
        #[test]
        fn fast_census_matches_brute_force(g in arb_graph()) {
            let fast = TriadCensus::compute(&g);
            let slow = TriadCensus::brute_force(&g);
            prop_assert_eq!(fast, slow);
            prop_assert_eq!(fast.total(), choose3(g.n() as Count));
            prop_assert_eq!(count_cherries(&g), brute_cherries(&g));
        }

        #[test]
        fn goodman_slack_is_p1(g in arb_graph()) {
            let slack = goodman_slack(&g);
            prop_assert!(slack >= 0);
            prop_assert_eq!(slack as Count, TriadCensus::brute_force(&g).p1);
        }

        #[test]
        fn jensen_bounds_cherries(n in 3usize..40, tenths in 1i128..=10, seed in any::<u64>()) {
            let h = generate_random_linear(n, Rational::new(tenths, 10), seed);
            let u = underlying_graph(&h);
            prop_assert_eq!(u.edge_count(), 3 * h.m());
            let bound = jensen_cherry_lower_bound(&h);
            let cherries = Rational::from_integer(count_cherries(&u) as i128);
            prop_assert!(cherries >= bound);
            prop_assert_eq!(cherries == bound, u.is_regular());
        }
    }
}
