//! The bow-tie graph of a linear triple system.
//!
//! Vertices are unordered pairs of triples meeting in exactly one vertex.
//! `{e, f}` and `{f, g}` are adjacent when `e`, `f`, `g` pairwise meet in
//! single vertices and have no common vertex, i.e. when the three triples
//! form a triangle spanning six vertices.
//!
//! Fixing a vertex `{e, f}` with common point `v`, each of its neighbours is
//! determined by a pair `x in e \ v`, `y in f \ v` together with the triple
//! `g` covering `{x, y}`. That gives at most four choices of `g` and two
//! neighbours per choice, hence maximum degree 8.

mod bounds;
mod components;

pub use bounds::{avg_degree_bound, size_lower_bound, up_avg_check, SizeBound};
pub use components::{components, dense_census, ComponentStats, DenseCensus};

use std::fmt::Write as _;

use crate::census::{choose2, count_cherries, count_triangles, Count, SimpleGraph};
use crate::rational::Rational;
use crate::triple_system::{EdgeId, LinearTripleSystem, Triple, VertexId};

pub const MAX_DEGREE: usize = 8;

/// A pair of triples `lo < hi` meeting exactly in `shared`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BowtiePair {
    pub lo: EdgeId,
    pub hi: EdgeId,
    pub shared: VertexId,
}

impl BowtiePair {
    /// The triple label the two pairs have in common, if exactly one.
    pub fn common_label(&self, other: &BowtiePair) -> Option<EdgeId> {
        let mine = [self.lo, self.hi];
        let mut shared = mine.iter().filter(|e| **e == other.lo || **e == other.hi);
        match (shared.next(), shared.next()) {
            (Some(&e), None) => Some(e),
            _ => None,
        }
    }
}

/// Adjacency is stored in compressed rows; positions of pairs sharing the
/// vertex `v` form a contiguous block ordered lexicographically by `(lo, hi)`.
#[derive(Debug, Clone)]
pub struct BowtieGraph {
    verts: Vec<BowtiePair>,
    block_start: Vec<usize>,
    incidence: Vec<Vec<EdgeId>>,
    triples: Vec<Triple>,
    adj_start: Vec<usize>,
    adj: Vec<u32>,
}

/// Lexicographic rank of `(i, j)`, `i < j < d`, among all such pairs.
#[inline]
fn local_rank(d: usize, i: usize, j: usize) -> usize {
    i * (2 * d - i - 1) / 2 + (j - i - 1)
}

pub fn build_bowtie(system: &LinearTripleSystem) -> BowtieGraph {
    let n = system.n();
    let incidence: Vec<Vec<EdgeId>> = (0..n as VertexId).map(|v| system.incident(v).to_vec()).collect();

    let mut block_start = Vec::with_capacity(n + 1);
    let mut verts = Vec::new();
    for (v, through) in incidence.iter().enumerate() {
        block_start.push(verts.len());
        for (i, &lo) in through.iter().enumerate() {
            for &hi in &through[i + 1..] {
                verts.push(BowtiePair {
                    lo,
                    hi,
                    shared: v as VertexId,
                });
            }
        }
    }
    block_start.push(verts.len());
    assert!(
        verts.len() < u32::MAX as usize,
        "bow-tie graph too large for 32-bit positions"
    );

    let mut graph = BowtieGraph {
        verts,
        block_start,
        incidence,
        triples: system.edges().to_vec(),
        adj_start: Vec::new(),
        adj: Vec::new(),
    };

    let mut adj_start = Vec::with_capacity(graph.verts.len() + 1);
    let mut adj = Vec::with_capacity(graph.verts.len() * MAX_DEGREE);
    let mut row: Vec<u32> = Vec::with_capacity(MAX_DEGREE);
    for pair in &graph.verts {
        row.clear();
        let (e, f) = (system.edge(pair.lo), system.edge(pair.hi));
        for x in e.vertices().into_iter().filter(|&x| x != pair.shared) {
            for y in f.vertices().into_iter().filter(|&y| y != pair.shared) {
                // y lies outside e and x outside f, so g differs from both and
                // cannot contain the shared vertex.
                if let Some(g) = system.covering_edge(x, y) {
                    row.push(graph.locate(pair.lo, g, x) as u32);
                    row.push(graph.locate(pair.hi, g, y) as u32);
                }
            }
        }
        row.sort_unstable();
        adj_start.push(adj.len());
        adj.extend_from_slice(&row);
    }
    adj_start.push(adj.len());
    graph.adj_start = adj_start;
    graph.adj = adj;
    graph
}

impl BowtieGraph {
    fn locate(&self, a: EdgeId, b: EdgeId, shared: VertexId) -> usize {
        let through = &self.incidence[shared as usize];
        let (lo, hi) = (a.min(b), a.max(b));
        let i = through.binary_search(&lo).expect("lo passes through shared vertex");
        let j = through.binary_search(&hi).expect("hi passes through shared vertex");
        self.block_start[shared as usize] + local_rank(through.len(), i, j)
    }

    /// Number of vertices `|B|`.
    pub fn order(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[BowtiePair] {
        &self.verts
    }

    pub fn pair(&self, position: usize) -> BowtiePair {
        self.verts[position]
    }

    /// Position of the pair `{a, b}`, if the two triples meet in one vertex.
    pub fn position(&self, a: EdgeId, b: EdgeId) -> Option<usize> {
        let (ta, tb) = (self.triples.get(a as usize)?, self.triples.get(b as usize)?);
        let shared = ta.single_intersection(tb)?;
        Some(self.locate(a, b, shared))
    }

    pub fn neighbors(&self, position: usize) -> &[u32] {
        &self.adj[self.adj_start[position]..self.adj_start[position + 1]]
    }

    pub fn degree(&self, position: usize) -> usize {
        self.adj_start[position + 1] - self.adj_start[position]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|p| self.degree(p)).max().unwrap_or(0)
    }

    /// Maximum degree. Panics above 8, which can only mean a construction bug.
    pub fn check_degree_bound(&self) -> usize {
        let max = self.max_degree();
        assert!(max <= MAX_DEGREE, "bow-tie graph has degree {max} > {MAX_DEGREE}");
        max
    }

    /// `2 e(B) / |B|`, or 0 for the empty graph.
    pub fn avg_degree(&self) -> Rational {
        if self.is_empty() {
            Rational::from_integer(0)
        } else {
            Rational::new(2 * self.edge_count() as i128, self.order() as i128)
        }
    }

    /// Each undirected edge once, as position pairs `(p, q)` with `p < q`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |p| {
            self.neighbors(p)
                .iter()
                .map(|&q| q as usize)
                .filter(move |&q| q > p)
                .map(move |q| (p, q))
        })
    }

    /// Debug dump: `|B| e(B)` then one `lo,hi lo',hi'` line per edge.
    pub fn dump_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.order(), self.edge_count());
        for (p, q) in self.edges() {
            let (a, b) = (self.verts[p], self.verts[q]);
            let _ = writeln!(out, "{},{} {},{}", a.lo, a.hi, b.lo, b.hi);
        }
        out
    }
}

/// `(e(B), 3 triangles(U) - 3 e(H))`; always equal.
pub fn edge_identity(system: &LinearTripleSystem, bowtie: &BowtieGraph, underlying: &SimpleGraph) -> (i128, i128) {
    let lhs = bowtie.edge_count() as i128;
    let rhs = 3 * count_triangles(underlying) as i128 - 3 * system.m() as i128;
    (lhs, rhs)
}

/// `(4|B| + 3e(H), cherries(U))`; always equal.
///
/// Every cherry of `U` either lies inside one triple (three per triple) or
/// inside a unique intersecting pair of triples (four per pair).
pub fn cherry_pair_identity(
    system: &LinearTripleSystem,
    bowtie: &BowtieGraph,
    underlying: &SimpleGraph,
) -> (i128, i128) {
    let lhs = 4 * bowtie.order() as i128 + 3 * system.m() as i128;
    let rhs = count_cherries(underlying) as i128;
    (lhs, rhs)
}

/// `sum_v C(deg_H(v), 2)`, the number of intersecting pairs of triples.
pub fn intersecting_pair_count(system: &LinearTripleSystem) -> Count {
    (0..system.n() as VertexId)
        .map(|v| choose2(system.degree(v) as Count))
        .sum()
}
