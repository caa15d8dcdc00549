//! Linear 3-uniform hypergraphs ("linear triple systems").
//!
//! A [`LinearTripleSystem`] is validated once at construction: every triple
//! has three distinct in-range vertices and no vertex pair lies in two
//! triples. Everything downstream relies on that.

mod format;
mod generate;

pub use format::{parse, serialize};
pub use generate::{dilute, generate_random_linear, generate_steiner};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type VertexId = u32;
pub type EdgeId = u32;

const UNCOVERED: u32 = u32::MAX;

/// Three distinct vertices in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple([VertexId; 3]);

impl Triple {
    /// Sorts the vertices; `None` if any two coincide.
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Option<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            None
        } else {
            Some(Triple(v))
        }
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The three vertex pairs, each as `(lo, hi)`.
    pub fn pairs(&self) -> [(VertexId, VertexId); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// The common vertex of two triples meeting in exactly one vertex.
    pub fn single_intersection(&self, other: &Triple) -> Option<VertexId> {
        let mut shared = self.0.iter().filter(|v| other.contains(**v));
        match (shared.next(), shared.next()) {
            (Some(&v), None) => Some(v),
            _ => None,
        }
    }

    pub fn intersection_size(&self, other: &Triple) -> usize {
        self.0.iter().filter(|v| other.contains(**v)).count()
    }
}

/// Index of the unordered pair `{u, v}` (u < v) in a packed upper triangle.
#[inline]
fn pair_slot(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearTripleSystem {
    n: usize,
    edges: Vec<Triple>,
    /// Covering edge for each vertex pair, or `UNCOVERED`.
    pair_index: Vec<EdgeId>,
    /// Ascending edge indices through each vertex.
    incidence: Vec<Vec<EdgeId>>,
}

impl LinearTripleSystem {
    /// Validates raw triples. Edge order is kept; each triple is sorted.
    pub fn validate(n: usize, triples: &[[usize; 3]]) -> Result<Self> {
        assert!(
            n <= u32::MAX as usize && triples.len() < u32::MAX as usize,
            "system too large for 32-bit ids"
        );
        let slots = n * n.saturating_sub(1) / 2;
        let mut pair_index = vec![UNCOVERED; slots];
        let mut incidence = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(triples.len());

        for (index, raw) in triples.iter().enumerate() {
            if let Some(&vertex) = raw.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { index, vertex, n });
            }
            let triple = Triple::new(raw[0] as u32, raw[1] as u32, raw[2] as u32)
                .ok_or(Error::RepeatedVertexInTriple { index })?;
            for (u, v) in triple.pairs() {
                let slot = pair_slot(n, u as usize, v as usize);
                let first = pair_index[slot];
                if first != UNCOVERED {
                    let first = first as usize;
                    return Err(if edges[first] == triple {
                        Error::DuplicateTriple { first, second: index }
                    } else {
                        Error::PairCoveredTwice {
                            first,
                            second: index,
                            pair: (u as usize, v as usize),
                        }
                    });
                }
                pair_index[slot] = index as EdgeId;
            }
            for v in triple.vertices() {
                incidence[v as usize].push(index as EdgeId);
            }
            edges.push(triple);
        }

        Ok(Self {
            n,
            edges,
            pair_index,
            incidence,
        })
    }

    pub(crate) fn from_triples(n: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let raw: Vec<[usize; 3]> = triples.into_iter().map(|t| t.vertices().map(|v| v as usize)).collect();
        Self::validate(n, &raw)
    }

    pub fn empty(n: usize) -> Self {
        Self::validate(n, &[]).expect("empty system is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge(&self, index: EdgeId) -> &Triple {
        &self.edges[index as usize]
    }

    /// The unique edge containing both `u` and `v`.
    pub fn covering_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (u, v) = (u.min(v) as usize, u.max(v) as usize);
        if u == v || v >= self.n {
            return None;
        }
        match self.pair_index[pair_slot(self.n, u, v)] {
            UNCOVERED => None,
            e => Some(e),
        }
    }

    /// Edges through `v`, ascending.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v as usize].len()
    }

    /// `3m / C(n, 2)` as an exact rational.
    pub fn linear_density(&self) -> Result<Rational> {
        if self.n < 2 {
            return Err(Error::DegenerateSystem { n: self.n });
        }
        let pairs = (self.n * (self.n - 1) / 2) as i128;
        Ok(Rational::new(3 * self.m() as i128, pairs))
    }

    /// Every vertex pair covered exactly once.
    pub fn is_steiner(&self) -> bool {
        self.n >= 3 && 3 * self.m() == self.n * (self.n - 1) / 2
    }

    /// Sub-system keeping only the listed edges, in the given order.
    pub(crate) fn restrict(&self, keep: impl IntoIterator<Item = EdgeId>) -> Self {
        Self::from_triples(self.n, keep.into_iter().map(|e| self.edges[e as usize]))
            .expect("a subset of a linear system is linear")
    }
}
