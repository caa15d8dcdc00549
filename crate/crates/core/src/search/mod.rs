//! `(s, k)`-configurations: `k` triples whose union has at most `s` vertices.
//!
//! [`is_config`] is the ground truth. Every search routine re-checks its
//! answer against it before returning.

mod exhaustive;
mod greedy;

pub use exhaustive::{exhaustive_search, ExhaustiveOutcome};
pub use greedy::{component_guided_search, greedy_extend, guided_search, GreedyOutcome, SearchOutcome};

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bowtie::BowtieGraph;
use crate::error::{Error, Result};
use crate::triple_system::{EdgeId, LinearTripleSystem, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    edges: Vec<EdgeId>,
    span: Vec<VertexId>,
}

impl Configuration {
    /// Deduplicates and sorts `edges`. Fails on an empty set or a bad index.
    pub fn new(system: &LinearTripleSystem, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        if let Some(&bad) = edges.iter().find(|&&e| e as usize >= system.m()) {
            return Err(Error::BadIndex {
                index: bad as usize,
                m: system.m(),
            });
        }
        if edges.is_empty() {
            return Err(Error::BadIndex {
                index: 0,
                m: system.m(),
            });
        }
        let span = span_of(system, &edges);
        Ok(Self { edges, span })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn span(&self) -> &[VertexId] {
        &self.span
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `|span| - |edges|`; a `(k+3, k)`-configuration has excess at most 3.
    pub fn excess(&self) -> isize {
        self.span.len() as isize - self.edges.len() as isize
    }

    pub fn witness(&self, s: usize) -> Witness {
        Witness {
            k: self.len(),
            s,
            edge_indices: self.edges.clone(),
            span_vertices: self.span.clone(),
        }
    }
}

fn span_of(system: &LinearTripleSystem, edges: &[EdgeId]) -> Vec<VertexId> {
    let mut span: Vec<VertexId> = edges.iter().flat_map(|&e| system.edge(e).vertices()).collect();
    span.sort_unstable();
    span.dedup();
    span
}

/// True iff `edges` names exactly `k` distinct triples spanning at most `s`
/// vertices.
pub fn is_config(system: &LinearTripleSystem, edges: &[EdgeId], s: usize, k: usize) -> Result<bool> {
    if let Some(&bad) = edges.iter().find(|&&e| e as usize >= system.m()) {
        return Err(Error::BadIndex {
            index: bad as usize,
            m: system.m(),
        });
    }
    let mut distinct = edges.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(distinct.len() == k && span_of(system, &distinct).len() <= s)
}

/// Witness record as embedded in reports and printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub k: usize,
    pub s: usize,
    pub edge_indices: Vec<EdgeId>,
    pub span_vertices: Vec<VertexId>,
}

/// The three triples behind a bow-tie edge `{e, f} ~ {f, g}`; they span
/// exactly six vertices.
pub fn seed_from_bowtie_edge(system: &LinearTripleSystem, bowtie: &BowtieGraph, edge: (usize, usize)) -> Configuration {
    let (a, b) = (bowtie.pair(edge.0), bowtie.pair(edge.1));
    debug_assert!(
        bowtie.neighbors(edge.0).contains(&(edge.1 as u32)),
        "not a bow-tie edge"
    );
    let seed = Configuration::new(system, [a.lo, a.hi, b.lo, b.hi]).expect("bow-tie labels are valid edges");
    debug_assert_eq!((seed.len(), seed.span().len()), (3, 6));
    seed
}

/// Node and wall-clock limits for a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
    max_millis: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_millis: u64) -> Result<Self> {
        if max_nodes == 0 || max_millis == 0 {
            return Err(Error::BadBudget);
        }
        Ok(Self { max_nodes, max_millis })
    }

    pub fn unlimited() -> Self {
        Self {
            max_nodes: u64::MAX,
            max_millis: u64::MAX,
        }
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    pub fn max_millis(&self) -> u64 {
        self.max_millis
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 50_000_000,
            max_millis: 60_000,
        }
    }
}

/// Counts search nodes against a [`SearchBudget`].
pub(crate) struct Meter {
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    exhausted: bool,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Self {
            nodes: 0,
            budget,
            started: Instant::now(),
            exhausted: false,
        }
    }

    /// Records one node; false once either limit is hit.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if self.nodes >= self.budget.max_nodes {
            self.exhausted = true;
            return false;
        }
        self.nodes += 1;
        if self.budget.max_millis != u64::MAX
            && self.nodes.is_multiple_of(256)
            && self.started.elapsed() >= Duration::from_millis(self.budget.max_millis)
        {
            self.exhausted = true;
            return false;
        }
        true
    }
}
