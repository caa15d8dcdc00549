use std::collections::{BTreeMap, VecDeque};

use super::BowtieGraph;
use crate::rational::Rational;

/// A connected component of the bow-tie graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStats {
    pub id: usize,
    pub size: usize,
    pub edges: usize,
    pub avg_degree: Rational,
    /// `avg_degree >= 6`.
    pub dense: bool,
    /// Member positions, ascending.
    pub members: Vec<u32>,
}

pub const DENSE_AVG_DEGREE: i128 = 6;

/// Components by breadth-first search, largest first; ties go to the
/// component holding the smaller position.
pub fn components(bowtie: &BowtieGraph) -> Vec<ComponentStats> {
    let order = bowtie.order();
    let mut seen = vec![false; order];
    let mut queue = VecDeque::new();
    let mut found = Vec::new();
    for root in 0..order {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut members = Vec::new();
        let mut degree_sum = 0;
        while let Some(p) = queue.pop_front() {
            members.push(p as u32);
            degree_sum += bowtie.degree(p);
            for &q in bowtie.neighbors(p) {
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    queue.push_back(q as usize);
                }
            }
        }
        members.sort_unstable();
        let size = members.len();
        let avg_degree = Rational::new(degree_sum as i128, size as i128);
        found.push(ComponentStats {
            id: 0,
            size,
            edges: degree_sum / 2,
            dense: avg_degree >= Rational::from_integer(DENSE_AVG_DEGREE),
            avg_degree,
            members,
        });
    }
    found.sort_by(|a, b| b.size.cmp(&a.size).then(a.members[0].cmp(&b.members[0])));
    for (id, c) in found.iter_mut().enumerate() {
        c.id = id;
    }
    found
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DenseCensus {
    /// Number of dense components.
    pub dense_count: usize,
    /// Dense components with fewer than `bound` vertices.
    pub dense_small_count: usize,
    /// Component size -> number of components of that size (all components).
    pub size_histogram: BTreeMap<usize, usize>,
    /// Total size of the dense components.
    pub dense_vertex_total: usize,
}

pub fn dense_census(components: &[ComponentStats], bound: u64) -> DenseCensus {
    let mut census = DenseCensus::default();
    for c in components {
        *census.size_histogram.entry(c.size).or_default() += 1;
        if c.dense {
            census.dense_count += 1;
            census.dense_vertex_total += c.size;
            if (c.size as u64) < bound {
                census.dense_small_count += 1;
            }
        }
    }
    census
}
