//! Branch-and-bound over edge subsets, used as the ground-truth oracle on
//! small instances.
//!
//! Subsets are grown in increasing edge index, so the first complete subset
//! reached is the lexicographically smallest witness. All subsets are
//! searched; there is no connectivity restriction.
//!
//! Pruning. Suppose the partial set has `j` edges, span `S` with `|S| = sigma`,
//! and largest index `l`. Any completion adds `k - j` edges of index above
//! `l`, and its final span `T` satisfies `S ⊆ T` and `|T| <= s`. For each added
//! edge `g`, `g \ S ⊆ T \ S`, so `|g \ S| <= s - sigma`. Hence only edges of
//! index above `l` with at most `s - sigma` vertices outside `S` can ever be
//! added, and if fewer than `k - j` of them exist no completion is valid. The
//! search branches only on those candidates and cuts when too few remain, so
//! it never discards a subset that extends to a valid configuration.
//! `sigma > s` is the special case with no candidates at all.

use super::{is_config, Configuration, Meter, SearchBudget};
use crate::triple_system::{EdgeId, LinearTripleSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExhaustiveOutcome {
    /// Lexicographically first witness.
    Found(Configuration),
    /// The whole search space was explored.
    NotFound,
    /// The budget ran out first.
    Indeterminate,
}

struct State<'a> {
    system: &'a LinearTripleSystem,
    k: usize,
    s: usize,
    /// How many chosen edges cover each vertex.
    cover: Vec<u16>,
    span: usize,
    chosen: Vec<EdgeId>,
    meter: Meter,
}

impl State<'_> {
    fn outside(&self, e: EdgeId) -> usize {
        self.system
            .edge(e)
            .vertices()
            .iter()
            .filter(|&&v| self.cover[v as usize] == 0)
            .count()
    }

    fn push(&mut self, e: EdgeId) {
        for v in self.system.edge(e).vertices() {
            if self.cover[v as usize] == 0 {
                self.span += 1;
            }
            self.cover[v as usize] += 1;
        }
        self.chosen.push(e);
    }

    fn pop(&mut self) {
        let e = self.chosen.pop().expect("pop after push");
        for v in self.system.edge(e).vertices() {
            self.cover[v as usize] -= 1;
            if self.cover[v as usize] == 0 {
                self.span -= 1;
            }
        }
    }

    /// `Some(true)` found, `Some(false)` subtree exhausted, `None` budget out.
    fn descend(&mut self, from: EdgeId) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        if self.chosen.len() == self.k {
            return Some(self.span <= self.s);
        }
        let slack = self.s.saturating_sub(self.span);
        if self.span > self.s {
            return Some(false);
        }
        let need = self.k - self.chosen.len();
        let candidates: Vec<EdgeId> = (from..self.system.m() as EdgeId)
            .filter(|&e| self.outside(e) <= slack)
            .collect();
        if candidates.len() < need {
            return Some(false);
        }
        for (i, &e) in candidates.iter().enumerate() {
            if candidates.len() - i < need {
                break;
            }
            self.push(e);
            match self.descend(e + 1) {
                Some(false) => self.pop(),
                // Keep the chosen edges on success.
                result => return result,
            }
        }
        Some(false)
    }
}

pub fn exhaustive_search(system: &LinearTripleSystem, k: usize, s: usize, budget: SearchBudget) -> ExhaustiveOutcome {
    if k == 0 || k > system.m() {
        return ExhaustiveOutcome::NotFound;
    }
    let mut state = State {
        system,
        k,
        s,
        cover: vec![0; system.n()],
        span: 0,
        chosen: Vec::with_capacity(k),
        meter: Meter::new(budget),
    };
    match state.descend(0) {
        Some(true) => {
            let config = Configuration::new(system, state.chosen.iter().copied()).expect("chosen edges are valid");
            assert!(
                is_config(system, config.edges(), s, k).expect("valid indices"),
                "exhaustive search produced an unsound witness"
            );
            ExhaustiveOutcome::Found(config)
        }
        Some(false) => ExhaustiveOutcome::NotFound,
        None => ExhaustiveOutcome::Indeterminate,
    }
}
