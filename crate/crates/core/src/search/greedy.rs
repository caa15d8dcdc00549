use super::{is_config, seed_from_bowtie_edge, Configuration, Meter, SearchBudget};
use crate::bowtie::{BowtieGraph, ComponentStats};
use crate::triple_system::{EdgeId, LinearTripleSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyOutcome {
    Found(Configuration),
    /// No triple meets the span in two or more vertices; carries the largest
    /// configuration reached.
    Stuck(Configuration),
}

/// Grows `seed` to `k` triples, keeping `|span| <= |edges| + 3`.
///
/// Each step adds a triple outside the configuration that meets the current
/// span in at least two vertices, so the span grows by at most one. Triples
/// inside the span are preferred, then lower edge index.
///
/// Panics if `seed` has excess above 3 or more than `k` triples.
pub fn greedy_extend(system: &LinearTripleSystem, seed: &Configuration, k: usize) -> GreedyOutcome {
    assert!(seed.excess() <= 3, "seed spans more than |edges| + 3 vertices");
    assert!(seed.len() <= k, "seed already has more than k triples");

    let mut current = seed.clone();
    while current.len() < k {
        let Some(next) = best_extension(system, &current) else {
            return GreedyOutcome::Stuck(current);
        };
        let mut edges = current.edges().to_vec();
        edges.push(next);
        current = Configuration::new(system, edges).expect("extension is a valid edge");
        assert!(current.excess() <= 3, "greedy invariant broken");
    }
    GreedyOutcome::Found(current)
}

fn best_extension(system: &LinearTripleSystem, config: &Configuration) -> Option<EdgeId> {
    let span = config.span();
    let mut best: Option<(usize, EdgeId)> = None;
    for (i, &u) in span.iter().enumerate() {
        for &w in &span[i + 1..] {
            let Some(g) = system.covering_edge(u, w) else { continue };
            if config.edges().binary_search(&g).is_ok() {
                continue;
            }
            let inside = system
                .edge(g)
                .vertices()
                .iter()
                .filter(|v| span.binary_search(v).is_ok())
                .count();
            let better = match best {
                None => true,
                Some((b_inside, b_edge)) => inside > b_inside || (inside == b_inside && g < b_edge),
            };
            if better {
                best = Some((inside, g));
            }
        }
    }
    best.map(|(_, g)| g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A verified `(k+3, k)`-configuration.
    Found(Configuration),
    /// Seeds ran out (or the budget did); `best` is the largest configuration
    /// of excess at most 3 reached along the way.
    Failure {
        best: Option<Configuration>,
        budget_exhausted: bool,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Configuration> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::Failure { .. } => None,
        }
    }
}

/// Runs [`greedy_extend`] from every bow-tie edge inside `component`, in
/// ascending position order, and returns the first success.
pub fn component_guided_search(
    system: &LinearTripleSystem,
    bowtie: &BowtieGraph,
    component: &ComponentStats,
    k: usize,
) -> SearchOutcome {
    guided_search(system, bowtie, [component], k, SearchBudget::unlimited())
}

/// [`component_guided_search`] over several components in order, sharing one
/// budget; each seed tried counts as one node.
pub fn guided_search<'c>(
    system: &LinearTripleSystem,
    bowtie: &BowtieGraph,
    components: impl IntoIterator<Item = &'c ComponentStats>,
    k: usize,
    budget: SearchBudget,
) -> SearchOutcome {
    if k == 0 {
        return SearchOutcome::Failure {
            best: None,
            budget_exhausted: false,
        };
    }
    let mut meter = Meter::new(budget);
    let mut best: Option<Configuration> = None;
    let keep_best = |candidate: Configuration, best: &mut Option<Configuration>| {
        if best.as_ref().is_none_or(|b| candidate.len() > b.len()) {
            *best = Some(candidate);
        }
    };

    for component in components {
        for &p in &component.members {
            let p = p as usize;
            let pair = bowtie.pair(p);
            let pair_config = Configuration::new(system, [pair.lo, pair.hi]).expect("valid labels");
            if k <= 2 {
                // Two triples meeting in a point span 5 = 2 + 3 vertices.
                let c = truncate(system, &pair_config, k);
                return verified(system, c, k);
            }
            if bowtie.degree(p) == 0 {
                keep_best(pair_config, &mut best);
                continue;
            }
            for &q in bowtie.neighbors(p).iter().filter(|&&q| q as usize > p) {
                if !meter.tick() {
                    return SearchOutcome::Failure {
                        best,
                        budget_exhausted: true,
                    };
                }
                let seed = seed_from_bowtie_edge(system, bowtie, (p, q as usize));
                match greedy_extend(system, &seed, k) {
                    GreedyOutcome::Found(c) => return verified(system, c, k),
                    GreedyOutcome::Stuck(c) => keep_best(c, &mut best),
                }
            }
        }
    }
    SearchOutcome::Failure {
        best,
        budget_exhausted: false,
    }
}

fn truncate(system: &LinearTripleSystem, config: &Configuration, k: usize) -> Configuration {
    Configuration::new(system, config.edges()[..k.max(1)].iter().copied()).expect("prefix of a configuration")
}

fn verified(system: &LinearTripleSystem, config: Configuration, k: usize) -> SearchOutcome {
    assert!(
        is_config(system, config.edges(), k + 3, k).expect("indices come from the system"),
        "search produced an unsound witness {:?}",
        config.edges()
    );
    SearchOutcome::Found(config)
}
