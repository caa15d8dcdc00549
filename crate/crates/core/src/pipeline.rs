//! End-to-end analysis of one instance: census, bow-tie graph, every counting
//! identity and bound, component decomposition and a verified witness search.
//!
//! Each identity or inequality lands in the report as a [`Check`] with both
//! sides written out exactly. A check is `required` when its hypotheses hold
//! for the instance; a failing required check is an internal error, never a
//! property of the input.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bowtie::{
    self, avg_degree_bound, build_bowtie, components, dense_census, size_lower_bound, up_avg_check, BowtieGraph,
    ComponentStats, MAX_DEGREE,
};
use crate::census::{choose3, goodman_slack, jensen_cherry_lower_bound, underlying_graph, SimpleGraph, TriadCensus};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::search::{guided_search, is_config, SearchBudget, SearchOutcome, Witness};
use crate::thresholds;
use crate::triple_system::LinearTripleSystem;

pub const SCHEMA_VERSION: u32 = 1;

/// Largest `n` for which reports cross-check the census by brute force.
pub const BRUTE_FORCE_CENSUS_MAX_N: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub required: bool,
}

impl Check {
    fn new(name: &str, lhs: impl ToString, relation: &str, rhs: impl ToString, holds: bool, required: bool) -> Self {
        Self {
            name: name.to_string(),
            relation: relation.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds,
            required,
        }
    }

    fn eq<T: PartialEq + ToString>(name: &str, lhs: T, rhs: T) -> Self {
        let holds = lhs == rhs;
        Self::new(name, lhs, "==", rhs, holds, true)
    }

    fn ge(name: &str, lhs: Rational, rhs: Rational, required: bool) -> Self {
        Self::new(
            name,
            rational::display(&lhs),
            ">=",
            rational::display(&rhs),
            lhs >= rhs,
            required,
        )
    }

    fn le(name: &str, lhs: Rational, rhs: Rational, required: bool) -> Self {
        Self::new(
            name,
            rational::display(&lhs),
            "<=",
            rational::display(&rhs),
            lhs <= rhs,
            required,
        )
    }

    pub fn violated(&self) -> bool {
        self.required && !self.holds
    }
}

fn int(x: impl Into<i128>) -> Rational {
    Rational::from_integer(x.into())
}

fn count(x: u128) -> Rational {
    Rational::from_integer(x as i128)
}

/// Everything derived from a system before any search.
pub struct Structure {
    pub density: Rational,
    pub underlying: SimpleGraph,
    pub census: TriadCensus,
    pub bowtie: BowtieGraph,
    pub components: Vec<ComponentStats>,
    timings: [u64; 3],
}

impl Structure {
    pub fn build(system: &LinearTripleSystem) -> Result<Self> {
        let density = system.linear_density()?;
        let clock = Instant::now();
        let underlying = underlying_graph(system);
        let census = TriadCensus::compute(&underlying);
        let census_ms = clock.elapsed().as_millis() as u64;

        let clock = Instant::now();
        let bowtie = build_bowtie(system);
        let bowtie_ms = clock.elapsed().as_millis() as u64;

        let clock = Instant::now();
        let components = components(&bowtie);
        let components_ms = clock.elapsed().as_millis() as u64;

        Ok(Self {
            density,
            underlying,
            census,
            bowtie,
            components,
            timings: [census_ms, bowtie_ms, components_ms],
        })
    }

    /// Every identity and bound that does not depend on `k`.
    pub fn checks(&self, system: &LinearTripleSystem) -> Vec<Check> {
        let n = system.n();
        let m = system.m() as i128;
        let c = &self.census;
        let e_u = self.underlying.edge_count() as i128;
        let b = &self.bowtie;
        let order = b.order() as i128;
        let mut checks = vec![
            Check::eq("underlying_edges", e_u, 3 * m),
            Check::eq("census_total", c.total(), choose3(n as u128)),
            Check::eq(
                "census_edge_double_count",
                e_u * (n as i128 - 2).max(0),
                3 * c.kappa_triangle as i128 + 2 * c.p2 as i128 + c.p1 as i128,
            ),
            Check::eq("census_cherry_count", c.kappa_cherry, 3 * c.kappa_triangle + c.p2),
        ];
        if n <= BRUTE_FORCE_CENSUS_MAX_N {
            let brute = TriadCensus::brute_force(&self.underlying);
            let show = |t: &TriadCensus| format!("({},{},{},{})", t.p0, t.p1, t.p2, t.p3);
            checks.push(Check::new(
                "census_brute_force",
                show(c),
                "==",
                show(&brute),
                *c == brute,
                true,
            ));
        }
        let slack = goodman_slack(&self.underlying);
        checks.push(Check::eq("goodman_slack_equals_p1", slack, c.p1 as i128));
        checks.push(Check::ge(
            "goodman_inequality",
            count(3 * c.kappa_triangle),
            count(2 * c.kappa_cherry) - int(e_u * (n as i128 - 2)),
            true,
        ));
        checks.push(Check::ge(
            "jensen_cherry_bound",
            count(c.kappa_cherry),
            jensen_cherry_lower_bound(system),
            true,
        ));

        let max_degree = b.max_degree();
        checks.push(Check::new(
            "bowtie_max_degree",
            max_degree,
            "<=",
            MAX_DEGREE,
            max_degree <= MAX_DEGREE,
            true,
        ));
        let (lhs, rhs) = bowtie::edge_identity(system, b, &self.underlying);
        checks.push(Check::eq("bowtie_edge_identity", lhs, rhs));
        let (lhs, rhs) = bowtie::cherry_pair_identity(system, b, &self.underlying);
        checks.push(Check::eq("bowtie_cherry_pair_identity", lhs, rhs));
        checks.push(Check::le(
            "bowtie_cherry_bound",
            int(4 * order),
            count(c.kappa_cherry),
            true,
        ));
        checks.push(Check::eq(
            "bowtie_pair_count",
            order,
            bowtie::intersecting_pair_count(system) as i128,
        ));

        if !b.is_empty() {
            if let Ok((actual, bound)) = avg_degree_bound(system, b) {
                checks.push(Check::ge("avg_degree_bound", actual, bound, true));
            }
            let (lhs, rhs) = up_avg_check(b, &self.components).expect("non-empty bow-tie graph");
            checks.push(Check::le("up_avg", lhs, rhs, true));
        }
        if let Ok(size) = size_lower_bound(system, b) {
            checks.push(Check::ge("size_lower_bound", int(order), size.bound, size.applicable));
        }

        if let Some(eps) = self.eps() {
            let n3 = thresholds::n3(eps.min(Rational::new(1, 5)));
            checks.push(Check::ge(
                "avg_degree_six_plus_eps",
                b.avg_degree(),
                int(6) + eps,
                n as u64 >= n3 && !b.is_empty(),
            ));
            let n1 = rational::ceil(&(int(12) / self.density)) as usize;
            let n_cubed = (n as i128).pow(3);
            checks.push(Check::ge(
                "bowtie_order_n3_over_25",
                int(order),
                Rational::new(n_cubed, 25),
                n >= n1,
            ));
        }
        checks
    }

    /// `d - 4/5` when positive.
    pub fn eps(&self) -> Option<Rational> {
        let eps = self.density - Rational::new(4, 5);
        (eps > int(0)).then_some(eps)
    }
}

/// Every `k`-independent check for `system`, without any search.
pub fn verify_instance(system: &LinearTripleSystem) -> Result<Vec<Check>> {
    let structure = Structure::build(system)?;
    Ok(structure.checks(system))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub k: usize,
    /// Component size that counts as "large"; defaults to `10 (k + 3)`.
    pub component_bound: u64,
    pub budget: SearchBudget,
    /// Record wall-clock timings. Off by default so reports are reproducible.
    pub timings: bool,
}

impl PipelineOptions {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            component_bound: default_component_bound(k),
            budget: SearchBudget::default(),
            timings: false,
        }
    }
}

pub fn default_component_bound(k: usize) -> u64 {
    10 * (k as u64 + 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Some component reaches the size bound; search starts from the largest.
    LargeComponent,
    /// All components are small; search starts from dense components.
    DenseComponents,
    /// The bow-tie graph has no edges, so there is nothing to seed from.
    NoSeeds,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub n: usize,
    pub m: usize,
    pub density: String,
    pub density_value: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub underlying_edges: u64,
    pub kappa_triangle: u64,
    pub kappa_cherry: u64,
    pub p0: u64,
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BowtieSummary {
    pub order: u64,
    pub edge_count: u64,
    pub max_degree: u64,
    pub avg_degree: String,
    pub avg_degree_value: f64,
    /// `d_avg(B) - 6`, recorded when the density is at least 4/5.
    pub eps_slack: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub count: u64,
    pub largest: u64,
    pub component_bound: u64,
    pub dense_count: u64,
    pub dense_small_count: u64,
    pub dense_vertex_total: u64,
    /// `6 + 2/|B| * dense_vertex_total - d_avg(B)`, never negative.
    pub up_avg_slack: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeSummary {
    /// `d - 4/5`.
    pub eps: String,
    pub n1: u64,
    pub n3: u64,
    /// Unknown; always null.
    pub n2: Option<u64>,
    /// `n >= max(n1, n3)`. The dense-component constant is unknown, so this
    /// is necessary but not sufficient for the asymptotic guarantee.
    pub above_computable_thresholds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub k: usize,
    pub s: usize,
    pub witness: Option<Witness>,
    pub witness_verified: bool,
    /// Largest configuration of excess at most 3 reached when no witness was found.
    pub best_partial: Option<Witness>,
    pub budget_exhausted: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub census_ms: u64,
    pub bowtie_ms: u64,
    pub components_ms: u64,
    pub search_ms: u64,
    pub total_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub instance: InstanceSummary,
    pub census: CensusSummary,
    pub bowtie: BowtieSummary,
    pub components: ComponentSummary,
    pub regime: Option<RegimeSummary>,
    pub branch: Branch,
    pub search: SearchSummary,
    pub checks: Vec<Check>,
    pub timings: Option<Timings>,
}

impl AnalysisReport {
    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.violated())
    }

    pub fn witness_found(&self) -> bool {
        self.search.witness.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn u64_of(x: impl TryInto<u64>) -> u64 {
    x.try_into().unwrap_or(u64::MAX)
}

/// Runs the full analysis and a witness search for a `(k+3, k)`-configuration.
///
/// The search is always attempted, whatever the density. If some component
/// has at least `component_bound` vertices, seeds are taken from components
/// in decreasing size; otherwise dense components go first, then the rest.
pub fn theorem_pipeline(system: &LinearTripleSystem, options: &PipelineOptions) -> Result<AnalysisReport> {
    let k = options.k;
    if k < 3 {
        return Err(Error::BadK(k));
    }
    let started = Instant::now();
    let structure = Structure::build(system)?;
    let mut checks = structure.checks(system);
    let b = &structure.bowtie;
    let comps = &structure.components;
    let n = system.n();

    let census_dense = dense_census(comps, options.component_bound);
    let eps = structure.eps();

    // Counting chain of the dense-component case, recorded for every instance
    // with density above 4/5.
    if let (Some(eps), false) = (eps, b.is_empty()) {
        let n3 = thresholds::n3(eps);
        let required = n as u64 >= n3;
        let order = int(b.order() as i128);
        checks.push(Check::ge(
            "dense_mass",
            int(census_dense.dense_vertex_total as i128),
            eps * order / int(2),
            required,
        ));
        let exponent = 10 * (k * k) as i128 + 1;
        let lhs = (census_dense.dense_count as f64).log(3.0);
        let rhs = (rational::to_f64(&eps) * b.order() as f64).log(3.0) - exponent as f64;
        checks.push(Check::new(
            "dense_count_log3",
            format!("{lhs:.6}"),
            ">=",
            format!("{rhs:.6}"),
            lhs >= rhs,
            required,
        ));
    }

    let regime = eps.map(|eps| {
        let n1 = rational::ceil(&(int(12) / structure.density)) as u64;
        let n3 = thresholds::n3(eps);
        RegimeSummary {
            eps: rational::display(&eps),
            n1,
            n3,
            n2: None,
            above_computable_thresholds: n as u64 >= n1.max(n3),
        }
    });

    let largest = comps.first().map_or(0, |c| c.size);
    let branch = if b.edge_count() == 0 {
        Branch::NoSeeds
    } else if largest as u64 >= options.component_bound {
        Branch::LargeComponent
    } else {
        Branch::DenseComponents
    };

    let search_clock = Instant::now();
    let ordered: Vec<&ComponentStats> = match branch {
        Branch::DenseComponents => comps
            .iter()
            .filter(|c| c.dense)
            .chain(comps.iter().filter(|c| !c.dense))
            .collect(),
        _ => comps.iter().collect(),
    };
    let outcome = guided_search(system, b, ordered, k, options.budget);
    let search_ms = search_clock.elapsed().as_millis() as u64;

    let s = k + 3;
    let mut search = SearchSummary {
        k,
        s,
        witness: None,
        witness_verified: false,
        best_partial: None,
        budget_exhausted: false,
        note: (branch == Branch::NoSeeds).then(|| "no seeds".to_string()),
    };
    match outcome {
        SearchOutcome::Found(config) => {
            let verified = is_config(system, config.edges(), s, k)?;
            checks.push(Check::new(
                "witness_is_config",
                format!("{} edges spanning {}", config.len(), config.span().len()),
                "<=",
                format!("{k} edges spanning {s}"),
                verified,
                true,
            ));
            search.witness = Some(config.witness(s));
            search.witness_verified = verified;
        }
        SearchOutcome::Failure { best, budget_exhausted } => {
            search.best_partial = best.map(|c| {
                let size = c.len();
                c.witness(size + 3)
            });
            search.budget_exhausted = budget_exhausted;
        }
    }

    let avg = b.avg_degree();
    let report = AnalysisReport {
        schema: SCHEMA_VERSION,
        instance: InstanceSummary {
            n,
            m: system.m(),
            density: rational::display(&structure.density),
            density_value: rational::to_f64(&structure.density),
        },
        census: CensusSummary {
            underlying_edges: structure.underlying.edge_count() as u64,
            kappa_triangle: u64_of(structure.census.kappa_triangle),
            kappa_cherry: u64_of(structure.census.kappa_cherry),
            p0: u64_of(structure.census.p0),
            p1: u64_of(structure.census.p1),
            p2: u64_of(structure.census.p2),
            p3: u64_of(structure.census.p3),
        },
        bowtie: BowtieSummary {
            order: b.order() as u64,
            edge_count: b.edge_count() as u64,
            max_degree: b.max_degree() as u64,
            avg_degree: rational::display(&avg),
            avg_degree_value: rational::to_f64(&avg),
            eps_slack: (structure.density >= Rational::new(4, 5)).then(|| rational::display(&(avg - int(6)))),
        },
        components: ComponentSummary {
            count: comps.len() as u64,
            largest: largest as u64,
            component_bound: options.component_bound,
            dense_count: census_dense.dense_count as u64,
            dense_small_count: census_dense.dense_small_count as u64,
            dense_vertex_total: census_dense.dense_vertex_total as u64,
            up_avg_slack: up_avg_check(b, comps).map(|(lhs, rhs)| rational::display(&(rhs - lhs))),
        },
        regime,
        branch,
        search,
        checks,
        timings: options.timings.then(|| Timings {
            census_ms: structure.timings[0],
            bowtie_ms: structure.timings[1],
            components_ms: structure.timings[2],
            search_ms,
            total_ms: started.elapsed().as_millis() as u64,
        }),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple_system::tests::fano;
    use crate::triple_system::{dilute, generate_steiner};

    #[test]
    fn fano_large_component() {
        let mut options = PipelineOptions::new(4);
        options.component_bound = 10;
        let report = theorem_pipeline(&fano(), &options).unwrap();
        assert_eq!(report.branch, Branch::LargeComponent);
        assert!(report.search.witness_verified);
        let w = report.search.witness.as_ref().unwrap();
        assert_eq!((w.k, w.s), (4, 7));
        assert_eq!(report.violations().count(), 0, "{:#?}", report.checks);
        assert!(report.checks.iter().all(|c| c.holds || !c.required));
        assert_eq!(report.census.kappa_triangle, 35);
        assert_eq!(report.bowtie.order, 21);
        assert!(report.timings.is_none());
    }

    #[test]
    fn single_triple_has_no_seeds() {
        let h = LinearTripleSystem::validate(3, &[[0, 1, 2]]).unwrap();
        let report = theorem_pipeline(&h, &PipelineOptions::new(3)).unwrap();
        assert_eq!(report.branch, Branch::NoSeeds);
        assert_eq!(report.search.note.as_deref(), Some("no seeds"));
        assert!(report.search.witness.is_none());
        assert_eq!(report.violations().count(), 0);
    }

    #[test]
    fn diluted_sts13() {
        let h = dilute(&generate_steiner(13).unwrap(), Rational::new(6, 7), 1).unwrap();
        let report = theorem_pipeline(&h, &PipelineOptions::new(4)).unwrap();
        assert_eq!(report.violations().count(), 0);
        assert!(report.search.witness_verified);
        assert!(report.bowtie.eps_slack.is_some());
    }

    #[test]
    fn report_round_trips() {
        let report = theorem_pipeline(&generate_steiner(9).unwrap(), &PipelineOptions::new(5)).unwrap();
        let json = report.to_json();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn rejects_small_k() {
        assert_eq!(
            theorem_pipeline(&fano(), &PipelineOptions::new(2)).unwrap_err(),
            Error::BadK(2)
        );
    }
}
