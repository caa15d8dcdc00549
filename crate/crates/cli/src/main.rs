use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bowtie_core::bowtie::{build_bowtie, components};
use bowtie_core::pipeline::{theorem_pipeline, verify_instance, PipelineOptions};
use bowtie_core::rational::parse_rational;
use bowtie_core::search::{exhaustive_search, guided_search, is_config, ExhaustiveOutcome, SearchOutcome};
use bowtie_core::sweep::{density_sweep, to_csv};
use bowtie_core::thresholds::ThresholdsRecord;
use bowtie_core::triple_system::{dilute, generate_random_linear, generate_steiner, parse, serialize};
use bowtie_core::{compute_thresholds, LinearTripleSystem, Rational, SearchBudget};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_OK: u8 = 0;
const EXIT_NO_WITNESS: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "bowtie",
    version,
    about = "Linear triple systems, bow-tie graphs and (k+3,k)-configurations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a system and write it as .l3g
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Load a .l3g file and run every identity and bound check
    Verify { file: PathBuf },
    /// Full analysis and witness search, as a JSON report
    Analyze {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for an (s,k)-configuration and print it as JSON
    Search {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = Method::Greedy)]
        method: Method,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dilute STS(n) across a density grid and tabulate witness search as CSV
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated densities, e.g. `1,0.9,6/7`
        #[arg(long, value_delimiter = ',', value_parser = rational_arg, required = true)]
        grid: Vec<Rational>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Explicit thresholds for density 4/5 + eps
    Thresholds {
        #[arg(long, value_parser = rational_arg)]
        eps: Rational,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Steiner triple system on n = 1 or 3 (mod 6) vertices
    Steiner {
        n: usize,
        /// Randomly delete triples down to this density
        #[arg(long, value_parser = rational_arg)]
        dilute: Option<Rational>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy random linear system
    Random {
        n: usize,
        #[arg(long, value_parser = rational_arg)]
        density: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_ms: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self, default: SearchBudget) -> Result<SearchBudget> {
        let nodes = self.budget_nodes.unwrap_or(default.max_nodes());
        let ms = self.budget_ms.unwrap_or(default.max_millis());
        Ok(SearchBudget::new(nodes, ms)?)
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    component_bound: Option<u64>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Include wall-clock timings (makes output run-dependent)
    #[arg(long)]
    timings: bool,
}

impl SearchArgs {
    fn options(&self, k: usize) -> Result<PipelineOptions> {
        let mut options = PipelineOptions::new(k);
        if let Some(bound) = self.component_bound {
            options.component_bound = bound;
        }
        options.budget = self.budget.budget(options.budget)?;
        options.timings = self.timings;
        Ok(options)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Greedy,
    Exhaustive,
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a number or fraction"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<LinearTripleSystem> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("loading {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { kind } => {
            let (system, out) = match kind {
                GenKind::Steiner {
                    n,
                    dilute: target,
                    seed,
                    out,
                } => {
                    let mut system = generate_steiner(n)?;
                    if let Some(target) = target {
                        system = dilute(&system, target, seed)?;
                    }
                    (system, out)
                }
                GenKind::Random { n, density, seed, out } => (generate_random_linear(n, density, seed), out),
            };
            emit(out.as_deref(), &serialize(&system))?;
            Ok(EXIT_OK)
        }
        Command::Verify { file } => {
            let system = load(&file)?;
            let checks = verify_instance(&system)?;
            let mut violated = false;
            for c in &checks {
                let status = match (c.holds, c.required) {
                    (true, _) => "PASS",
                    (false, true) => "FAIL",
                    (false, false) => "n/a ",
                };
                violated |= c.violated();
                println!("{status} {}: {} {} {}", c.name, c.lhs, c.relation, c.rhs);
            }
            Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
        }
        Command::Analyze { file, k, search, out } => {
            let system = load(&file)?;
            let report = theorem_pipeline(&system, &search.options(k)?)?;
            emit(out.as_deref(), &(report.to_json() + "\n"))?;
            Ok(if report.violations().next().is_some() {
                EXIT_VIOLATION
            } else if report.witness_found() {
                EXIT_OK
            } else {
                EXIT_NO_WITNESS
            })
        }
        Command::Search {
            file,
            k,
            s,
            method,
            budget,
            out,
        } => {
            let system = load(&file)?;
            let budget = budget.budget(SearchBudget::default())?;
            let found = match method {
                Method::Exhaustive => match exhaustive_search(&system, k, s, budget) {
                    ExhaustiveOutcome::Found(c) => Some(c),
                    ExhaustiveOutcome::NotFound => None,
                    ExhaustiveOutcome::Indeterminate => {
                        eprintln!("search budget exhausted before the space was covered");
                        None
                    }
                },
                Method::Greedy => {
                    let bowtie = build_bowtie(&system);
                    let comps = components(&bowtie);
                    match guided_search(&system, &bowtie, &comps, k, budget) {
                        SearchOutcome::Found(c) => Some(c),
                        SearchOutcome::Failure { .. } => None,
                    }
                }
            };
            match found {
                Some(c) if is_config(&system, c.edges(), s, k)? => {
                    emit(out.as_deref(), &(serde_json::to_string(&c.witness(s))? + "\n"))?;
                    Ok(EXIT_OK)
                }
                _ => {
                    eprintln!("no ({s},{k})-configuration found");
                    Ok(EXIT_NO_WITNESS)
                }
            }
        }
        Command::Sweep {
            n,
            k,
            grid,
            trials,
            seed,
            search,
            out,
        } => {
            if grid.iter().any(|d| *d > Rational::from_integer(1)) {
                bail!("densities must not exceed 1");
            }
            let options = search.options(k)?;
            let rows = density_sweep(n, &grid, trials, seed, &options)?;
            emit(out.as_deref(), &to_csv(&rows))?;
            Ok(if rows.iter().any(|r| r.violations > 0) {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            })
        }
        Command::Thresholds { eps, k, out } => {
            let thresholds = compute_thresholds(eps, k)?;
            let record = ThresholdsRecord::from(&thresholds);
            emit(out.as_deref(), &(serde_json::to_string_pretty(&record)? + "\n"))?;
            Ok(EXIT_OK)
        }
    }
}
