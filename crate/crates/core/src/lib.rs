//! Linear 3-uniform hypergraphs, their underlying graphs and bow-tie graphs,
//! and constructive search for `(k+3, k)`-configurations.
//!
//! The crate is organised bottom-up:
//!
//! * [`triple_system`] holds the validated [`LinearTripleSystem`], its
//!   generators and the `.l3g` text format.
//! * [`census`] counts triangles, cherries and the induced 3-vertex census of
//!   a [`SimpleGraph`].
//! * [`bowtie`] builds the bow-tie graph, checks its counting identities and
//!   splits it into components.
//! * [`search`] verifies and finds configurations.
//! * [`thresholds`], [`pipeline`] and [`sweep`] tie everything together into
//!   reports and density sweeps.

pub mod bowtie;
pub mod census;
pub mod error;
pub mod pipeline;
pub mod rational;
pub mod search;
pub mod sweep;
pub mod thresholds;
pub mod triple_system;

pub use bowtie::{BowtieGraph, BowtiePair, ComponentStats};
pub use census::{SimpleGraph, TriadCensus};
pub use error::{Error, Result};
pub use pipeline::{theorem_pipeline, AnalysisReport, PipelineOptions};
pub use rational::Rational;
pub use search::{Configuration, SearchBudget, SearchOutcome};
pub use thresholds::{compute_thresholds, Thresholds};
pub use triple_system::{EdgeId, LinearTripleSystem, Triple, VertexId};
