use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("triple {index} does not have three distinct vertices")]
    RepeatedVertexInTriple { index: usize },

    #[error("triple {index} uses vertex {vertex}, but the system has only {n} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },

    #[error("pair {{{}, {}}} is covered by triples {first} and {second}", pair.0, pair.1)]
    PairCoveredTwice {
        first: usize,
        second: usize,
        pair: (usize, usize),
    },

    #[error("triple {second} duplicates triple {first}")]
    DuplicateTriple { first: usize, second: usize },

    #[error("linear density is undefined for n = {n} (need n >= 2)")]
    DegenerateSystem { n: usize },

    #[error("no Steiner triple system exists on {n} vertices (need n = 1 or 3 mod 6, n >= 3)")]
    InadmissibleOrder { n: usize },

    #[error("target density {target} exceeds the current density {current}")]
    TargetAboveCurrent { target: String, current: String },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("average degree bound is undefined: d(n-1) = {value} <= 1")]
    DegenerateDensity { value: String },

    #[error("edge index {index} is out of range for a system with {m} edges")]
    BadIndex { index: usize, m: usize },

    #[error("eps must lie in (0, 1/5], got {0}")]
    BadEps(String),

    #[error("k must be at least 3, got {0}")]
    BadK(usize),

    #[error("search budget limits must be positive")]
    BadBudget,
}
