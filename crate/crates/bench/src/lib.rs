//! Fixtures shared by the benchmarks.

use bowtie_core::triple_system::{dilute, generate_steiner};
use bowtie_core::{LinearTripleSystem, Rational};

/// `STS(n)`, panicking on an inadmissible order.
pub fn steiner(n: usize) -> LinearTripleSystem {
    generate_steiner(n).expect("admissible order")
}

/// `STS(n)` diluted to `num/den` with a fixed seed.
pub fn diluted(n: usize, num: i128, den: i128) -> LinearTripleSystem {
    dilute(&steiner(n), Rational::new(num, den), 1).expect("valid density")
}
