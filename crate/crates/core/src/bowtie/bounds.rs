//! Lower and upper bounds on the bow-tie graph in terms of the linear
//! density. Everything is exact rational arithmetic.

use super::{components::ComponentStats, BowtieGraph};
use crate::census::Count;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::triple_system::LinearTripleSystem;

/// `(d_avg(B), 16 - 8n / (d(n-1) - 1))` with `d` the linear density of `H`.
///
/// Since `d(n-1) = 6m/n` the bound simplifies to `16 - 8n^2 / (6m - n)`.
pub fn avg_degree_bound(system: &LinearTripleSystem, bowtie: &BowtieGraph) -> Result<(Rational, Rational)> {
    let n = system.n() as i128;
    let six_m = 6 * system.m() as i128;
    if n == 0 || six_m <= n {
        // d(n - 1) = 6m/n <= 1
        let value = if n == 0 {
            Rational::from_integer(0)
        } else {
            Rational::new(six_m, n)
        };
        return Err(Error::DegenerateDensity {
            value: rational::display(&value),
        });
    }
    let bound = Rational::from_integer(16) - Rational::new(8 * n * n, six_m - n);
    Ok((bowtie.avg_degree(), bound))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeBound {
    pub actual: usize,
    /// `delta^2 n^3 / 16` with `delta` the linear density.
    pub bound: Rational,
    /// `n >= 12 / delta`.
    pub applicable: bool,
    /// `sum_v C(deg_H(v), 2)`, equal to `actual`.
    pub pair_count: Count,
}

impl SizeBound {
    pub fn holds(&self) -> bool {
        !self.applicable || Rational::from_integer(self.actual as i128) >= self.bound
    }
}

pub fn size_lower_bound(system: &LinearTripleSystem, bowtie: &BowtieGraph) -> Result<SizeBound> {
    let delta = system.linear_density()?;
    let n = system.n() as i128;
    let bound = delta * delta * Rational::from_integer(n * n * n) / Rational::from_integer(16);
    let applicable = Rational::from_integer(n) * delta >= Rational::from_integer(12);
    Ok(SizeBound {
        actual: bowtie.order(),
        bound,
        applicable,
        pair_count: super::intersecting_pair_count(system),
    })
}

/// `(d_avg(B), 6 + 2/|B| * total size of dense components)`.
///
/// Non-dense components have average degree below 6 and dense ones at most 8,
/// so the left side never exceeds the right. `None` for empty `B`.
pub fn up_avg_check(bowtie: &BowtieGraph, components: &[ComponentStats]) -> Option<(Rational, Rational)> {
    if bowtie.is_empty() {
        return None;
    }
    let dense_total: usize = components.iter().filter(|c| c.dense).map(|c| c.size).sum();
    let rhs = Rational::from_integer(6) + Rational::new(2 * dense_total as i128, bowtie.order() as i128);
    Some((bowtie.avg_degree(), rhs))
}
