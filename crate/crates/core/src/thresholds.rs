//! Explicit thresholds for the density `4/5 + eps` regime.
//!
//! Only `n1` and `n3` are computable. The constant behind the dense-component
//! case has no formula and is reported as unknown; the component-size bound
//! `3^(10 k^2)` and `beta = eps / 3^(11 k^2)` are kept as base-3 exponents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct Thresholds {
    pub eps: Rational,
    pub k: usize,
    /// `4/5 + eps`.
    pub delta: Rational,
    /// `ceil(12 / delta)`: above it `|B| >= delta^2 n^3 / 16`.
    pub n1: u64,
    /// Least `n` with `(n-1)/n >= 1 - eps/(4 + 5 eps)` and `5/(4n) <= eps/2`.
    pub n3: u64,
    /// `log_3(beta) = log_3(eps) - 11 k^2`.
    pub beta_log3: f64,
    /// `10 k^2`, the exponent of the large-component bound.
    pub component_bound_exponent: u64,
    /// `max(n1, n3)`.
    pub n0_practical: u64,
    /// Always `None`: not computable from the available statement.
    pub n2: Option<u64>,
}

pub fn compute_thresholds(eps: Rational, k: usize) -> Result<Thresholds> {
    if eps <= Rational::from_integer(0) || eps > Rational::new(1, 5) {
        return Err(Error::BadEps(rational::display(&eps)));
    }
    if k < 3 {
        return Err(Error::BadK(k));
    }
    let delta = Rational::new(4, 5) + eps;
    let n1 = rational::ceil(&(Rational::from_integer(12) / delta)) as u64;
    let n3 = n3(eps);
    let k2 = (k * k) as u64;
    Ok(Thresholds {
        eps,
        k,
        delta,
        n1,
        n3,
        beta_log3: rational::to_f64(&eps).log(3.0) - 11.0 * k2 as f64,
        component_bound_exponent: 10 * k2,
        n0_practical: n1.max(n3),
        n2: None,
    })
}

/// Both conditions are monotone in `n`:
/// `(n-1)/n >= 1 - eps/(4+5eps)` iff `n >= (4 + 5 eps)/eps`, and
/// `5/(4n) <= eps/2` iff `n >= 5/(2 eps)`.
pub(crate) fn n3(eps: Rational) -> u64 {
    let first = (Rational::from_integer(4) + Rational::from_integer(5) * eps) / eps;
    let second = Rational::from_integer(5) / (Rational::from_integer(2) * eps);
    rational::ceil(&first).max(rational::ceil(&second)).max(1) as u64
}

/// JSON view of [`Thresholds`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdsRecord {
    pub schema: u32,
    pub eps: String,
    pub k: usize,
    pub delta: String,
    pub n1: u64,
    pub n2: Option<u64>,
    pub n3: u64,
    pub n0_practical: u64,
    pub beta_log3: f64,
    pub component_bound_exponent: u64,
}

impl From<&Thresholds> for ThresholdsRecord {
    fn from(t: &Thresholds) -> Self {
        Self {
            schema: 1,
            eps: rational::display(&t.eps),
            k: t.k,
            delta: rational::display(&t.delta),
            n1: t.n1,
            n2: t.n2,
            n3: t.n3,
            n0_practical: t.n0_practical,
            beta_log3: t.beta_log3,
            component_bound_exponent: t.component_bound_exponent,
        }
    }
}
