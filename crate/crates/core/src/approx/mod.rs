// SPDX-License-Identifier: Apache-2.0

//! Subquadratic approximation algorithms with their guarantees.

mod dag;
mod finite;
mod min_diameter;
mod min_radius_dag;
mod source_radius;
mod trivial;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::distance::Distance;

pub use dag::TopoDag;
pub use finite::finite_min_eccentricities;
pub use min_diameter::{approx_min_diameter, approx_min_diameter_dag, approx_min_diameter_with};
pub use min_radius_dag::{approx_min_radius_dag, approximate_center, CenterOutcome};
pub use source_radius::{approx_source_radius, approx_source_radius_with};
pub use trivial::trivial_metric_estimate;

/// Default constant `c` in hitting-set sizes `⌈c·√n·ln n⌉`.
pub const DEFAULT_HITTING_C: f64 = 2.0;

/// A nonnegative rational `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub const fn integer(k: u64) -> Ratio {
        Ratio { num: k, den: 1 }
    }

    /// `⌊d · self⌋` for finite `d`.
    pub fn mul_floor(self, d: u64) -> u64 {
        ((u128::from(d) * u128::from(self.num)) / u128::from(self.den)) as u64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// What an approximation algorithm estimates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Radius,
    Diameter,
}

/// An estimate with its multiplicative guarantee.
///
/// For radius estimates `R ≤ estimate ≤ upper·R`; for diameter estimates
/// `D/upper ≤ estimate ≤ D`. `whp` marks guarantees that hold with high
/// probability rather than always.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub quantity: Quantity,
    pub estimate: Distance,
    pub witness_center: Option<usize>,
    pub guarantee: (Ratio, Ratio),
    pub whp: bool,
    /// The smallest searched radius for which a center was found, if the
    /// algorithm searches over radii.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_radius: Option<u64>,
}

impl ApproxResult {
    pub(crate) fn new(
        quantity: Quantity,
        estimate: Distance,
        witness_center: Option<usize>,
        upper: Ratio,
        whp: bool,
    ) -> Self {
        ApproxResult {
            quantity,
            estimate,
            witness_center,
            guarantee: (Ratio::ONE, upper),
            whp,
            search_radius: None,
        }
    }

    /// Checks the guarantee against the true value.
    pub fn within_guarantee(&self, truth: Distance) -> bool {
        let upper = self.guarantee.1;
        match (self.quantity, self.estimate, truth) {
            (_, Distance::Infinite, Distance::Infinite) => true,
            (Quantity::Radius, Distance::Finite(e), Distance::Finite(t)) => {
                e >= t && u128::from(e) * u128::from(upper.den) <= u128::from(t) * u128::from(upper.num)
            }
            (Quantity::Diameter, Distance::Finite(e), Distance::Finite(t)) => {
                e <= t && u128::from(t) * u128::from(upper.den) <= u128::from(e) * u128::from(upper.num)
            }
            _ => false,
        }
    }
}

/// `min(n, max(1, ⌈c·x·ln n⌉))`.
pub(crate) fn hitting_size(n: usize, c: f64, x: f64) -> usize {
    if n == 0 {
        return 0;
    }
    let raw = (c * x * (n as f64).ln()).ceil();
    (raw.max(1.0) as usize).min(n)
}
