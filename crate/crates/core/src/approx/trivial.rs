// SPDX-License-Identifier: Apache-2.0

use super::{ApproxResult, Quantity, Ratio};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{eccentricity_of, Variant};

/// Eccentricity of `probe` under a metric variant.
///
/// It lies in `[R, 2R]` and in `[D/2, D]`. The returned result is phrased as
/// a radius estimate; the diameter reading follows by the triangle inequality.
pub fn trivial_metric_estimate(g: &Graph, variant: Variant, probe: usize) -> Result<ApproxResult> {
    if matches!(variant, Variant::Min | Variant::Source) {
        return Err(Error::input(format!("{variant} distances are not a metric")));
    }
    let e = eccentricity_of(g, probe, variant)?;
    Ok(ApproxResult::new(
        Quantity::Radius,
        e,
        Some(probe),
        Ratio::integer(2),
        false,
    ))
}
