// SPDX-License-Identifier: Apache-2.0

use rand::Rng;
use rayon::prelude::*;

use super::{hitting_size, ApproxResult, Quantity, Ratio, TopoDag, DEFAULT_HITTING_C};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{Direction, Graph};
use crate::paths::{sample_vertex_set, sssp_into, INF};

/// Min-diameter estimate within a factor of `max(3, n^ε)` (whp) on unweighted
/// digraphs. `epsilon` is the rational `num/den` in `(0, 1]`.
pub fn approx_min_diameter<R: Rng + ?Sized>(g: &Graph, epsilon: Ratio, rng: &mut R) -> Result<ApproxResult> {
    approx_min_diameter_with(g, epsilon, DEFAULT_HITTING_C, rng)
}

pub fn approx_min_diameter_with<R: Rng + ?Sized>(
    g: &Graph,
    epsilon: Ratio,
    c: f64,
    rng: &mut R,
) -> Result<ApproxResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    if epsilon.den == 0 || epsilon.num == 0 || epsilon.num > epsilon.den {
        return Err(Error::input("epsilon must lie in (0, 1]"));
    }
    if !g.is_unit_weight() {
        return Err(Error::input("min-diameter approximation needs unit weights"));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::input("hitting-set constant must be positive"));
    }
    let eps = epsilon.num as f64 / epsilon.den as f64;
    let nf = n as f64;
    let s = sample_vertex_set(n, hitting_size(n, c, nf.powf(1.0 - eps)), rng)?;

    let best = s
        .par_iter()
        .map_init(
            || (vec![0u64; n], vec![0u64; n]),
            |(fwd, bwd), &src| {
                sssp_into(g, src, Direction::Forward, fwd);
                sssp_into(g, src, Direction::Backward, bwd);
                let far = fwd.iter().zip(bwd.iter()).map(|(a, b)| *a.min(b)).max().unwrap_or(0);
                (far, src)
            },
        )
        .max_by_key(|&(far, src)| (far, std::cmp::Reverse(src)))
        .expect("sample is nonempty");
    let edge_floor = u64::from(g.m() > 0);
    let (estimate, witness) = if best.0 >= edge_floor {
        best
    } else {
        (edge_floor, g.edges()[0].source)
    };

    // max(3, ⌈n^ε⌉) as an integer multiplier.
    let upper = ((nf.powf(eps) - 1e-9).ceil() as u64).max(3);
    Ok(ApproxResult::new(
        Quantity::Diameter,
        Distance::from_raw(estimate),
        Some(witness),
        Ratio::integer(upper),
        true,
    ))
}

/// Min-diameter estimate within a factor of 2 on a DAG, by divide and
/// conquer over topological positions. Deterministic.
pub fn approx_min_diameter_dag(g: &Graph) -> Result<ApproxResult> {
    let dag = TopoDag::new(g)?;
    let n = dag.n();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let mut best = 0u64;
    let mut witness = dag.order[0];
    let mut stack = vec![(0usize, n - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if lo >= hi {
            continue;
        }
        let w = lo + (hi - lo).div_ceil(2);
        let fwd = dag.interval_dp(w, Direction::Forward, lo, hi);
        let bwd = dag.interval_dp(w, Direction::Backward, lo, hi);
        let here = bwd[..=w - lo].iter().chain(&fwd[w - lo..]).copied().max().unwrap_or(0);
        if here > best {
            best = here;
            witness = dag.order[w];
        }
        if best == INF {
            break;
        }
        if w > lo {
            stack.push((lo, w - 1));
        }
        if w < hi {
            stack.push((w + 1, hi));
        }
    }
    Ok(ApproxResult::new(
        Quantity::Diameter,
        Distance::from_raw(best),
        Some(witness),
        Ratio::integer(2),
        false,
    ))
}
