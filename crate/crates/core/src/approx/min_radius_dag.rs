// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::{ApproxResult, Quantity, Ratio, TopoDag};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{Direction, Graph};
use crate::paths::INF;

/// Outcome of [`approximate_center`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterOutcome {
    /// A vertex with min-eccentricity at most `3R`.
    Found(usize),
    /// Every vertex has min-eccentricity strictly greater than `R`.
    AllExceed,
}

/// Either finds a vertex of min-eccentricity `≤ 3R` or certifies that all
/// vertices exceed `R`. Vertex ids are those of `g`.
pub fn approximate_center(g: &Graph, r: Distance) -> Result<CenterOutcome> {
    let dag = TopoDag::new(g)?;
    if dag.n() == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    Ok(match center_on(&dag, r) {
        Some(p) => CenterOutcome::Found(dag.order[p]),
        None => CenterOutcome::AllExceed,
    })
}

/// Evenly spaced anchor positions, always including the first and last.
fn anchors(n: usize) -> Vec<usize> {
    let k = ((n as f64).sqrt().ceil() as usize).clamp(1, n);
    if k == 1 {
        return vec![0];
    }
    (0..k).map(|i| i * (n - 1) / (k - 1)).collect()
}

// Works on topological positions; returns a position.
fn center_on(dag: &TopoDag, r: Distance) -> Option<usize> {
    let n = dag.n();
    let (r1, r2) = match r {
        Distance::Finite(x) => (x, x.checked_mul(2).map_or(INF - 1, |y| y.min(INF - 1))),
        Distance::Infinite => (INF, INF),
    };

    let anchors = anchors(n);
    let mut spans = Vec::with_capacity(anchors.len());
    for &a in &anchors {
        let fwd = dag.interval_dp(a, Direction::Forward, 0, n - 1);
        let bwd = dag.interval_dp(a, Direction::Backward, 0, n - 1);
        if (0..n).all(|v| fwd[v].min(bwd[v]) <= r2) {
            return Some(a);
        }
        let left = (0..a).find(|&v| bwd[v] > r2).unwrap_or(a);
        let right = (a + 1..n).rev().find(|&v| fwd[v] > r2).unwrap_or(a);
        spans.push((left, right));
    }

    // Merge into disjoint, sorted intervals that cannot hold a radius-R center.
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for (mut left, mut right) in spans {
        while let Some(&(a, b)) = stack.last() {
            if left > b + 1 {
                break;
            }
            stack.pop();
            left = left.min(a);
            right = right.max(b);
        }
        stack.push((left, right));
    }

    for pair in stack.windows(2) {
        let ((a, b), (c, d)) = (pair[0], pair[1]);
        for u in b + 1..c {
            let fwd = dag.interval_dp(u, Direction::Forward, a, d);
            let bwd = dag.interval_dp(u, Direction::Backward, a, d);
            if fwd.iter().zip(&bwd).all(|(x, y)| *x.min(y) <= r1) {
                return Some(u);
            }
        }
    }
    None
}

/// Min-radius estimate on a DAG within a factor of 3, by binary search over
/// integer radii in `[0, M·n]`.
///
/// `estimate` is the exact min-eccentricity of `witness_center`;
/// `search_radius` is the smallest searched `R` with a center found, which is
/// at most the true min-radius.
pub fn approx_min_radius_dag(g: &Graph) -> Result<ApproxResult> {
    let dag = TopoDag::new(g)?;
    let n = dag.n();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let mut hi = g.max_weight().saturating_mul(n as u64).min(INF - 1);
    let mut found = match center_on(&dag, Distance::Finite(hi)) {
        Some(p) => p,
        None => {
            return Ok(ApproxResult::new(
                Quantity::Radius,
                Distance::Infinite,
                None,
                Ratio::integer(3),
                false,
            ))
        }
    };
    let mut lo = 0u64;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match center_on(&dag, Distance::Finite(mid)) {
            Some(p) => {
                hi = mid;
                found = p;
            }
            None => lo = mid + 1,
        }
    }
    let mut res = ApproxResult::new(
        Quantity::Radius,
        Distance::from_raw(dag.min_eccentricity(found)),
        Some(dag.order[found]),
        Ratio::integer(3),
        false,
    );
    res.search_radius = Some(hi);
    Ok(res)
}
