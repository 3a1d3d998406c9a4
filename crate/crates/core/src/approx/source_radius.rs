// SPDX-License-Identifier: Apache-2.0

use rand::Rng;
use rayon::prelude::*;

use super::{hitting_size, ApproxResult, Quantity, Ratio, DEFAULT_HITTING_C};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{Direction, Graph};
use crate::paths::{sample_vertex_set, sssp_into, truncated_shortest_paths, INF};

/// Source-radius estimate within a factor of 2 (whp), with `c = 2`.
pub fn approx_source_radius<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<ApproxResult> {
    approx_source_radius_with(g, DEFAULT_HITTING_C, rng)
}

/// As [`approx_source_radius`] with hitting-set constant `c`.
///
/// The estimate is always the exact source-eccentricity of `witness_center`,
/// so it never undershoots the radius.
pub fn approx_source_radius_with<R: Rng + ?Sized>(g: &Graph, c: f64, rng: &mut R) -> Result<ApproxResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::input("hitting-set constant must be positive"));
    }
    let nf = n as f64;
    let s1 = sample_vertex_set(n, hitting_size(n, c, nf.sqrt()), rng)?;

    // Forward traversals from S1, folding min_{s} d(s, w) and each s's eccentricity.
    let (closest, mut eccs) = s1
        .par_iter()
        .fold(
            || (vec![INF; n], vec![0u64; n], Vec::new()),
            |(mut closest, mut scratch, mut eccs), &s| {
                sssp_into(g, s, Direction::Forward, &mut scratch);
                for (m, &d) in closest.iter_mut().zip(&scratch) {
                    *m = (*m).min(d);
                }
                eccs.push((s, scratch.iter().copied().max().unwrap_or(0)));
                (closest, scratch, eccs)
            },
        )
        .map(|(c, _, e)| (c, e))
        .reduce(
            || (vec![INF; n], Vec::new()),
            |(mut a, mut ea), (b, eb)| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = (*x).min(y);
                }
                ea.extend(eb);
                (a, ea)
            },
        );

    // w maximizes the distance from S1; smallest id on ties.
    let w = (0..n)
        .max_by_key(|&v| (closest[v], std::cmp::Reverse(v)))
        .expect("n > 0");
    let k = (nf.sqrt().ceil() as usize).clamp(1, n);
    let s2: Vec<usize> = truncated_shortest_paths(g, w, k, Direction::Backward)?
        .into_iter()
        .map(|(v, _)| v)
        .filter(|v| s1.binary_search(v).is_err())
        .collect();
    eccs.par_extend(s2.par_iter().map_init(
        || vec![0u64; n],
        |scratch, &s| {
            sssp_into(g, s, Direction::Forward, scratch);
            (s, scratch.iter().copied().max().unwrap_or(0))
        },
    ));

    let (center, ecc) = eccs.into_iter().min_by_key(|&(s, e)| (e, s)).expect("S1 is nonempty");
    Ok(ApproxResult::new(
        Quantity::Radius,
        Distance::from_raw(ecc),
        Some(center),
        Ratio::integer(2),
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::Finite;
    use crate::oracle::{exact_eccentricities, Variant};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_vertex() {
        let g = Graph::directed_unit(1, &[]).unwrap();
        let r = approx_source_radius(&g, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(r.estimate, Finite(0));
        assert_eq!(r.witness_center, Some(0));
    }

    #[test]
    fn out_star_finds_the_center() {
        for n in [2usize, 5, 30, 200] {
            let arcs: Vec<_> = (1..n).map(|v| (0, v)).collect();
            let g = Graph::directed_unit(n, &arcs).unwrap();
            for seed in 0..5 {
                let r = approx_source_radius(&g, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
                assert_eq!(r.estimate, Finite(1), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn estimate_is_a_real_eccentricity() {
        let g = Graph::new(
            6,
            [
                (0, 1, 3),
                (1, 2, 1),
                (2, 0, 2),
                (2, 3, 5),
                (3, 4, 1),
                (4, 5, 1),
                (5, 2, 4),
            ],
            false,
        )
        .unwrap();
        let exact = exact_eccentricities(&g, Variant::Source).unwrap();
        for seed in 0..10 {
            let r = approx_source_radius(&g, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            assert_eq!(r.estimate, exact.ecc[r.witness_center.unwrap()]);
            assert!(r.within_guarantee(exact.radius));
        }
    }
}
