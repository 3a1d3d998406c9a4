// SPDX-License-Identifier: Apache-2.0

use fixedbitset::FixedBitSet;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::set_system::{hitting_indices, solve_set_system, Mode, SetSystemInstance};
use crate::error::{Error, Result};
use crate::graph::{Direction, Graph};
use crate::paths::sssp_raw;

/// Which quantity a 2-vs-3 decision is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision23 {
    Diameter,
    Radius,
}

/// Default number of hashing rounds.
pub const DEFAULT_ROUNDS: usize = 20;

/// Decides whether an undirected unit-weight graph promised to have
/// diameter (or radius) 2 or 3 has value 2 or 3.
///
/// Vertices of degree at least `delta` get a full traversal. Every other
/// vertex becomes the set of hashed ids of its closed neighborhood, over
/// `10·delta²` buckets. Hashing only merges ids, so intersecting
/// neighborhoods stay intersecting: the answer 2 is never wrong. Each of
/// the `rounds` rounds misses a far pair with probability at most 1/10.
pub fn reduce_decision23_to_set_system<R: Rng + ?Sized>(
    g: &Graph,
    target: Decision23,
    delta: usize,
    rounds: usize,
    rng: &mut R,
) -> Result<u64> {
    if !g.is_undirected() || !g.is_unit_weight() {
        return Err(Error::input("the hash reduction needs an undirected unit-weight graph"));
    }
    if delta == 0 {
        return Err(Error::input("degree threshold must be positive"));
    }
    let n = g.n();
    let (high, low): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| g.degree(v) >= delta);
    let buckets = 10 * delta * delta;
    let hashed = |h: &[usize], v: usize| {
        let mut s = FixedBitSet::with_capacity(buckets);
        s.insert(h[v]);
        for &(w, _) in g.out_arcs(v) {
            s.insert(h[w]);
        }
        s
    };
    let draw = |rng: &mut R| (0..n).map(|_| rng.gen_range(0..buckets)).collect::<Vec<_>>();

    match target {
        Decision23::Diameter => {
            for &h in &high {
                if sssp_raw(g, h, Direction::Forward).iter().any(|&d| d >= 3) {
                    return Ok(3);
                }
            }
            if low.is_empty() {
                return Ok(2);
            }
            for _ in 0..rounds {
                let h = draw(rng);
                let sets: Vec<FixedBitSet> = low.iter().map(|&v| hashed(&h, v)).collect();
                let inst = SetSystemInstance::from_bits(buckets, sets.clone(), sets, Mode::Ov);
                if solve_set_system(&inst).answer {
                    return Ok(3);
                }
            }
            Ok(2)
        }
        Decision23::Radius => {
            let mut candidate = vec![true; n];
            for &h in &high {
                let dist = sssp_raw(g, h, Direction::Forward);
                if dist.iter().all(|&d| d <= 2) {
                    return Ok(2);
                }
                for (v, &d) in dist.iter().enumerate() {
                    if d > 2 {
                        candidate[v] = false;
                    }
                }
            }
            let mut alive: Vec<usize> = low.iter().copied().filter(|&v| candidate[v]).collect();
            for _ in 0..rounds {
                if alive.is_empty() {
                    break;
                }
                let h = draw(rng);
                let a: Vec<FixedBitSet> = alive.iter().map(|&v| hashed(&h, v)).collect();
                let b: Vec<FixedBitSet> = low.iter().map(|&v| hashed(&h, v)).collect();
                let inst = SetSystemInstance::from_bits(buckets, a, b, Mode::Hse);
                alive = hitting_indices(&inst).into_iter().map(|i| alive[i]).collect();
            }
            Ok(if alive.is_empty() { 3 } else { 2 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardness::ov::gadget_undirected_diameter_23;
    use crate::hardness::radius::gadget_radius_23;
    use crate::hardness::set_system::random_set_system;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn padded_clique() {
        let mut edges = Vec::new();
        for u in 0..10 {
            for v in u + 1..10 {
                edges.push((u, v));
            }
        }
        edges.push((0, 10));
        let g = Graph::undirected_unit(11, &edges).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(
            reduce_decision23_to_set_system(&g, Decision23::Diameter, 4, 20, &mut rng).unwrap(),
            2
        );
        assert_eq!(
            reduce_decision23_to_set_system(&g, Decision23::Radius, 4, 20, &mut rng).unwrap(),
            2
        );
    }

    #[test]
    fn gadget_labels() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let ov = random_set_system(6, 6, 5, 0.6, Mode::Ov, &mut rng);
            let g = gadget_undirected_diameter_23(&ov).unwrap();
            let want = if g.sidecar.answer { 3 } else { 2 };
            let got = reduce_decision23_to_set_system(&g.graph, Decision23::Diameter, 4, 20, &mut rng).unwrap();
            assert_eq!(got, want);

            let hse = random_set_system(6, 6, 5, 0.4, Mode::Hse, &mut rng);
            let g = gadget_radius_23(&hse).unwrap();
            let want = if g.sidecar.answer { 2 } else { 3 };
            let got = reduce_decision23_to_set_system(&g.graph, Decision23::Radius, 4, 20, &mut rng).unwrap();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn rejects_directed_input() {
        let g = Graph::directed_unit(2, &[(0, 1)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(reduce_decision23_to_set_system(&g, Decision23::Diameter, 2, 1, &mut rng).is_err());
    }
}
