// SPDX-License-Identifier: Apache-2.0

use rand::seq::SliceRandom;
use rand::Rng;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Random partial k-tree with unit weights and its width-`k` decomposition.
///
/// A random k-tree is grown from a `(k+1)`-clique; each later vertex joins a
/// random k-subset of a random existing bag. Every edge outside the seed
/// clique is then kept with probability `edge_keep_prob`. Vertex ids are
/// shuffled.
pub fn generate_partial_ktree<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    edge_keep_prob: f64,
    rng: &mut R,
) -> Result<(Graph, TreeDecomposition)> {
    if n <= k {
        return Err(Error::input(format!("need n > k, got n = {n}, k = {k}")));
    }
    if !(0.0..=1.0).contains(&edge_keep_prob) {
        return Err(Error::input("edge_keep_prob must lie in [0, 1]"));
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);

    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((label[u], label[v], 1));
        }
    }
    let mut bags: Vec<Vec<usize>> = vec![(0..=k).collect()];
    let mut tree = Vec::with_capacity(n - k - 1);
    for v in k + 1..n {
        let parent = rng.gen_range(0..bags.len());
        let mut bag = bags[parent].clone();
        if k > 0 {
            bag.swap_remove(rng.gen_range(0..bag.len()));
        } else {
            bag.clear();
        }
        for &u in &bag {
            if rng.gen_bool(edge_keep_prob) {
                edges.push((label[u], label[v], 1));
            }
        }
        bag.push(v);
        tree.push((parent, bags.len()));
        bags.push(bag);
    }
    let bags = bags
        .into_iter()
        .map(|b| b.into_iter().map(|v| label[v]).collect())
        .collect();
    let g = Graph::new(n, edges, true)?;
    Ok((g, TreeDecomposition::new(bags, tree)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn outputs_validate() {
        for seed in 0..200 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = (seed % 4 + 1) as usize;
            let (g, td) = generate_partial_ktree(40, k, 0.7, &mut rng).unwrap();
            td.validate(&g).unwrap();
            assert_eq!(td.width(), k);
        }
    }

    #[test]
    fn edge_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (g, td) = generate_partial_ktree(30, 1, 1.0, &mut rng).unwrap();
        assert_eq!(g.m(), 29);
        td.validate(&g).unwrap();
        let (g, td) = generate_partial_ktree(6, 5, 0.5, &mut rng).unwrap();
        assert_eq!(td.bags.len(), 1);
        assert_eq!(g.m(), 15);
        assert!(generate_partial_ktree(3, 3, 0.5, &mut rng).is_err());
    }
}
