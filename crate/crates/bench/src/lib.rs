// SPDX-License-Identifier: Apache-2.0

//! Seeded workloads shared by the criterion benches.

use ecclab_core::generate::{random_connected, random_path_dag, random_strong_digraph};
use ecclab_core::hardness::{random_set_system, Mode, SetSystemInstance};
use ecclab_core::rng::substream;
use ecclab_core::treewidth::{generate_partial_ktree, TreeDecomposition};
use ecclab_core::Graph;

/// Sizes the approximation benches sweep over.
pub const SIZES: [usize; 3] = [250, 500, 1000];

/// Strongly connected unit-weight digraph with about `4n` arcs.
pub fn strong_digraph(n: usize, seed: u64) -> Graph {
    random_strong_digraph(n, 3 * n, 1, &mut substream(seed, "bench.strong"))
}

/// Unit-weight DAG whose vertices are pairwise comparable.
pub fn path_dag(n: usize, seed: u64) -> Graph {
    random_path_dag(n, 3 * n, 1, &mut substream(seed, "bench.dag"))
}

/// Connected undirected graph with weights in `1..=9`.
pub fn connected(n: usize, seed: u64) -> Graph {
    random_connected(n, 2 * n, 9, &mut substream(seed, "bench.connected"))
}

/// Full k-tree on `n` vertices with its width-`k` decomposition.
pub fn ktree(n: usize, k: usize, seed: u64) -> (Graph, TreeDecomposition) {
    generate_partial_ktree(n, k, 1.0, &mut substream(seed, "bench.ktree")).expect("n > k")
}

/// Random set system for gadget construction and the brute-force solver.
pub fn set_system(n: usize, d: usize, mode: Mode, seed: u64) -> SetSystemInstance {
    random_set_system(n, n, d, 0.5, mode, &mut substream(seed, "bench.sets"))
}
