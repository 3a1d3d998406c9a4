// SPDX-License-Identifier: Apache-2.0

//! Radius, diameter, eccentricities and median of directed and undirected
//! graphs under five distance semantics.
//!
//! * [`oracle`]: exact all-pairs reference computations.
//! * [`approx`]: subquadratic approximation algorithms.
//! * [`treewidth`]: exact eccentricities on graphs with a small tree decomposition.
//! * [`hardness`]: lower-bound gadget constructions and the reduction from
//!   2-vs-3 decision problems to set-system instances.

#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

pub mod approx;
pub mod distance;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hardness;
pub mod oracle;
pub mod paths;
pub mod rng;
pub mod treewidth;

pub use distance::{Distance, Finite, Infinite};
pub use error::{Error, Result};
pub use graph::{Direction, Edge, Graph};
pub use oracle::{
    all_pairs, exact_eccentricities, exact_median, DistanceMatrix, EccentricityReport, Variant, DEFAULT_CAP,
};
pub use paths::{
    condense_scc, sample_vertex_set, shortest_paths, topological_order, truncated_shortest_paths, DistanceVector,
};
