// SPDX-License-Identifier: Apache-2.0

//! Exact eccentricities on graphs with a tree decomposition of small width.

mod decomposition;
mod eccentricities;
mod generator;
mod portal;
mod range_max;
mod three_layer;

pub use decomposition::{min_degree_decomposition, TreeDecomposition};
pub use eccentricities::{base_size, tw_eccentricities};
pub use generator::generate_partial_ktree;
pub use portal::{find_portal_split, PortalSplit};
pub use range_max::{range_max_build, range_max_query, RangeMaxIndex, RangePoint};
pub use three_layer::{three_layer_brute, three_layer_farthest, ThreeLayerInstance};
