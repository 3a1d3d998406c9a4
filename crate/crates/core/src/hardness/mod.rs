// SPDX-License-Identifier: Apache-2.0

//! Lower-bound gadgets and the reduction from 2-vs-3 decision problems to
//! set-system instances.

mod dg;
mod gadget;
mod hse;
mod ov;
mod radius;
mod reduce;
mod set_system;

pub use dg::{build_dg, DgFragment};
pub use gadget::{verify_gadget, GadgetOutput, Probe, Promise, Sidecar, Target, Verdict, WitnessMap};
pub use hse::{build_hse_graph, normalize_hse, remove_dominated, HseGraph, NormalHse};
pub use ov::{
    build_ov_graph, gadget_all_eccentricities, gadget_min_diameter_dag, gadget_min_diameter_weighted,
    gadget_roundtrip_diameter, gadget_undirected_diameter_23,
};
pub use radius::{
    default_t, gadget_max_radius, gadget_median, gadget_min_radius_dag, gadget_radius_23, gadget_roundtrip_radius,
    gadget_roundtrip_radius_with, gadget_source_radius, RoundtripStyle,
};
pub use reduce::{reduce_decision23_to_set_system, Decision23, DEFAULT_ROUNDS};
pub use set_system::{
    all_set_systems, hitting_indices, random_set_system, solve_set_system, Mode, SetSystemAnswer, SetSystemInstance,
    Witness,
};
