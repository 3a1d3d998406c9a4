// SPDX-License-Identifier: Apache-2.0

use fixedbitset::FixedBitSet;

use super::set_system::{Mode, SetSystemInstance};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tripartite incidence graph of a hitting-set instance.
///
/// Vertices are `A` (ids `0..|A|`), then `U` (ids `|A|..|A|+d`), then `B`.
/// Edges are undirected; gadgets orient them as they need.
#[derive(Debug, Clone)]
pub struct HseGraph {
    pub instance: SetSystemInstance,
    /// Original index of each surviving `a`.
    pub a_origin: Vec<usize>,
    pub graph: Graph,
}

impl HseGraph {
    pub fn a_vertex(&self, i: usize) -> usize {
        i
    }

    pub fn u_vertex(&self, e: usize) -> usize {
        self.instance.list_a().len() + e
    }

    pub fn b_vertex(&self, j: usize) -> usize {
        self.instance.list_a().len() + self.instance.universe() + j
    }
}

/// Drops every `a` whose set is contained in another surviving `a`.
///
/// Among equal sets the first is kept. Returns the kept original indices.
pub fn remove_dominated(sets: &[FixedBitSet]) -> Vec<usize> {
    let mut kept = Vec::new();
    for i in 0..sets.len() {
        let dominated =
            (0..sets.len()).any(|j| j != i && sets[i].is_subset(&sets[j]) && (!sets[j].is_subset(&sets[i]) || j < i));
        if !dominated {
            kept.push(i);
        }
    }
    kept
}

/// Builds the HSE-graph after removing dominated sets from `A`.
pub fn build_hse_graph(inst: &SetSystemInstance) -> Result<HseGraph> {
    if inst.mode() != Mode::Hse {
        return Err(Error::input("the HSE-graph needs a hitting-set instance"));
    }
    let a_origin = remove_dominated(inst.list_a());
    let a: Vec<FixedBitSet> = a_origin.iter().map(|&i| inst.list_a()[i].clone()).collect();
    let instance = SetSystemInstance::from_bits(inst.universe(), a, inst.list_b().to_vec(), Mode::Hse);
    let na = instance.list_a().len();
    let d = instance.universe();
    let mut edges = Vec::new();
    for (i, s) in instance.list_a().iter().enumerate() {
        edges.extend(s.ones().map(|e| (i, na + e, 1)));
    }
    for (j, s) in instance.list_b().iter().enumerate() {
        edges.extend(s.ones().map(|e| (na + e, na + d + j, 1)));
    }
    let graph = Graph::new(na + d + instance.list_b().len(), edges, true)?;
    Ok(HseGraph {
        instance,
        a_origin,
        graph,
    })
}

/// A hitting-set instance in the normal form the gadgets assume.
///
/// * `A` has at least two sets, pairwise incomparable and nonempty.
/// * Every element lies in some `a` and outside some other `a`.
/// * `B` is nonempty, has no empty set, and no element lies in every `b`.
///
/// Instances whose answer is settled during normalization are replaced by a
/// fixed instance with the same answer; `origin` is then `None`.
#[derive(Debug, Clone)]
pub struct NormalHse {
    pub instance: SetSystemInstance,
    pub origin: Option<(Vec<usize>, Vec<usize>)>,
}

fn canonical(answer: bool) -> SetSystemInstance {
    let a = [vec![0, 1], vec![2, 3]];
    let b: &[Vec<usize>] = if answer {
        &[vec![0, 2], vec![1, 3]]
    } else {
        &[vec![2], vec![0]]
    };
    SetSystemInstance::new(4, &a, b, Mode::Hse).expect("fixed instance is valid")
}

/// Normalizes a hitting-set instance without changing its answer.
pub fn normalize_hse(inst: &SetSystemInstance) -> NormalHse {
    let d = inst.universe();
    let mut a_idx: Vec<usize> = (0..inst.list_a().len()).collect();
    let mut b_idx: Vec<usize> = (0..inst.list_b().len()).collect();
    let mut a: Vec<FixedBitSet> = inst.list_a().to_vec();
    let mut b: Vec<FixedBitSet> = inst.list_b().to_vec();
    let settled = loop {
        if a.is_empty() {
            break Some(false);
        }
        if b.is_empty() {
            break Some(true);
        }
        let mut any = FixedBitSet::with_capacity(d);
        let mut every = FixedBitSet::with_capacity(d);
        every.insert_range(..);
        for s in &a {
            any.union_with(s);
            every.intersect_with(s);
        }
        // Sets met by every a constrain nothing.
        let keep: Vec<usize> = (0..b.len()).filter(|&j| b[j].is_disjoint(&every)).collect();
        let mut changed = keep.len() != b.len();
        b_idx = keep.iter().map(|&j| b_idx[j]).collect();
        b = keep.iter().map(|&j| b[j].clone()).collect();
        // Elements in no a, or in every a, are now useless.
        let mut useful = any.clone();
        useful.difference_with(&every);
        for s in a.iter_mut().chain(b.iter_mut()) {
            let before = s.count_ones(..);
            s.intersect_with(&useful);
            changed |= s.count_ones(..) != before;
        }
        let kept = remove_dominated(&a);
        changed |= kept.len() != a.len();
        a_idx = kept.iter().map(|&i| a_idx[i]).collect();
        a = kept.iter().map(|&i| a[i].clone()).collect();
        if changed {
            continue;
        }
        if b.is_empty() {
            break Some(true);
        }
        if b.iter().any(|s| s.is_clear()) {
            break Some(false);
        }
        // An element of every b lies in some a, which then hits everything.
        let mut common = FixedBitSet::with_capacity(d);
        common.insert_range(..);
        for s in &b {
            common.intersect_with(s);
        }
        if !common.is_clear() {
            break Some(true);
        }
        break None;
    };
    match settled {
        Some(answer) => NormalHse {
            instance: canonical(answer),
            origin: None,
        },
        None => {
            let mut used = FixedBitSet::with_capacity(d);
            for s in &a {
                used.union_with(s);
            }
            let keep: Vec<usize> = used.ones().collect();
            let compact = |s: &FixedBitSet| {
                let mut out = FixedBitSet::with_capacity(keep.len());
                for (k, &e) in keep.iter().enumerate() {
                    out.set(k, s.contains(e));
                }
                out
            };
            let a = a.iter().map(compact).collect();
            let b = b.iter().map(compact).collect();
            NormalHse {
                instance: SetSystemInstance::from_bits(keep.len(), a, b, Mode::Hse),
                origin: Some((a_idx, b_idx)),
            }
        }
    }
}
