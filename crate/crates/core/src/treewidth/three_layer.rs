// SPDX-License-Identifier: Apache-2.0

//! Farthest two-hop distances in a three-layered graph `A → B → C`.

use super::range_max::{RangeMaxIndex, RangePoint};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::paths::INF;

/// Arc weights `A × B` and `B × C` of a three-layered graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeLayerInstance {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    dab: Vec<u64>,
    dbc: Vec<u64>,
}

impl ThreeLayerInstance {
    /// Builds from row-major matrices `dab[a][b]` and `dbc[b][c]`.
    pub fn new(dab: &[Vec<Distance>], dbc: &[Vec<Distance>]) -> Result<Self> {
        let a = dab.len();
        let b = dbc.len();
        let c = dbc.first().map_or(0, Vec::len);
        if dab.iter().any(|r| r.len() != b) || dbc.iter().any(|r| r.len() != c) {
            return Err(Error::input("ragged three-layer matrices"));
        }
        Ok(ThreeLayerInstance {
            a,
            b,
            c,
            dab: dab.iter().flatten().map(|d| d.to_raw()).collect(),
            dbc: dbc.iter().flatten().map(|d| d.to_raw()).collect(),
        })
    }

    /// Builds from raw entries (`INF` for infinity) given by closures.
    pub(crate) fn from_fn(
        a: usize,
        b: usize,
        c: usize,
        fab: impl Fn(usize, usize) -> u64,
        fbc: impl Fn(usize, usize) -> u64,
    ) -> Self {
        let mut dab = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                dab.push(fab(i, j));
            }
        }
        let mut dbc = Vec::with_capacity(b * c);
        for j in 0..b {
            for k in 0..c {
                dbc.push(fbc(j, k));
            }
        }
        ThreeLayerInstance { a, b, c, dab, dbc }
    }

    #[inline]
    fn ab(&self, i: usize, j: usize) -> u64 {
        self.dab[i * self.b + j]
    }

    #[inline]
    fn bc(&self, j: usize, k: usize) -> u64 {
        self.dbc[j * self.c + k]
    }

    fn two_hop(&self, i: usize, k: usize) -> u64 {
        (0..self.b)
            .map(|j| {
                let (x, y) = (self.ab(i, j), self.bc(j, k));
                if x == INF || y == INF {
                    INF
                } else {
                    x.saturating_add(y).min(INF - 1)
                }
            })
            .min()
            .unwrap_or(INF)
    }
}

/// Per `a`: `max_c min_b dab[a][b] + dbc[b][c]` and the smallest `c` attaining it.
/// With `C` empty the answer is `(0, None)`.
pub fn three_layer_farthest(inst: &ThreeLayerInstance) -> Vec<(Distance, Option<usize>)> {
    three_layer_raw(inst)
        .into_iter()
        .map(|(d, w)| (Distance::from_raw(d), w))
        .collect()
}

/// Triple-loop reference for [`three_layer_farthest`].
pub fn three_layer_brute(inst: &ThreeLayerInstance) -> Vec<(Distance, Option<usize>)> {
    (0..inst.a)
        .map(|i| {
            let mut best: Option<(u64, usize)> = None;
            for k in 0..inst.c {
                let d = inst.two_hop(i, k);
                if best.is_none_or(|(bd, _)| d > bd) {
                    best = Some((d, k));
                }
            }
            match best {
                Some((d, k)) => (Distance::from_raw(d), Some(k)),
                None => (Distance::ZERO, None),
            }
        })
        .collect()
}

pub(crate) fn three_layer_raw(inst: &ThreeLayerInstance) -> Vec<(u64, Option<usize>)> {
    let (na, nb, nc) = (inst.a, inst.b, inst.c);
    if nc == 0 {
        return vec![(0, None); na];
    }
    if nb == 0 {
        return vec![(INF, Some(0)); na];
    }
    if nb > 64 {
        return three_layer_brute(inst)
            .into_iter()
            .map(|(d, w)| (d.to_raw(), w))
            .collect();
    }

    // Infinite answers: c is unreachable from a iff no b has both legs finite.
    let mut c_masks: Vec<(u64, usize)> = (0..nc)
        .map(|k| {
            let m = (0..nb).filter(|&j| inst.bc(j, k) != INF).fold(0u64, |m, j| m | 1 << j);
            (m, k)
        })
        .collect();
    c_masks.sort_unstable();
    c_masks.dedup_by_key(|e| e.0);
    let a_mask = |i: usize| (0..nb).filter(|&j| inst.ab(i, j) != INF).fold(0u64, |m, j| m | 1 << j);

    // Clamp differences into a finite window.
    let max_finite = inst
        .dab
        .iter()
        .chain(&inst.dbc)
        .copied()
        .filter(|&x| x != INF)
        .max()
        .unwrap_or(0);
    let big = i64::try_from(max_finite).expect("distances fit in i64") + 1;
    let diff = |x: u64, y: u64| -> i64 {
        match (x == INF, y == INF) {
            (true, true) => 0,
            (true, false) => big,
            (false, true) => -big,
            (false, false) => x as i64 - y as i64,
        }
    };

    let dims = nb - 1;
    let others = |j: usize| (0..nb).filter(move |&o| o != j);
    let indexes: Vec<RangeMaxIndex> = (0..nb)
        .map(|j| {
            let pts = (0..nc)
                .filter(|&k| inst.bc(j, k) != INF)
                .map(|k| RangePoint {
                    coords: others(j).map(|o| diff(inst.bc(o, k), inst.bc(j, k))).collect(),
                    value: inst.bc(j, k) as i64,
                    payload: k,
                })
                .collect();
            RangeMaxIndex::build(dims, pts).expect("consistent dimensions")
        })
        .collect();

    let hi = vec![i64::MAX; dims];
    let mut lo = vec![0i64; dims];
    (0..na)
        .map(|i| {
            let fa = a_mask(i);
            // dedup kept the smallest c per mask, so the min over masks is the smallest c overall.
            if let Some(k) = c_masks.iter().filter(|&&(m, _)| m & fa == 0).map(|&(_, k)| k).min() {
                return (INF, Some(k));
            }
            let mut best: Option<(u64, usize)> = None;
            for j in 0..nb {
                let x = inst.ab(i, j);
                if x == INF {
                    continue;
                }
                for (slot, o) in others(j).enumerate() {
                    lo[slot] = diff(x, inst.ab(i, o));
                }
                if let Some((v, k)) = indexes[j].query(&lo, &hi) {
                    let total = x + v as u64;
                    let better = match best {
                        None => true,
                        Some((bd, bk)) => total > bd || total == bd && k < bk,
                    };
                    if better {
                        best = Some((total, k));
                    }
                }
            }
            let (d, k) = best.expect("every c has a finite two-hop path");
            (d, Some(k))
        })
        .collect()
}
