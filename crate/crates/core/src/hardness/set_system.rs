// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which question a [`SetSystemInstance`] asks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Is some `a` disjoint from some `b`?
    #[serde(rename = "OV")]
    Ov,
    /// Does some `a` intersect every `b`?
    #[serde(rename = "HSE")]
    Hse,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ov => "OV",
            Mode::Hse => "HSE",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "OV" | "ov" => Ok(Mode::Ov),
            "HSE" | "hse" => Ok(Mode::Hse),
            _ => Err(Error::input(format!("unknown set-system mode '{s}'"))),
        }
    }
}

/// Two lists of subsets of the universe `0..d`.
///
/// A set doubles as a boolean vector of length `d`, so the same type serves
/// orthogonal-vector and hitting-set instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystemInstance {
    d: usize,
    a: Vec<FixedBitSet>,
    b: Vec<FixedBitSet>,
    mode: Mode,
}

/// Answer of [`solve_set_system`] with its certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// Indices of a disjoint pair.
    Orthogonal(usize, usize),
    /// Index of an `a` meeting every `b`.
    Hitting(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetSystemAnswer {
    pub answer: bool,
    pub witness: Option<Witness>,
}

impl SetSystemInstance {
    /// Builds an instance from element lists; every element must lie in `0..d`.
    pub fn new(d: usize, a: &[Vec<usize>], b: &[Vec<usize>], mode: Mode) -> Result<Self> {
        let conv = |sets: &[Vec<usize>]| -> Result<Vec<FixedBitSet>> {
            sets.iter()
                .map(|s| {
                    let mut bits = FixedBitSet::with_capacity(d);
                    for &e in s {
                        if e >= d {
                            return Err(Error::input(format!("element {e} outside universe of size {d}")));
                        }
                        bits.insert(e);
                    }
                    Ok(bits)
                })
                .collect()
        };
        Ok(SetSystemInstance {
            d,
            a: conv(a)?,
            b: conv(b)?,
            mode,
        })
    }

    pub(crate) fn from_bits(d: usize, a: Vec<FixedBitSet>, b: Vec<FixedBitSet>, mode: Mode) -> Self {
        debug_assert!(a.iter().chain(&b).all(|s| s.len() == d));
        SetSystemInstance { d, a, b, mode }
    }

    pub fn universe(&self) -> usize {
        self.d
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn list_a(&self) -> &[FixedBitSet] {
        &self.a
    }

    pub fn list_b(&self) -> &[FixedBitSet] {
        &self.b
    }

    /// Elements of `a[i]` in increasing order.
    pub fn a_elements(&self, i: usize) -> Vec<usize> {
        self.a[i].ones().collect()
    }

    /// Elements of `b[j]` in increasing order.
    pub fn b_elements(&self, j: usize) -> Vec<usize> {
        self.b[j].ones().collect()
    }

    /// Text form: `s <nA> <nB> <d> <OV|HSE>` then one line per set.
    pub fn to_text(&self) -> String {
        let mut out = format!("s {} {} {} {}\n", self.a.len(), self.b.len(), self.d, self.mode);
        for set in self.a.iter().chain(&self.b) {
            let items: Vec<String> = set.ones().map(|e| e.to_string()).collect();
            out.push_str(&items.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 5 || fields[0] != "s" {
            return Err(Error::parse(1, "expected 's <nA> <nB> <d> <OV|HSE>'"));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(1, format!("bad count '{s}'")))
        };
        let (na, nb, d) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
        let mode: Mode = fields[4]
            .parse()
            .map_err(|_| Error::parse(1, format!("bad mode '{}'", fields[4])))?;
        let mut sets = Vec::with_capacity(na + nb);
        for _ in 0..na + nb {
            let (idx, line) = lines
                .next()
                .ok_or_else(|| Error::parse(sets.len() + 2, "missing set line"))?;
            let mut bits = FixedBitSet::with_capacity(d);
            for tok in line.split_whitespace() {
                let e: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(idx + 1, format!("bad element '{tok}'")))?;
                if e >= d {
                    return Err(Error::parse(
                        idx + 1,
                        format!("element {e} outside universe of size {d}"),
                    ));
                }
                bits.insert(e);
            }
            sets.push(bits);
        }
        if let Some((idx, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(idx + 1, format!("trailing content '{line}'")));
        }
        let b = sets.split_off(na);
        Ok(SetSystemInstance { d, a: sets, b, mode })
    }
}

/// Indices of all `a` that intersect every `b`.
pub fn hitting_indices(inst: &SetSystemInstance) -> Vec<usize> {
    (0..inst.a.len())
        .into_par_iter()
        .filter(|&i| inst.b.iter().all(|b| !inst.a[i].is_disjoint(b)))
        .collect()
}

/// Exact answer by word-parallel brute force.
pub fn solve_set_system(inst: &SetSystemInstance) -> SetSystemAnswer {
    let witness = match inst.mode {
        Mode::Ov => inst.a.par_iter().enumerate().find_map_first(|(i, a)| {
            inst.b
                .iter()
                .position(|b| a.is_disjoint(b))
                .map(|j| Witness::Orthogonal(i, j))
        }),
        Mode::Hse => hitting_indices(inst).first().map(|&i| Witness::Hitting(i)),
    };
    SetSystemAnswer {
        answer: witness.is_some(),
        witness,
    }
}

/// Random instance; each element joins each set independently with probability `p`.
pub fn random_set_system<R: Rng + ?Sized>(
    na: usize,
    nb: usize,
    d: usize,
    p: f64,
    mode: Mode,
    rng: &mut R,
) -> SetSystemInstance {
    let mut draw = || {
        let mut bits = FixedBitSet::with_capacity(d);
        for e in 0..d {
            if rng.gen_bool(p) {
                bits.insert(e);
            }
        }
        bits
    };
    let a = (0..na).map(|_| draw()).collect();
    let b = (0..nb).map(|_| draw()).collect();
    SetSystemInstance { d, a, b, mode }
}

/// Every instance with the given list sizes over a universe of size `d`.
///
/// There are `2^(d(na+nb))` of them, so keep the arguments tiny.
pub fn all_set_systems(na: usize, nb: usize, d: usize, mode: Mode) -> impl Iterator<Item = SetSystemInstance> {
    let k = na + nb;
    let total = 1u64 << (d * k);
    (0..total).map(move |code| {
        let sets: Vec<FixedBitSet> = (0..k)
            .map(|s| {
                let mut bits = FixedBitSet::with_capacity(d);
                for e in 0..d {
                    if code >> (s * d + e) & 1 == 1 {
                        bits.insert(e);
                    }
                }
                bits
            })
            .collect();
        let mut a = sets;
        let b = a.split_off(na);
        SetSystemInstance { d, a, b, mode }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_answers() {
        let ov = SetSystemInstance::new(0, &[vec![]], &[vec![]], Mode::Ov).unwrap();
        assert_eq!(solve_set_system(&ov).witness, Some(Witness::Orthogonal(0, 0)));
        let hse = SetSystemInstance::new(2, &[vec![1]], &[vec![1]], Mode::Hse).unwrap();
        assert_eq!(solve_set_system(&hse).witness, Some(Witness::Hitting(0)));
        let none = SetSystemInstance::new(2, &[vec![0]], &[vec![1]], Mode::Hse).unwrap();
        assert!(!solve_set_system(&none).answer);
    }

    #[test]
    fn matches_naive_loops() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let na = rng.gen_range(0..=64);
            let nb = rng.gen_range(0..=64);
            let d = rng.gen_range(0..=32);
            let p = rng.gen_range(0.05..0.6);
            let inst = random_set_system(na, nb, d, p, Mode::Ov, &mut rng);
            let sets = |l: &[FixedBitSet]| l.iter().map(|s| s.ones().collect::<Vec<_>>()).collect::<Vec<_>>();
            let (a, b) = (sets(inst.list_a()), sets(inst.list_b()));
            let meets = |x: &Vec<usize>, y: &Vec<usize>| x.iter().any(|e| y.contains(e));
            let ov = a.iter().any(|x| b.iter().any(|y| !meets(x, y)));
            let hse = a.iter().any(|x| b.iter().all(|y| meets(x, y)));
            assert_eq!(solve_set_system(&inst).answer, ov);
            assert_eq!(solve_set_system(&inst.clone().with_mode(Mode::Hse)).answer, hse);
        }
    }

    #[test]
    fn witnesses_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..200 {
            let inst = random_set_system(6, 6, 5, 0.4, Mode::Ov, &mut rng);
            if let Some(Witness::Orthogonal(i, j)) = solve_set_system(&inst).witness {
                assert!(inst.list_a()[i].is_disjoint(&inst.list_b()[j]));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let inst = SetSystemInstance::new(4, &[vec![0, 3], vec![]], &[vec![1]], Mode::Hse).unwrap();
        let text = inst.to_text();
        assert_eq!(text, "s 2 1 4 HSE\n0 3\n\n1\n");
        let back = SetSystemInstance::parse(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(back.to_text(), text);
        assert!(SetSystemInstance::parse("s 1 0 2 OV\n5\n").is_err());
        assert!(SetSystemInstance::parse("s 2 0 2 OV\n1\n").is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_set_systems(1, 1, 2, Mode::Ov).count(), 16);
        let distinct: std::collections::HashSet<String> =
            all_set_systems(2, 1, 2, Mode::Ov).map(|i| i.to_text()).collect();
        assert_eq!(distinct.len(), 64);
    }
}
