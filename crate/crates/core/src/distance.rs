// SPDX-License-Identifier: Apache-2.0

//! Nonnegative path lengths with an explicit infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A shortest-path length: a finite nonnegative integer or `Infinite`.
///
/// `Infinite` compares greater than every finite value and absorbs addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

pub use Distance::{Finite, Infinite};

impl Distance {
    pub const ZERO: Distance = Finite(0);

    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    #[inline]
    pub fn finite(self) -> Option<u64> {
        match self {
            Finite(d) => Some(d),
            Infinite => None,
        }
    }

    /// Packs into a `u64` with `u64::MAX` standing for infinity.
    #[inline]
    pub(crate) fn to_raw(self) -> u64 {
        match self {
            Finite(d) => d,
            Infinite => u64::MAX,
        }
    }

    #[inline]
    pub(crate) fn from_raw(raw: u64) -> Self {
        if raw == u64::MAX {
            Infinite
        } else {
            Finite(raw)
        }
    }

    /// Multiplies a finite value; infinity stays infinite.
    pub fn scale(self, k: u64) -> Distance {
        match self {
            Finite(d) => d.checked_mul(k).map_or(Infinite, Finite),
            Infinite => Infinite,
        }
    }
}

impl Add for Distance {
    type Output = Distance;

    #[inline]
    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Finite(a), Finite(b)) => match a.checked_add(b) {
                Some(s) if s != u64::MAX => Finite(s),
                _ => Infinite,
            },
            _ => Infinite,
        }
    }
}

impl Add<u64> for Distance {
    type Output = Distance;

    #[inline]
    fn add(self, rhs: u64) -> Distance {
        self + Finite(rhs)
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_raw().cmp(&other.to_raw())
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Distance {
    fn from(d: u64) -> Self {
        Finite(d)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(d) => write!(f, "{d}"),
            Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Distance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "Infinity" | "∞" => Ok(Infinite),
            _ => s
                .parse::<u64>()
                .map(Finite)
                .map_err(|e| format!("bad distance {s:?}: {e}")),
        }
    }
}

// JSON: finite values are numbers, infinity is the string "inf".
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(d) => s.serialize_u64(*d),
            Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Finite(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
