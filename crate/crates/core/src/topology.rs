//! The k-ary n-cube host graph.
//!
//! Nodes are `n`-digit base-`k` tuples. Two nodes are adjacent when they differ
//! in one dimension by one modulo `k`, so every dimension is a ring. For
//! `k = 2` the two ring neighbors coincide and the cube is the binary
//! hypercube.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest node count a [`CubeSpec`] accepts unless a bound is given explicitly.
pub const DEFAULT_NODE_BOUND: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeSpec {
    k: u32,
    n: u32,
}

impl CubeSpec {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        Self::with_node_bound(k, n, DEFAULT_NODE_BOUND)
    }

    pub fn with_node_bound(k: u32, n: u32, bound: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain("k", k.into(), ">= 2"));
        }
        if n < 1 {
            return Err(Error::domain("n", n.into(), ">= 1"));
        }
        match u64::from(k).checked_pow(n) {
            Some(count) if count <= bound => Ok(CubeSpec { k, n }),
            Some(count) => Err(Error::domain("k^n", count, format!("<= {bound}"))),
            None => Err(Error::domain("k^n", u64::MAX, format!("<= {bound}"))),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn node_count(&self) -> u64 {
        u64::from(self.k).pow(self.n)
    }

    /// Whether `c` has `n` digits, each below `k`.
    pub fn contains(&self, c: &Coordinate) -> bool {
        c.len() == self.n as usize && c.digits().iter().all(|&d| d < self.k)
    }

    /// Dense index of a coordinate: its digits read as a base-`k` number,
    /// dimension 0 most significant.
    pub fn index_of(&self, c: &Coordinate) -> u64 {
        c.digits()
            .iter()
            .fold(0u64, |acc, &d| acc * u64::from(self.k) + u64::from(d))
    }

    pub fn coordinate_at(&self, mut index: u64) -> Coordinate {
        let k = u64::from(self.k);
        let mut digits = vec![0u32; self.n as usize];
        for slot in digits.iter_mut().rev() {
            *slot = (index % k) as u32;
            index /= k;
        }
        Coordinate(digits)
    }
}

impl fmt::Display for CubeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-ary {}-cube", self.k, self.n)
    }
}

/// A cube node as digits, dimension 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Coordinate(Vec<u32>);

impl Coordinate {
    pub fn new(digits: Vec<u32>) -> Self {
        Coordinate(digits)
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for Coordinate {
    fn from(digits: Vec<u32>) -> Self {
        Coordinate(digits)
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Every node, in lexicographic digit order.
pub fn nodes(spec: &CubeSpec) -> impl Iterator<Item = Coordinate> + '_ {
    (0..spec.node_count()).map(move |i| spec.coordinate_at(i))
}

/// The ring neighbors of `c` in every dimension, deduplicated.
pub fn neighbors(spec: &CubeSpec, c: &Coordinate) -> BTreeSet<Coordinate> {
    let k = spec.k;
    let mut out = BTreeSet::new();
    for dim in 0..c.len() {
        let d = c.0[dim];
        for next in [(d + 1) % k, (d + k - 1) % k] {
            let mut digits = c.0.clone();
            digits[dim] = next;
            out.insert(Coordinate(digits));
        }
    }
    out
}

pub fn are_adjacent(spec: &CubeSpec, a: &Coordinate, b: &Coordinate) -> bool {
    torus_distance(spec, a, b) == 1
}

/// Per-dimension ring distance between two digits.
pub(crate) fn ring_distance(k: u32, a: u32, b: u32) -> u32 {
    let diff = a.abs_diff(b);
    diff.min(k - diff)
}

/// Lee distance: the shortest-path length between two nodes.
pub fn torus_distance(spec: &CubeSpec, a: &Coordinate, b: &Coordinate) -> u64 {
    a.0.iter()
        .zip(&b.0)
        .map(|(&x, &y)| u64::from(ring_distance(spec.k, x, y)))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CubeStats {
    pub node_count: u64,
    pub edge_count: u64,
    pub degree: u32,
    pub diameter: u64,
}

pub fn cube_stats(spec: &CubeSpec) -> CubeStats {
    let nodes = spec.node_count();
    let degree = if spec.k == 2 { spec.n } else { 2 * spec.n };
    CubeStats {
        node_count: nodes,
        edge_count: nodes * u64::from(degree) / 2,
        degree,
        diameter: u64::from(spec.n) * u64::from(spec.k / 2),
    }
}

/// Every edge once, as dense index pairs `(lo, hi)` in ascending order.
pub fn edges(spec: &CubeSpec) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for c in nodes(spec) {
        let here = spec.index_of(&c);
        for nb in neighbors(spec, &c) {
            let there = spec.index_of(&nb);
            if here < there {
                out.push((here, there));
            }
        }
    }
    out
}
