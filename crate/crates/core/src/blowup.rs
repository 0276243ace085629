//! Blow-ups of base structures by weight `n+1`.
//!
//! Giving weight `w` to a graph `G` replaces each point `x` by the `w`
//! vertices `(x, 0..w)` and each edge `{x, y}` by all `w^2` edges
//! `{(x, i), (y, j)}`. The level-aligned edges `{(x, i), (y, i)}` form the
//! subgraph `J`.
//!
//! Along a weighted cycle, an edge from position `p` level `i` to position
//! `p+1` level `j` has difference `(j - i) mod w`. Differences are always
//! read along increasing cycle position.

use std::collections::BTreeSet;

use crate::error::{Result, UrdError};
use crate::model::{Edge, Vertex};
use crate::seeds::{BaseCycle, Matching};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCycle {
    base: BaseCycle,
    weight: usize,
}

/// A difference `d` in `Z_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DifferenceClass(pub usize);

impl WeightedCycle {
    pub fn new(base: BaseCycle, weight: usize) -> Result<Self> {
        if weight < 2 {
            return Err(UrdError::InvalidParams(format!("weight {weight} < 2")));
        }
        Ok(WeightedCycle { base, weight })
    }

    pub fn base(&self) -> &BaseCycle {
        &self.base
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of positions `m`.
    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// The vertex at cycle position `p` and level `i`, both taken modulo
    /// their ranges.
    pub fn vertex(&self, p: usize, i: usize) -> Vertex {
        Vertex::new(self.base.at(p), i % self.weight)
    }

    /// The edge from `(p, i)` to `(p+1, i+d)`, with positions and levels
    /// reduced modulo `m` and `w`.
    pub(crate) fn arc(&self, p: usize, i: usize, d: usize) -> Edge {
        Edge::new(self.vertex(p, i), self.vertex(p + 1, i + d))
            .expect("consecutive cycle positions hold distinct base points")
    }

    /// The edge from position `p` level `i` to position `p+1` level
    /// `i+d`; all three arguments must be in range.
    pub fn cycle_edge(&self, p: usize, i: usize, d: usize) -> Result<Edge> {
        let m = self.len();
        if p >= m || i >= self.weight || d >= self.weight {
            return Err(UrdError::InvalidParams(format!(
                "(p={p}, i={i}, d={d}) out of range for m={m}, weight={}",
                self.weight
            )));
        }
        Ok(self.arc(p, i, d))
    }

    /// Difference of `e` read along the cycle, or `None` if `e` is not an
    /// edge of the weighted cycle.
    pub fn difference(&self, e: &Edge) -> Option<DifferenceClass> {
        let m = self.len();
        let (a, b) = e.endpoints();
        let pa = self.base.order().iter().position(|&x| x == a.base())?;
        let pb = self.base.order().iter().position(|&x| x == b.base())?;
        if a.level() >= self.weight || b.level() >= self.weight {
            return None;
        }
        let w = self.weight;
        if (pa + 1) % m == pb {
            Some(DifferenceClass((b.level() + w - a.level()) % w))
        } else if (pb + 1) % m == pa {
            Some(DifferenceClass((a.level() + w - b.level()) % w))
        } else {
            None
        }
    }

    /// The `m * w` edges of difference `d`.
    pub fn edges_with_difference(&self, d: usize) -> BTreeSet<Edge> {
        (0..self.len())
            .flat_map(|p| (0..self.weight).map(move |i| (p, i)))
            .map(|(p, i)| self.arc(p, i, d))
            .collect()
    }
}

/// The weighted 1-factor `I_(w)` over a perfect matching of `K_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOneFactor {
    base_matching: Matching,
    weight: usize,
}

impl WeightedOneFactor {
    /// `base_matching` must be a perfect matching of `K_m`, `m` even.
    pub fn new(base_matching: Matching, m: usize, weight: usize) -> Result<Self> {
        if m % 2 == 1 || m == 0 {
            return Err(UrdError::InvalidParams(format!(
                "weighted 1-factor needs even m, got {m}"
            )));
        }
        if weight < 2 {
            return Err(UrdError::InvalidParams(format!("weight {weight} < 2")));
        }
        let mut seen = vec![false; m];
        let mut normalized = Vec::with_capacity(base_matching.len());
        for (a, b) in base_matching {
            if a == b || a >= m || b >= m || seen[a] || seen[b] {
                return Err(UrdError::InvalidParams(format!(
                    "pair ({a}, {b}) breaks the perfect matching on {m} points"
                )));
            }
            seen[a] = true;
            seen[b] = true;
            normalized.push((a.min(b), a.max(b)));
        }
        if seen.iter().any(|&s| !s) {
            return Err(UrdError::InvalidParams("matching is not perfect".into()));
        }
        normalized.sort_unstable();
        Ok(WeightedOneFactor {
            base_matching: normalized,
            weight,
        })
    }

    pub fn base_matching(&self) -> &[(usize, usize)] {
        &self.base_matching
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Edge `{(x, i), (y, i+d)}` for the base pair `x < y`.
    pub(crate) fn shifted(&self, (x, y): (usize, usize), i: usize, d: usize) -> Edge {
        Edge::new(
            Vertex::new(x, i % self.weight),
            Vertex::new(y, (i + d) % self.weight),
        )
        .expect("matched base points are distinct")
    }
}

/// A blown-up structure: its full edge set and its level-aligned part.
pub trait Blowup {
    fn all_edges(&self) -> BTreeSet<Edge>;

    /// The level-aligned edges `J`.
    fn j_edges(&self) -> BTreeSet<Edge>;

    /// All edges outside `J`.
    fn host_edges(&self) -> BTreeSet<Edge> {
        let j = self.j_edges();
        self.all_edges()
            .into_iter()
            .filter(|e| !j.contains(e))
            .collect()
    }
}

impl Blowup for WeightedCycle {
    fn all_edges(&self) -> BTreeSet<Edge> {
        (0..self.weight)
            .flat_map(|d| self.edges_with_difference(d))
            .collect()
    }

    fn j_edges(&self) -> BTreeSet<Edge> {
        self.edges_with_difference(0)
    }
}

impl Blowup for WeightedOneFactor {
    fn all_edges(&self) -> BTreeSet<Edge> {
        let w = self.weight;
        self.base_matching
            .iter()
            .flat_map(|&pair| (0..w).flat_map(move |i| (0..w).map(move |d| (pair, i, d))))
            .map(|(pair, i, d)| self.shifted(pair, i, d))
            .collect()
    }

    fn j_edges(&self) -> BTreeSet<Edge> {
        self.base_matching
            .iter()
            .flat_map(|&pair| (0..self.weight).map(move |i| (pair, i)))
            .map(|(pair, i)| self.shifted(pair, i, 0))
            .collect()
    }
}

pub fn j_edges(structure: &impl Blowup) -> BTreeSet<Edge> {
    structure.j_edges()
}
