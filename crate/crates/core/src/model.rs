//! Vertices, edges, blocks and factor classes of a uniformly resolvable
//! decomposition of `K_v`.
//!
//! A vertex of `K_v` with `v = m(n+1)` is addressed as a pair
//! `(base, level)`: `base` is a point of `K_m` and `level` is an element of
//! `Z_{n+1}`. The flat index `base * (n+1) + level` is used only when a
//! single integer is needed.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Result, UrdError};

/// Order `v`, star arity `n` and base order `m = v / (n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    v: usize,
    n: usize,
    m: usize,
}

impl Params {
    /// Requires `n` odd, `n >= 3` and `(n+1) | v`.
    pub fn new(v: usize, n: usize) -> Result<Self> {
        check_arity(n)?;
        if v == 0 || !v.is_multiple_of(n + 1) {
            return Err(UrdError::InvalidParams(format!(
                "v = {v} is not a positive multiple of n+1 = {}",
                n + 1
            )));
        }
        Ok(Params {
            v,
            n,
            m: v / (n + 1),
        })
    }

    /// Builds the parameter triple from `m` and `n`.
    pub fn from_base(m: usize, n: usize) -> Result<Self> {
        check_arity(n)?;
        if m == 0 {
            return Err(UrdError::InvalidParams("m must be positive".into()));
        }
        Ok(Params {
            v: m * (n + 1),
            n,
            m,
        })
    }

    /// Stores the triple as given. Used for decoded input that the verifier
    /// has yet to audit; see [`Params::is_consistent`].
    pub fn unchecked(v: usize, n: usize, m: usize) -> Self {
        Params { v, n, m }
    }

    pub fn is_consistent(&self) -> bool {
        self.n >= 3 && self.n % 2 == 1 && self.m > 0 && self.v == self.m * (self.n + 1)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of levels, `n + 1`.
    pub fn weight(&self) -> usize {
        self.n + 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let w = self.weight();
        (0..self.m).flat_map(move |b| (0..w).map(move |l| Vertex::new(b, l)))
    }

    pub fn contains(&self, x: Vertex) -> bool {
        x.base() < self.m && x.level() < self.weight()
    }

    pub fn flat_index(&self, x: Vertex) -> usize {
        x.base() * self.weight() + x.level()
    }

    pub fn vertex_at(&self, index: usize) -> Vertex {
        Vertex::new(index / self.weight(), index % self.weight())
    }
}

pub(crate) fn check_arity(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(UrdError::InvalidParams(format!(
            "n = {n} must be an odd integer >= 3"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    base: u32,
    level: u32,
}

impl Vertex {
    pub fn new(base: usize, level: usize) -> Self {
        Vertex {
            base: base as u32,
            level: level as u32,
        }
    }

    pub fn base(&self) -> usize {
        self.base as usize
    }

    pub fn level(&self) -> usize {
        self.level as usize
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.base, self.level)
    }
}

/// An undirected edge with endpoints stored in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(UrdError::InvalidBlock(format!("loop at {a}"))),
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A star `K_{1,k}`; leaves are kept sorted so equal stars compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Star {
    center: Vertex,
    leaves: Vec<Vertex>,
}

impl Star {
    /// Rejects an empty leaf list, repeated leaves, and a leaf equal to the
    /// center. The arity is not checked here.
    pub fn new(center: Vertex, leaves: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut leaves: Vec<Vertex> = leaves.into_iter().collect();
        if leaves.is_empty() {
            return Err(UrdError::InvalidBlock(format!(
                "star at {center} has no leaves"
            )));
        }
        leaves.sort_unstable();
        if leaves.windows(2).any(|w| w[0] == w[1]) {
            return Err(UrdError::InvalidBlock(format!(
                "star at {center} has a repeated leaf"
            )));
        }
        if leaves.binary_search(&center).is_ok() {
            return Err(UrdError::InvalidBlock(format!(
                "star at {center} lists its center as a leaf"
            )));
        }
        Ok(Star { center, leaves })
    }

    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn leaves(&self) -> &[Vertex] {
        &self.leaves
    }

    pub fn arity(&self) -> usize {
        self.leaves.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    K2,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    K2(Edge),
    Star(Star),
}

impl Block {
    pub fn edge(a: Vertex, b: Vertex) -> Result<Self> {
        Edge::new(a, b).map(Block::K2)
    }

    pub fn star(center: Vertex, leaves: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        Star::new(center, leaves).map(Block::Star)
    }

    pub fn kind(&self) -> BlockKind {
        match self {
            Block::K2(_) => BlockKind::K2,
            Block::Star(_) => BlockKind::Star,
        }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Block::K2(e) => vec![e.0, e.1],
            Block::Star(s) => std::iter::once(s.center)
                .chain(s.leaves.iter().copied())
                .collect(),
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        match self {
            Block::K2(e) => vec![*e],
            Block::Star(s) => s.leaves.iter().map(|&l| canonical(s.center, l)).collect(),
        }
    }
}

/// Edge between two vertices already known to be distinct.
fn canonical(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        Edge(a, b)
    } else {
        Edge(b, a)
    }
}

/// The edge set of a block.
pub fn edges_of_block(b: &Block) -> BTreeSet<Edge> {
    b.edges().into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    OneFactor,
    StarFactor,
}

impl ClassKind {
    pub fn block_kind(self) -> BlockKind {
        match self {
            ClassKind::OneFactor => BlockKind::K2,
            ClassKind::StarFactor => BlockKind::Star,
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::OneFactor => "one_factor",
            ClassKind::StarFactor => "star_factor",
        })
    }
}

/// A resolution class: vertex-disjoint blocks of a single kind covering
/// every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorClass {
    kind: ClassKind,
    blocks: Vec<Block>,
}

impl FactorClass {
    /// Builds a class and checks that it is a spanning, vertex-disjoint set of
    /// blocks of the right kind (and arity `n` for stars).
    pub fn new(kind: ClassKind, blocks: Vec<Block>, params: &Params) -> Result<Self> {
        let class = FactorClass { kind, blocks };
        class.check(params)?;
        Ok(class)
    }

    /// Stores the blocks without any check.
    pub fn unchecked(kind: ClassKind, blocks: Vec<Block>) -> Self {
        FactorClass { kind, blocks }
    }

    pub fn one_factor(edges: impl IntoIterator<Item = Edge>, params: &Params) -> Result<Self> {
        FactorClass::new(
            ClassKind::OneFactor,
            edges.into_iter().map(Block::K2).collect(),
            params,
        )
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.blocks.iter().flat_map(Block::edges)
    }

    fn check(&self, params: &Params) -> Result<()> {
        let expected = match self.kind {
            ClassKind::OneFactor => params.v() / 2,
            ClassKind::StarFactor => params.m(),
        };
        let mut seen = vec![false; params.v()];
        for block in &self.blocks {
            if block.kind() != self.kind.block_kind() {
                return Err(UrdError::InvalidClass(format!(
                    "{:?} block in a {} class",
                    block.kind(),
                    self.kind
                )));
            }
            if let Block::Star(s) = block {
                if s.arity() != params.n() {
                    return Err(UrdError::InvalidClass(format!(
                        "star at {} has {} leaves, expected {}",
                        s.center,
                        s.arity(),
                        params.n()
                    )));
                }
            }
            for x in block.vertices() {
                if !params.contains(x) {
                    return Err(UrdError::InvalidClass(format!("vertex {x} out of range")));
                }
                let slot = &mut seen[params.flat_index(x)];
                if *slot {
                    return Err(UrdError::InvalidClass(format!("vertex {x} covered twice")));
                }
                *slot = true;
            }
        }
        if let Some(i) = seen.iter().position(|&c| !c) {
            return Err(UrdError::InvalidClass(format!(
                "vertex {} not covered",
                params.vertex_at(i)
            )));
        }
        if self.blocks.len() != expected {
            return Err(UrdError::InvalidClass(format!(
                "{} blocks, expected {expected}",
                self.blocks.len()
            )));
        }
        Ok(())
    }
}

/// A resolution of `E(K_v)` into `r` one-factors and `s` star factors.
///
/// `r` and `s` are stored as recorded so that decoded certificates can be
/// audited against their actual class counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    params: Params,
    r: usize,
    s: usize,
    classes: Vec<FactorClass>,
}

impl Decomposition {
    /// Counts `r` and `s` from the classes.
    pub fn new(params: Params, classes: Vec<FactorClass>) -> Self {
        let r = classes
            .iter()
            .filter(|c| c.kind == ClassKind::OneFactor)
            .count();
        let s = classes.len() - r;
        Decomposition {
            params,
            r,
            s,
            classes,
        }
    }

    pub fn from_parts(params: Params, r: usize, s: usize, classes: Vec<FactorClass>) -> Self {
        Decomposition {
            params,
            r,
            s,
            classes,
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn classes(&self) -> &[FactorClass] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<FactorClass> {
        self.classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vx(b: usize, l: usize) -> Vertex {
        Vertex::new(b, l)
    }

    #[test]
    fn k2_block_has_its_edge() {
        let b = Block::edge(vx(1, 1), vx(0, 0)).unwrap();
        let edges = edges_of_block(&b);
        assert_eq!(edges.len(), 1);
        let e = edges.into_iter().next().unwrap();
        assert_eq!(e.endpoints(), (vx(0, 0), vx(1, 1)));
    }

    #[test]
    fn star_block_expands_to_center_leaf_edges() {
        let b = Block::star(vx(0, 0), [vx(1, 3), vx(1, 1), vx(1, 2)]).unwrap();
        let edges: Vec<_> = edges_of_block(&b)
            .into_iter()
            .map(|e| e.endpoints())
            .collect();
        assert_eq!(
            edges,
            vec![
                (vx(0, 0), vx(1, 1)),
                (vx(0, 0), vx(1, 2)),
                (vx(0, 0), vx(1, 3)),
            ]
        );
    }

    #[test]
    fn star_rejects_duplicate_or_center_leaves() {
        assert!(Block::star(vx(0, 0), [vx(1, 1), vx(1, 1), vx(1, 2)]).is_err());
        assert!(Block::star(vx(0, 0), [vx(0, 0), vx(1, 1), vx(1, 2)]).is_err());
        assert!(Block::star(vx(0, 0), []).is_err());
        assert!(Block::edge(vx(2, 2), vx(2, 2)).is_err());
    }

    #[test]
    fn stars_with_equal_edges_are_equal() {
        let a = Block::star(vx(0, 0), [vx(1, 1), vx(1, 2), vx(1, 3)]).unwrap();
        let b = Block::star(vx(0, 0), [vx(1, 3), vx(1, 2), vx(1, 1)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn params_validation() {
        assert!(Params::new(12, 3).is_ok());
        assert!(Params::new(12, 4).is_err());
        assert!(Params::new(10, 3).is_err());
        assert!(Params::new(0, 3).is_err());
        assert!(Params::new(12, 1).is_err());
        let p = Params::new(20, 3).unwrap();
        assert_eq!((p.m(), p.weight()), (5, 4));
        assert_eq!(p.vertices().count(), 20);
        for (i, x) in p.vertices().enumerate() {
            assert_eq!(p.flat_index(x), i);
            assert_eq!(p.vertex_at(i), x);
        }
    }

    #[test]
    fn class_checks() {
        let p = Params::new(4, 3).unwrap();
        let ok = FactorClass::one_factor(
            [
                Edge::new(vx(0, 0), vx(0, 1)).unwrap(),
                Edge::new(vx(0, 2), vx(0, 3)).unwrap(),
            ],
            &p,
        );
        assert!(ok.is_ok());
        let overlap = FactorClass::one_factor(
            [
                Edge::new(vx(0, 0), vx(0, 1)).unwrap(),
                Edge::new(vx(0, 1), vx(0, 3)).unwrap(),
            ],
            &p,
        );
        assert!(overlap.is_err());
        let partial = FactorClass::one_factor([Edge::new(vx(0, 0), vx(0, 1)).unwrap()], &p);
        assert!(partial.is_err());
        let star = Block::star(vx(0, 0), [vx(0, 1), vx(0, 2), vx(0, 3)]).unwrap();
        assert!(FactorClass::new(ClassKind::StarFactor, vec![star.clone()], &p).is_ok());
        assert!(FactorClass::new(ClassKind::OneFactor, vec![star], &p).is_err());
    }
}
