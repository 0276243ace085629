//! Exhaustive backtracking for small uniformly resolvable decompositions.
//!
//! Classes are built one at a time, each by repeatedly covering the least
//! uncovered vertex. Star classes are built before one-factors. The first
//! class is fixed to a canonical form, which loses no solutions because
//! `K_v` is vertex-transitive and all classes of one kind are isomorphic.
//! Later classes of the same kind are interchangeable, so they are also
//! generated in increasing order of the block that holds vertex 0.
//!
//! Vertices are the flat indices `0..v`, kept in `u64` bitmasks, so
//! `v <= 64`.

use std::time::{Duration, Instant};

use crate::admissibility::admissible_pairs;
use crate::error::{Result, UrdError};
use crate::model::{Block, ClassKind, Decomposition, FactorClass, Params};

pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub timeout: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            timeout: None,
        }
    }

    pub fn time(timeout: Duration) -> Self {
        SearchBudget {
            max_nodes: None,
            timeout: Some(timeout),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchStatus {
    Found,
    NotFoundExhausted,
    BudgetExceeded,
}

impl std::fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchStatus::Found => "FOUND",
            SearchStatus::NotFoundExhausted => "NOT_FOUND_EXHAUSTED",
            SearchStatus::BudgetExceeded => "BUDGET_EXCEEDED",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<Decomposition>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// True when the whole symmetry-reduced tree was visited.
    pub exhausted: bool,
    /// Why the search ended without exploring, if it did.
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Raw {
    Pair(usize, usize),
    Star(usize, u64),
}

enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct Searcher {
    v: usize,
    n: usize,
    r: usize,
    s: usize,
    /// Star factors in which each vertex is a center.
    x: usize,
    full: u64,
    adj: Vec<u64>,
    centers: Vec<usize>,
    classes: Vec<Vec<Raw>>,
    current: Vec<Raw>,
    /// Key of the vertex-0 block of each finished class.
    keys: Vec<(usize, u64)>,
    nodes: u64,
    budget: SearchBudget,
    start: Instant,
    solution: Option<Vec<Vec<Raw>>>,
}

fn bit(i: usize) -> u64 {
    1u64 << i
}

fn raw_key(b: &Raw) -> (usize, u64) {
    match *b {
        Raw::Pair(a, c) => (a, bit(c)),
        Raw::Star(c, leaves) => (c, leaves),
    }
}

impl Searcher {
    fn total(&self) -> usize {
        self.r + self.s
    }

    fn kind_of(&self, ci: usize) -> ClassKind {
        if ci < self.s {
            ClassKind::StarFactor
        } else {
            ClassKind::OneFactor
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                return false;
            }
        }
        if let Some(limit) = self.budget.timeout {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() > limit {
                return false;
            }
        }
        true
    }

    fn apply(&mut self, b: Raw) {
        match b {
            Raw::Pair(a, c) => {
                self.adj[a] &= !bit(c);
                self.adj[c] &= !bit(a);
            }
            Raw::Star(c, mut leaves) => {
                self.adj[c] &= !leaves;
                self.centers[c] += 1;
                while leaves != 0 {
                    let l = leaves.trailing_zeros() as usize;
                    self.adj[l] &= !bit(c);
                    leaves &= leaves - 1;
                }
            }
        }
        self.current.push(b);
    }

    fn undo(&mut self) {
        match self.current.pop().expect("undo without apply") {
            Raw::Pair(a, c) => {
                self.adj[a] |= bit(c);
                self.adj[c] |= bit(a);
            }
            Raw::Star(c, mut leaves) => {
                self.adj[c] |= leaves;
                self.centers[c] -= 1;
                while leaves != 0 {
                    let l = leaves.trailing_zeros() as usize;
                    self.adj[l] |= bit(c);
                    leaves &= leaves - 1;
                }
            }
        }
    }

    fn canonical_class(&self, kind: ClassKind) -> Vec<Raw> {
        match kind {
            ClassKind::OneFactor => (0..self.v)
                .step_by(2)
                .map(|a| Raw::Pair(a, a + 1))
                .collect(),
            ClassKind::StarFactor => (0..self.v)
                .step_by(self.n + 1)
                .map(|c| Raw::Star(c, ((bit(self.n) - 1) << 1) << c))
                .collect(),
        }
    }

    fn next_class(&mut self, ci: usize) -> Flow {
        if ci == self.total() {
            self.solution = Some(self.classes.clone());
            return Flow::Found;
        }
        if !self.tick() {
            return Flow::Abort;
        }
        if ci == 0 {
            let first = self.canonical_class(self.kind_of(0));
            for &b in &first {
                self.apply(b);
            }
            let flow = self.close_class(ci);
            for _ in 0..first.len() {
                self.undo();
            }
            return flow;
        }
        self.extend(ci, 0)
    }

    /// Files the current class and moves on to the next one.
    fn close_class(&mut self, ci: usize) -> Flow {
        if self.kind_of(ci) == ClassKind::StarFactor {
            let left = self.s - ci - 1;
            if self.centers.iter().any(|&c| self.x - c > left) {
                return Flow::Exhausted;
            }
        }
        let block = std::mem::take(&mut self.current);
        self.keys.push(raw_key(&block[0]));
        self.classes.push(block);
        let flow = self.next_class(ci + 1);
        self.current = self.classes.pop().expect("class pushed above");
        self.keys.pop();
        flow
    }

    /// Interchangeable classes of one kind must start with increasing
    /// vertex-0 blocks. Class 0 is canonical and exempt.
    fn ordered_after_previous(&self, ci: usize, candidate: &Raw) -> bool {
        if ci <= 1 || !self.current.is_empty() || self.kind_of(ci - 1) != self.kind_of(ci) {
            return true;
        }
        raw_key(candidate) > self.keys[ci - 1]
    }

    fn extend(&mut self, ci: usize, covered: u64) -> Flow {
        if covered == self.full {
            return self.close_class(ci);
        }
        if !self.tick() {
            return Flow::Abort;
        }
        let u = (!covered).trailing_zeros() as usize;
        let free = self.adj[u] & !covered;
        match self.kind_of(ci) {
            ClassKind::OneFactor => {
                let mut cands = free;
                while cands != 0 {
                    let c = cands.trailing_zeros() as usize;
                    cands &= cands - 1;
                    let b = Raw::Pair(u, c);
                    if !self.ordered_after_previous(ci, &b) {
                        continue;
                    }
                    self.apply(b);
                    let flow = self.extend(ci, covered | bit(u) | bit(c));
                    self.undo();
                    if !matches!(flow, Flow::Exhausted) {
                        return flow;
                    }
                }
                Flow::Exhausted
            }
            ClassKind::StarFactor => {
                let left_after = self.s - ci - 1;
                let owed = self.x - self.centers[u];
                if owed > 0 {
                    let flow = self.leaves_for(ci, covered, u, free, self.n, 0);
                    if !matches!(flow, Flow::Exhausted) {
                        return flow;
                    }
                }
                if owed <= left_after {
                    // u is a leaf of some center c > u
                    let mut cands = free;
                    while cands != 0 {
                        let c = cands.trailing_zeros() as usize;
                        cands &= cands - 1;
                        if self.centers[c] >= self.x {
                            continue;
                        }
                        let pool = self.adj[c] & !covered & !bit(u);
                        let flow = self.leaves_for(ci, covered, c, pool, self.n - 1, bit(u));
                        if !matches!(flow, Flow::Exhausted) {
                            return flow;
                        }
                    }
                }
                Flow::Exhausted
            }
        }
    }

    /// Chooses `need` more leaves for `center` from `pool`, in increasing
    /// order, then places the star.
    fn leaves_for(
        &mut self,
        ci: usize,
        covered: u64,
        center: usize,
        pool: u64,
        need: usize,
        chosen: u64,
    ) -> Flow {
        if need == 0 {
            let b = Raw::Star(center, chosen);
            if !self.ordered_after_previous(ci, &b) {
                return Flow::Exhausted;
            }
            self.apply(b);
            let flow = self.extend(ci, covered | chosen | bit(center));
            self.undo();
            return flow;
        }
        if (pool.count_ones() as usize) < need {
            return Flow::Exhausted;
        }
        if !self.tick() {
            return Flow::Abort;
        }
        let l = pool.trailing_zeros() as usize;
        let rest = pool & !bit(l);
        let flow = self.leaves_for(ci, covered, center, rest, need - 1, chosen | bit(l));
        if !matches!(flow, Flow::Exhausted) {
            return flow;
        }
        self.leaves_for(ci, covered, center, rest, need, chosen)
    }

    fn witness(&self, params: Params, classes: &[Vec<Raw>]) -> Result<Decomposition> {
        let mut ones = Vec::new();
        let mut stars = Vec::new();
        for class in classes {
            let mut blocks = Vec::with_capacity(class.len());
            let mut kind = ClassKind::OneFactor;
            for b in class {
                blocks.push(match *b {
                    Raw::Pair(a, c) => Block::edge(params.vertex_at(a), params.vertex_at(c))?,
                    Raw::Star(c, leaves) => {
                        kind = ClassKind::StarFactor;
                        Block::star(
                            params.vertex_at(c),
                            (0..self.v)
                                .filter(|&l| leaves & bit(l) != 0)
                                .map(|l| params.vertex_at(l)),
                        )?
                    }
                });
            }
            blocks.sort();
            let class = FactorClass::new(kind, blocks, &params)?;
            match kind {
                ClassKind::OneFactor => ones.push(class),
                ClassKind::StarFactor => stars.push(class),
            }
        }
        ones.extend(stars);
        Ok(Decomposition::new(params, ones))
    }
}

/// Searches for a decomposition of `K_v` into `r` one-factors and `s`
/// `n`-star factors.
///
/// Pairs failing the necessary conditions end immediately as
/// `NotFoundExhausted`. Vertices are addressed as `(base, level)`, so `v`
/// must be a multiple of `n+1`, and `v <= 64`.
pub fn exhaustive_urd(
    v: usize,
    n: usize,
    r: usize,
    s: usize,
    budget: SearchBudget,
) -> Result<SearchOutcome> {
    let start = Instant::now();
    let pairs = admissible_pairs(v, n)?;
    let Some(pair) = pairs.iter().find(|p| p.r == r && p.s == s) else {
        return Ok(SearchOutcome {
            status: SearchStatus::NotFoundExhausted,
            witness: None,
            nodes_explored: 0,
            elapsed: start.elapsed(),
            exhausted: true,
            reason: Some(format!(
                "({r}, {s}) fails the necessary conditions for v = {v}"
            )),
        });
    };
    let params = Params::new(v, n).map_err(|e| UrdError::InvalidRequest(e.to_string()))?;
    if v > MAX_SEARCH_ORDER {
        return Err(UrdError::InvalidRequest(format!(
            "v = {v} exceeds the search limit {MAX_SEARCH_ORDER}"
        )));
    }
    let full = if v == 64 { u64::MAX } else { bit(v) - 1 };
    let mut searcher = Searcher {
        v,
        n,
        r,
        s,
        x: pair.x,
        full,
        adj: (0..v).map(|i| full & !bit(i)).collect(),
        centers: vec![0; v],
        classes: Vec::new(),
        current: Vec::new(),
        keys: Vec::new(),
        nodes: 0,
        budget,
        start,
        solution: None,
    };
    let flow = searcher.next_class(0);
    let nodes_explored = searcher.nodes;
    let (status, witness, exhausted) = match flow {
        Flow::Found => {
            let classes = searcher.solution.take().expect("found sets the solution");
            let witness = searcher.witness(params, &classes)?;
            (SearchStatus::Found, Some(witness), false)
        }
        Flow::Exhausted => (SearchStatus::NotFoundExhausted, None, true),
        Flow::Abort => (SearchStatus::BudgetExceeded, None, false),
    };
    Ok(SearchOutcome {
        status,
        witness,
        nodes_explored,
        elapsed: start.elapsed(),
        exhausted,
        reason: None,
    })
}
