//! Certificate checker for decompositions of `K_v` and of AURD hosts.
//!
//! Nothing here calls into the constructions. `E(K_v)` is rebuilt as the set
//! of all vertex pairs and every class is audited from its blocks alone.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::model::{Block, ClassKind, Decomposition, Edge, FactorClass, Params, Vertex};

/// Largest vertex universe the checker will allocate for.
pub const MAX_VERTICES: usize = 4096;

/// Detailed violations kept per code; the rest are summarized.
const DETAIL_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationCode {
    DuplicateEdge,
    MissingEdge,
    ExtraEdge,
    NotSpanning,
    NotDisjoint,
    WrongKind,
    CountMismatch,
    ParamMismatch,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::DuplicateEdge => "DUPLICATE_EDGE",
            ViolationCode::MissingEdge => "MISSING_EDGE",
            ViolationCode::ExtraEdge => "EXTRA_EDGE",
            ViolationCode::NotSpanning => "NOT_SPANNING",
            ViolationCode::NotDisjoint => "NOT_DISJOINT",
            ViolationCode::WrongKind => "WRONG_KIND",
            ViolationCode::CountMismatch => "COUNT_MISMATCH",
            ViolationCode::ParamMismatch => "PARAM_MISMATCH",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub fn codes(&self) -> BTreeSet<ViolationCode> {
        self.violations.iter().map(|v| v.code).collect()
    }
}

#[derive(Default)]
struct Collector {
    violations: Vec<Violation>,
    overflow: BTreeMap<ViolationCode, usize>,
    kept: BTreeMap<ViolationCode, usize>,
}

impl Collector {
    fn push(&mut self, code: ViolationCode, detail: impl Into<String>) {
        let kept = self.kept.entry(code).or_default();
        if *kept < DETAIL_CAP {
            *kept += 1;
            self.violations.push(Violation {
                code,
                detail: detail.into(),
            });
        } else {
            *self.overflow.entry(code).or_default() += 1;
        }
    }

    fn finish(mut self) -> VerificationReport {
        for (code, more) in self.overflow {
            self.violations.push(Violation {
                code,
                detail: format!("... and {more} more"),
            });
        }
        VerificationReport {
            passed: self.violations.is_empty(),
            violations: self.violations,
        }
    }
}

/// Vertex universe `[0, m) x [0, n+1)` taken from the parameters as given.
struct Universe {
    m: usize,
    w: usize,
    n: usize,
}

impl Universe {
    fn size(&self) -> usize {
        self.m * self.w
    }

    fn index(&self, x: Vertex) -> Option<usize> {
        (x.base() < self.m && x.level() < self.w).then(|| x.base() * self.w + x.level())
    }

    fn vertex(&self, i: usize) -> Vertex {
        Vertex::new(i / self.w, i % self.w)
    }
}

/// Per-class checks: uniform kind, star arity, disjointness, spanning,
/// block count. Returns the star centers seen in a star class.
fn audit_class(ci: usize, class: &FactorClass, uni: &Universe, out: &mut Collector) -> Vec<usize> {
    let expected_kind = class.kind().block_kind();
    let mut wrong_kind = 0;
    let mut bad_arity = 0;
    let mut centers = Vec::new();
    let mut hits = vec![0u32; uni.size()];
    for block in class.blocks() {
        if block.kind() != expected_kind {
            wrong_kind += 1;
        }
        if let Block::Star(s) = block {
            if s.arity() != uni.n {
                bad_arity += 1;
            }
            if class.kind() == ClassKind::StarFactor {
                if let Some(c) = uni.index(s.center()) {
                    centers.push(c);
                }
            }
        }
        for x in block.vertices() {
            match uni.index(x) {
                Some(i) => hits[i] += 1,
                None => out.push(
                    ViolationCode::NotSpanning,
                    format!("class {ci}: vertex {x} is outside the vertex set"),
                ),
            }
        }
    }
    if wrong_kind > 0 {
        out.push(
            ViolationCode::WrongKind,
            format!(
                "class {ci} ({}): {wrong_kind} blocks of the wrong kind",
                class.kind()
            ),
        );
    }
    if bad_arity > 0 {
        out.push(
            ViolationCode::WrongKind,
            format!(
                "class {ci}: {bad_arity} stars without exactly {} leaves",
                uni.n
            ),
        );
    }
    let repeated: Vec<_> = (0..hits.len()).filter(|&i| hits[i] > 1).collect();
    if !repeated.is_empty() {
        out.push(
            ViolationCode::NotDisjoint,
            format!(
                "class {ci}: {} vertices in more than one block, first {}",
                repeated.len(),
                uni.vertex(repeated[0])
            ),
        );
    }
    let uncovered: Vec<_> = (0..hits.len()).filter(|&i| hits[i] == 0).collect();
    if !uncovered.is_empty() {
        out.push(
            ViolationCode::NotSpanning,
            format!(
                "class {ci}: {} vertices uncovered, first {}",
                uncovered.len(),
                uni.vertex(uncovered[0])
            ),
        );
    }
    let expected_blocks = match class.kind() {
        ClassKind::OneFactor => uni.size() / 2,
        ClassKind::StarFactor => uni.m,
    };
    if class.blocks().len() != expected_blocks {
        out.push(
            ViolationCode::CountMismatch,
            format!(
                "class {ci}: {} blocks, expected {expected_blocks}",
                class.blocks().len()
            ),
        );
    }
    centers
}

/// Audits a claimed decomposition of `K_v`.
pub fn verify(d: &Decomposition) -> VerificationReport {
    let mut out = Collector::default();
    let p = d.params();
    if !p.is_consistent() {
        out.push(
            ViolationCode::ParamMismatch,
            format!(
                "v = {}, n = {}, m = {}: need n odd >= 3 and v = m(n+1)",
                p.v(),
                p.n(),
                p.m()
            ),
        );
    }
    let uni = Universe {
        m: p.m(),
        w: p.n() + 1,
        n: p.n(),
    };
    let size = uni.size();
    if !(2..=MAX_VERTICES).contains(&size) {
        out.push(
            ViolationCode::ParamMismatch,
            format!("vertex set of size {size} is outside 2..={MAX_VERTICES}"),
        );
        return out.finish();
    }

    let tri = |a: usize, b: usize| b * (b - 1) / 2 + a;
    let mut multiplicity = vec![0u32; size * (size - 1) / 2];
    let mut centers = vec![0usize; size];
    let (mut r, mut s) = (0, 0);

    for (ci, class) in d.classes().iter().enumerate() {
        match class.kind() {
            ClassKind::OneFactor => r += 1,
            ClassKind::StarFactor => s += 1,
        }
        for c in audit_class(ci, class, &uni, &mut out) {
            centers[c] += 1;
        }
        for e in class.edges() {
            let (a, b) = e.endpoints();
            match (uni.index(a), uni.index(b)) {
                (Some(i), Some(j)) => multiplicity[tri(i.min(j), i.max(j))] += 1,
                _ => out.push(
                    ViolationCode::ExtraEdge,
                    format!("class {ci}: edge {e} leaves the vertex set"),
                ),
            }
        }
    }

    for j in 1..size {
        for i in 0..j {
            match multiplicity[tri(i, j)] {
                1 => {}
                0 => out.push(
                    ViolationCode::MissingEdge,
                    format!("edge {}-{} is in no class", uni.vertex(i), uni.vertex(j)),
                ),
                k => out.push(
                    ViolationCode::DuplicateEdge,
                    format!("edge {}-{} is in {k} classes", uni.vertex(i), uni.vertex(j)),
                ),
            }
        }
    }

    if d.r() != r || d.s() != s {
        out.push(
            ViolationCode::CountMismatch,
            format!(
                "recorded (r, s) = ({}, {}), classes give ({r}, {s})",
                d.r(),
                d.s()
            ),
        );
    }
    let v = p.v();
    let n = p.n();
    if v >= 1 && (n + 1) * r + 2 * n * s != (n + 1) * (v - 1) {
        out.push(
            ViolationCode::CountMismatch,
            format!(
                "(n+1)r + 2ns = {} != (n+1)(v-1) = {}",
                (n + 1) * r + 2 * n * s,
                (n + 1) * (v - 1)
            ),
        );
    }
    if s % (n + 1) != 0 {
        out.push(
            ViolationCode::CountMismatch,
            format!("s = {s} is not a multiple of n+1"),
        );
    } else {
        let x = s / (n + 1);
        let off: Vec<_> = (0..size).filter(|&i| centers[i] != x).collect();
        if !off.is_empty() {
            out.push(
                ViolationCode::CountMismatch,
                format!(
                    "{} vertices are star centers a number of times other than {x}, first {} ({} times)",
                    off.len(),
                    uni.vertex(off[0]),
                    centers[off[0]]
                ),
            );
        }
    }
    out.finish()
}

/// Audits classes that should edge-partition `host_edges`, each class
/// spanning the vertex set of `params`.
pub fn verify_aurd(
    classes: &[FactorClass],
    host_edges: &BTreeSet<Edge>,
    params: &Params,
) -> VerificationReport {
    let mut out = Collector::default();
    let uni = Universe {
        m: params.m(),
        w: params.n() + 1,
        n: params.n(),
    };
    if uni.size() > MAX_VERTICES {
        out.push(ViolationCode::ParamMismatch, "vertex set too large");
        return out.finish();
    }
    let mut multiplicity: BTreeMap<Edge, u32> = BTreeMap::new();
    for (ci, class) in classes.iter().enumerate() {
        audit_class(ci, class, &uni, &mut out);
        for e in class.edges() {
            *multiplicity.entry(e).or_default() += 1;
        }
    }
    for (e, &k) in &multiplicity {
        if !host_edges.contains(e) {
            out.push(
                ViolationCode::ExtraEdge,
                format!("edge {e} is not a host edge"),
            );
        } else if k > 1 {
            out.push(
                ViolationCode::DuplicateEdge,
                format!("edge {e} is in {k} classes"),
            );
        }
    }
    for e in host_edges {
        if !multiplicity.contains_key(e) {
            out.push(
                ViolationCode::MissingEdge,
                format!("host edge {e} is in no class"),
            );
        }
    }
    out.finish()
}
