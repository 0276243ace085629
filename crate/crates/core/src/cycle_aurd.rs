//! Factorizations of a weighted cycle minus its level-aligned edges.
//!
//! For a weighted cycle `C` of length `m` and weight `n+1` (`n` odd), the
//! graph `C - J` has the `n (n+1) m` edges of nonzero difference. It splits
//! either into `2n` perfect matchings ([`matching_aurd`]) or into `n+1`
//! spanning `n`-star forests ([`star_aurd`]). The weighted 1-factor
//! `I_(n+1)` minus its `J` splits into `n` perfect matchings
//! ([`weighted_one_factor_aurd`]).
//!
//! All index formulas run over cycle positions `0..m` and are mapped through
//! the cycle's ordering to actual base points. Every class is validated as
//! soon as it is built; a class that fails is reported with its family tag.

use std::fmt;

use crate::blowup::{WeightedCycle, WeightedOneFactor};
use crate::error::{Result, UrdError};
use crate::model::{check_arity, Block, ClassKind, Edge, FactorClass, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Half {
    A,
    B,
}

/// The construction family that produced a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Matching families `B1` through `B11`, each split into halves.
    Matching { number: u8, half: Half },
    /// Star factor `S_j`.
    Star,
    /// Shifted matching `B_d` of a weighted 1-factor.
    Shifted,
}

/// A family plus its parameter: the difference `d`, or the level `j` for
/// star factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceTag {
    pub family: Family,
    pub index: usize,
}

impl fmt::Display for SourceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Matching { number, half } => {
                let h = if half == Half::A { 'a' } else { 'b' };
                write!(f, "B{number}{h}@d={}", self.index)
            }
            Family::Star => write!(f, "S@j={}", self.index),
            Family::Shifted => write!(f, "Bd@d={}", self.index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AurdOutput {
    pub classes: Vec<FactorClass>,
    pub sources: Vec<SourceTag>,
}

impl AurdOutput {
    fn with_capacity(n: usize) -> Self {
        AurdOutput {
            classes: Vec::with_capacity(n),
            sources: Vec::with_capacity(n),
        }
    }

    fn push_matching(&mut self, tag: SourceTag, edges: Vec<Edge>, params: &Params) -> Result<()> {
        let class =
            FactorClass::one_factor(edges, params).map_err(|e| UrdError::construction(tag, e))?;
        self.classes.push(class);
        self.sources.push(tag);
        Ok(())
    }
}

fn cycle_params(c: &WeightedCycle, n: usize) -> Result<Params> {
    check_arity(n)?;
    if c.weight() != n + 1 {
        return Err(UrdError::InvalidParams(format!(
            "cycle weight {} does not match n+1 = {}",
            c.weight(),
            n + 1
        )));
    }
    Params::from_base(c.len(), n)
}

fn levels(w: usize, half_parity: usize) -> impl Iterator<Item = usize> {
    (0..w).filter(move |i| i % 2 == half_parity)
}

fn tag(number: u8, half: Half, d: usize) -> SourceTag {
    SourceTag {
        family: Family::Matching { number, half },
        index: d,
    }
}

/// `2n` perfect matchings partitioning the nonzero-difference edges of `c`.
pub fn matching_aurd(c: &WeightedCycle, n: usize) -> Result<AurdOutput> {
    let params = cycle_params(c, n)?;
    let m = c.len();
    let w = n + 1;
    let mut out = AurdOutput::with_capacity(2 * n);

    if m.is_multiple_of(2) {
        for d in 1..=n {
            for (half, parity) in [(Half::A, 0), (Half::B, 1)] {
                let edges = if d % 2 == 1 {
                    (0..m)
                        .flat_map(|x| levels(w, parity).map(move |i| c.arc(x, i, d)))
                        .collect()
                } else {
                    (0..m)
                        .step_by(2)
                        .flat_map(|x| {
                            levels(w, parity)
                                .flat_map(move |i| [c.arc(x, i, d), c.arc(x + 1, i + 1, d)])
                        })
                        .collect()
                };
                let number = if d % 2 == 1 { 1 } else { 2 };
                out.push_matching(tag(number, half, d), edges, &params)?;
            }
        }
    } else if w % 4 == 2 {
        for d in 1..=n {
            match d % 4 {
                3 => mixed_triple(c, d, 3, &params, &mut out)?,
                1 => plain_pair(c, d, 6, &params, &mut out)?,
                _ => {}
            }
        }
    } else {
        assert_eq!(w % 4, 0, "n odd forces n+1 = 0 or 2 mod 4");
        for d in 1..=n {
            if d == 2 {
                for (half, residue) in [(Half::A, 0), (Half::B, 2)] {
                    let edges = (0..m)
                        .flat_map(|x| {
                            (0..w)
                                .filter(move |i| i % 4 == residue)
                                .flat_map(move |i| [c.arc(x, i, 2), c.arc(x, i + 1, 2)])
                        })
                        .collect();
                    out.push_matching(tag(7, half, 2), edges, &params)?;
                }
            } else if d % 4 == 1 && d != 1 {
                mixed_triple(c, d, 8, &params, &mut out)?;
            } else if d % 2 == 1 {
                plain_pair(c, d, 11, &params, &mut out)?;
            }
        }
    }

    if out.classes.len() != 2 * n {
        return Err(UrdError::construction(
            "matching_aurd",
            format!("produced {} classes, expected {}", out.classes.len(), 2 * n),
        ));
    }
    Ok(out)
}

/// All difference-`d` edges, split by level parity. Half `a` takes odd
/// levels, half `b` even levels.
fn plain_pair(
    c: &WeightedCycle,
    d: usize,
    number: u8,
    params: &Params,
    out: &mut AurdOutput,
) -> Result<()> {
    let m = c.len();
    let w = c.weight();
    for (half, parity) in [(Half::A, 1), (Half::B, 0)] {
        let edges = (0..m)
            .flat_map(|x| levels(w, parity).map(move |i| c.arc(x, i, d)))
            .collect();
        out.push_matching(tag(number, half, d), edges, params)?;
    }
    Ok(())
}

/// Six matchings covering differences `d-1`, `d`, `d+1` on an odd cycle.
///
/// Family `first` puts difference `d` at position 0 and `d-1` on positions
/// `1..m`; family `first+1` puts `d` at position 1 and `d+1` on the rest;
/// family `first+2` puts `d-1` at position 0, `d+1` at position 1 and `d`
/// on positions `2..m`.
fn mixed_triple(
    c: &WeightedCycle,
    d: usize,
    first: u8,
    params: &Params,
    out: &mut AurdOutput,
) -> Result<()> {
    let m = c.len();
    let w = c.weight();
    for (half, parity) in [(Half::A, 0), (Half::B, 1)] {
        let low: Vec<Edge> = levels(w, parity)
            .flat_map(|i| {
                std::iter::once(c.arc(0, i, d)).chain(
                    (1..m)
                        .step_by(2)
                        .flat_map(move |x| [c.arc(x, i, d - 1), c.arc(x + 1, i + 1, d - 1)]),
                )
            })
            .collect();
        out.push_matching(tag(first, half, d), low, params)?;
    }
    for (half, parity) in [(Half::A, 0), (Half::B, 1)] {
        let high: Vec<Edge> = levels(w, parity)
            .flat_map(|i| {
                std::iter::once(c.arc(1, i, d)).chain(
                    (2..m)
                        .step_by(2)
                        .flat_map(move |x| [c.arc(x, i, d + 1), c.arc(x + 1, i + 1, d + 1)]),
                )
            })
            .collect();
        out.push_matching(tag(first + 1, half, d), high, params)?;
    }
    for (half, parity) in [(Half::A, 0), (Half::B, 1)] {
        let middle: Vec<Edge> = levels(w, parity)
            .flat_map(|i| {
                [c.arc(0, i, d - 1), c.arc(1, i + 1, d + 1)]
                    .into_iter()
                    .chain((2..m).map(move |x| c.arc(x, i, d)))
            })
            .collect();
        out.push_matching(tag(first + 2, half, d), middle, params)?;
    }
    Ok(())
}

/// `n+1` star factors: `S_j` has, for each position `x`, the star centered
/// at `(x, j)` with leaves `(x+1, j+1), ..., (x+1, j+n)`.
pub fn star_aurd(c: &WeightedCycle, n: usize) -> Result<AurdOutput> {
    let params = cycle_params(c, n)?;
    let m = c.len();
    let mut out = AurdOutput::with_capacity(n + 1);
    for j in 0..=n {
        let source = SourceTag {
            family: Family::Star,
            index: j,
        };
        let blocks = (0..m)
            .map(|x| Block::star(c.vertex(x, j), (1..=n).map(|k| c.vertex(x + 1, j + k))))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| UrdError::construction(source, e))?;
        let class = FactorClass::new(ClassKind::StarFactor, blocks, &params)
            .map_err(|e| UrdError::construction(source, e))?;
        out.classes.push(class);
        out.sources.push(source);
    }
    Ok(out)
}

/// `n` perfect matchings `B_d = {(x, i), (y, i+d)}`, `d = 1..=n`, over the
/// base pairs `x < y` of the weighted 1-factor.
pub fn weighted_one_factor_aurd(wf: &WeightedOneFactor, n: usize) -> Result<AurdOutput> {
    check_arity(n)?;
    if wf.weight() != n + 1 {
        return Err(UrdError::InvalidParams(format!(
            "weight {} does not match n+1 = {}",
            wf.weight(),
            n + 1
        )));
    }
    let m = 2 * wf.base_matching().len();
    let params = Params::from_base(m, n)?;
    let mut out = AurdOutput::with_capacity(n);
    for d in 1..=n {
        let edges = wf
            .base_matching()
            .iter()
            .flat_map(|&pair| (0..=n).map(move |i| wf.shifted(pair, i, d)))
            .collect();
        let source = SourceTag {
            family: Family::Shifted,
            index: d,
        };
        out.push_matching(source, edges, &params)?;
    }
    Ok(out)
}
