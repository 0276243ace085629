//! 1-factorizations of the filling graph: the level-aligned edges between
//! distinct base points plus the `m` inner complete graphs `K_{n+1}^x` on
//! `{x} x Z_{n+1}`. Both parities produce exactly `m + n - 1` classes.

use std::fmt;

use crate::error::{Result, UrdError};
use crate::model::{Edge, FactorClass, Params, Vertex};
use crate::seeds::{one_factorization, one_factorization_containing, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FillTag {
    /// Odd `m`: aligned edges symmetric about `x` plus the inner matching `B_x`.
    AlignedAbout(usize),
    /// Odd `m`: the `k`-th factor of every `K_{n+1}^x - B_x`.
    InnerRemainder(usize),
    /// Even `m`: aligned blow-up of the `k`-th factor of `K_m`.
    AlignedFactor(usize),
    /// Even `m`: the `k`-th factor of every `K_{n+1}^x`.
    InnerFactor(usize),
}

impl fmt::Display for FillTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FillTag::AlignedAbout(x) => write!(f, "A_{x}+B_{x}"),
            FillTag::InnerRemainder(k) => write!(f, "B^{k}"),
            FillTag::AlignedFactor(k) => write!(f, "A_{k}"),
            FillTag::InnerFactor(k) => write!(f, "B_{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillOutput {
    pub classes: Vec<FactorClass>,
    pub sources: Vec<FillTag>,
}

impl FillOutput {
    fn push(&mut self, tag: FillTag, edges: Vec<Edge>, params: &Params) -> Result<()> {
        let class =
            FactorClass::one_factor(edges, params).map_err(|e| UrdError::construction(tag, e))?;
        self.classes.push(class);
        self.sources.push(tag);
        Ok(())
    }
}

fn aligned(a: usize, b: usize, w: usize) -> impl Iterator<Item = Edge> {
    (0..w).map(move |i| {
        Edge::new(Vertex::new(a, i), Vertex::new(b, i)).expect("distinct base points")
    })
}

fn inner(x: usize, matching: &Matching) -> impl Iterator<Item = Edge> + '_ {
    matching.iter().map(move |&(i, j)| {
        Edge::new(Vertex::new(x, i), Vertex::new(x, j)).expect("distinct levels")
    })
}

/// The inner matching `{(i, i+1) : i even}` on `n+1` levels.
pub fn consecutive_levels(w: usize) -> Matching {
    (0..w).step_by(2).map(|i| (i, i + 1)).collect()
}

/// Odd `m`: `m` classes `A_x + B_x`, then `n - 1` classes assembled from
/// 1-factorizations of each `K_{n+1}^x - B_x`.
pub fn fill_odd(m: usize, n: usize) -> Result<FillOutput> {
    if m.is_multiple_of(2) || m < 3 {
        return Err(UrdError::InvalidParams(format!(
            "fill_odd needs odd m >= 3, got {m}"
        )));
    }
    let params = Params::from_base(m, n)?;
    let w = n + 1;
    let b_x = consecutive_levels(w);
    let mut out = FillOutput {
        classes: Vec::with_capacity(m + n - 1),
        sources: Vec::with_capacity(m + n - 1),
    };

    for x in 0..m {
        let edges = (1..=(m - 1) / 2)
            .flat_map(|j| aligned((x + m - j) % m, (x + j) % m, w))
            .chain(inner(x, &b_x))
            .collect();
        out.push(FillTag::AlignedAbout(x), edges, &params)?;
    }

    // The same completion serves every part since B_x has the same level
    // pattern at each x.
    let completion = one_factorization_containing(&b_x, w)?;
    if completion.factors[0] != b_x {
        return Err(UrdError::construction(
            "fill_odd",
            "completion does not start with B_x",
        ));
    }
    for (k, factor) in completion.factors.iter().enumerate().skip(1) {
        let edges = (0..m).flat_map(|x| inner(x, factor)).collect();
        out.push(FillTag::InnerRemainder(k), edges, &params)?;
    }
    Ok(out)
}

/// Even `m`: `m - 1` aligned blow-ups of a 1-factorization of `K_m`, then
/// `n` classes from a 1-factorization of each `K_{n+1}^x`.
pub fn fill_even(m: usize, n: usize) -> Result<FillOutput> {
    if m % 2 == 1 || m < 4 {
        return Err(UrdError::InvalidParams(format!(
            "fill_even needs even m >= 4, got {m}"
        )));
    }
    let params = Params::from_base(m, n)?;
    let w = n + 1;
    let mut out = FillOutput {
        classes: Vec::with_capacity(m + n - 1),
        sources: Vec::with_capacity(m + n - 1),
    };
    for (k, factor) in one_factorization(m)?.factors.iter().enumerate() {
        let edges = factor.iter().flat_map(|&(a, b)| aligned(a, b, w)).collect();
        out.push(FillTag::AlignedFactor(k + 1), edges, &params)?;
    }
    for (k, factor) in one_factorization(w)?.factors.iter().enumerate() {
        let edges = (0..m).flat_map(|x| inner(x, factor)).collect();
        out.push(FillTag::InnerFactor(k + 1), edges, &params)?;
    }
    Ok(out)
}

/// Dispatches on the parity of `m`.
pub fn fill(m: usize, n: usize) -> Result<FillOutput> {
    if m % 2 == 1 {
        fill_odd(m, n)
    } else {
        fill_even(m, n)
    }
}
