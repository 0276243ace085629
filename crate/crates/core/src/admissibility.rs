//! Necessary conditions on `(r, s)` and the subset of pairs reached by the
//! cycle constructions.
//!
//! Counting edges gives `(n+1) r + 2 n s = (n+1)(v-1)`. Counting the star
//! factors in which a fixed vertex is a center shows `s = (n+1) x` and
//! `r = v - 1 - 2 n x` for some `0 <= x <= floor((v-1) / 2n)`.

use std::fmt;

use crate::error::{Result, UrdError};
use crate::model::check_arity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissiblePair {
    pub r: usize,
    pub s: usize,
    /// Number of star factors in which any fixed vertex is a center.
    pub x: usize,
}

impl AdmissiblePair {
    /// The counting identity `(n+1) r + 2 n s = (n+1)(v-1)`.
    pub fn satisfies_edge_count(&self, v: usize, n: usize) -> bool {
        edge_count_holds(v, n, self.r, self.s)
    }
}

pub fn edge_count_holds(v: usize, n: usize, r: usize, s: usize) -> bool {
    v >= 1 && (n + 1) * r + 2 * n * s == (n + 1) * (v - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverageStatus {
    Constructive,
    AdmissibleUnresolved,
    Inadmissible,
}

impl fmt::Display for CoverageStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverageStatus::Constructive => "CONSTRUCTIVE",
            CoverageStatus::AdmissibleUnresolved => "ADMISSIBLE_UNRESOLVED",
            CoverageStatus::Inadmissible => "INADMISSIBLE",
        })
    }
}

/// Whether a pair is reached by a construction, admissible but not reached,
/// or ruled out. `AdmissibleUnresolved` makes no claim of nonexistence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverageVerdict {
    pub status: CoverageStatus,
    pub reason: String,
    /// Number of matching-decomposed cycles realizing the pair; set only for
    /// `Constructive`.
    pub ell: Option<usize>,
}

impl fmt::Display for CoverageVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(ell) = self.ell {
            write!(f, " (ell={ell})")?;
        }
        write!(f, ": {}", self.reason)
    }
}

/// All `(r, s)` pairs allowed by the necessary conditions, in increasing `x`.
pub fn admissible_pairs(v: usize, n: usize) -> Result<Vec<AdmissiblePair>> {
    check_arity(n)?;
    check_order(v)?;
    let max_x = (v - 1) / (2 * n);
    Ok((0..=max_x)
        .map(|x| AdmissiblePair {
            r: v - 1 - 2 * n * x,
            s: (n + 1) * x,
            x,
        })
        .filter(|p| !(p.r > 0 && v % 2 == 1))
        .filter(|p| !(p.s > 0 && !v.is_multiple_of(n + 1)))
        .collect())
}

/// Smallest `r` the constructions produce for base order `m`.
pub fn threshold(m: usize, n: usize) -> usize {
    if m % 2 == 1 {
        m + n - 1
    } else {
        m + 2 * n - 1
    }
}

/// Largest number of base cycles, and hence the largest `ell`.
pub fn max_ell(m: usize) -> usize {
    if m % 2 == 1 {
        (m - 1) / 2
    } else {
        (m - 2) / 2
    }
}

/// `(r, s)` produced by the assembly for `v = m(n+1)` and a given `ell`.
pub fn pair_for_ell(m: usize, n: usize, ell: usize) -> (usize, usize) {
    let r = 2 * n * ell + threshold(m, n);
    let s = (n + 1) * (max_ell(m) - ell);
    (r, s)
}

pub fn check_pair(v: usize, n: usize, r: usize, s: usize) -> Result<CoverageVerdict> {
    let pairs = admissible_pairs(v, n)?;
    if !pairs.iter().any(|p| p.r == r && p.s == s) {
        let reason = if !edge_count_holds(v, n, r, s) {
            format!(
                "(n+1)r + 2ns = {} != (n+1)(v-1) = {}",
                (n + 1) * r + 2 * n * s,
                (n + 1) * (v - 1)
            )
        } else if !s.is_multiple_of(n + 1) {
            format!("s = {s} is not a multiple of n+1 = {}", n + 1)
        } else if r > 0 && v % 2 == 1 {
            format!("r = {r} > 0 requires even v")
        } else {
            format!("s = {s} > 0 requires (n+1) | v")
        };
        return Ok(CoverageVerdict {
            status: CoverageStatus::Inadmissible,
            reason,
            ell: None,
        });
    }

    let unresolved = |reason: String| {
        Ok(CoverageVerdict {
            status: CoverageStatus::AdmissibleUnresolved,
            reason,
            ell: None,
        })
    };
    if !v.is_multiple_of(n + 1) {
        return unresolved(format!("v is not a multiple of n+1 = {}", n + 1));
    }
    let m = v / (n + 1);
    if m < 3 {
        return unresolved(format!("m = {m} < 3: the cycle construction needs m >= 3"));
    }
    let t = threshold(m, n);
    if r < t {
        return unresolved(format!(
            "r = {r} is below the construction threshold {t} for m = {m}"
        ));
    }
    if !(r - t).is_multiple_of(2 * n) {
        return unresolved(format!("r - {t} is not a multiple of 2n = {}", 2 * n));
    }
    let ell = (r - t) / (2 * n);
    if ell > max_ell(m) {
        return unresolved(format!(
            "ell = {ell} exceeds the {} available cycles",
            max_ell(m)
        ));
    }
    Ok(CoverageVerdict {
        status: CoverageStatus::Constructive,
        reason: format!("m = {m}, threshold {t}, ell = {ell}"),
        ell: Some(ell),
    })
}

/// One pair per `ell`, computed from the construction formulas.
pub fn constructive_pairs(v: usize, n: usize) -> Result<Vec<(AdmissiblePair, usize)>> {
    check_arity(n)?;
    check_order(v)?;
    if !v.is_multiple_of(n + 1) || v / (n + 1) < 3 {
        return Err(UrdError::InvalidParams(format!(
            "v = {v} must equal m(n+1) with m >= 3"
        )));
    }
    let m = v / (n + 1);
    Ok((0..=max_ell(m))
        .map(|ell| {
            let (r, s) = pair_for_ell(m, n, ell);
            (
                AdmissiblePair {
                    r,
                    s,
                    x: s / (n + 1),
                },
                ell,
            )
        })
        .collect())
}

fn check_order(v: usize) -> Result<()> {
    if v == 0 {
        return Err(UrdError::InvalidParams("v must be positive".into()));
    }
    Ok(())
}
