//! Assembly of a full decomposition of `K_v`, `v = m(n+1)`, `m >= 3`.
//!
//! `K_m` is split into Hamiltonian cycles (plus a perfect matching when `m`
//! is even). The first `ell` weighted cycles are split into `2n` matchings
//! each, the remaining ones into `n+1` star factors each. For even `m` the
//! weighted matching contributes `n` more matchings. The filling adds
//! `m + n - 1` matchings.

use crate::admissibility::{check_pair, max_ell, pair_for_ell, CoverageStatus};
use crate::blowup::{WeightedCycle, WeightedOneFactor};
use crate::cycle_aurd::{matching_aurd, star_aurd, weighted_one_factor_aurd};
use crate::error::{Result, UrdError};
use crate::filling::fill;
use crate::model::{ClassKind, Decomposition, FactorClass, Params};
use crate::seeds::hamiltonian_decomposition;
use crate::verifier::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BuildRequest {
    pub v: usize,
    pub n: usize,
    /// Number of weighted cycles split into matchings.
    pub ell: usize,
}

impl BuildRequest {
    pub fn new(v: usize, n: usize, ell: usize) -> Self {
        BuildRequest { v, n, ell }
    }

    fn validate(&self) -> Result<Params> {
        let params =
            Params::new(self.v, self.n).map_err(|e| UrdError::InvalidRequest(e.to_string()))?;
        let m = params.m();
        if m < 3 {
            return Err(UrdError::InvalidRequest(format!(
                "m = {m} < 3: no base cycle exists"
            )));
        }
        if self.ell > max_ell(m) {
            return Err(UrdError::InvalidRequest(format!(
                "ell = {} exceeds {} for m = {m}",
                self.ell,
                max_ell(m)
            )));
        }
        Ok(params)
    }
}

/// Builds and self-verifies the decomposition for `req`. One-factors come
/// first, star factors after.
pub fn construct(req: &BuildRequest) -> Result<Decomposition> {
    let params = req.validate()?;
    let (m, n, w) = (params.m(), params.n(), params.weight());

    let ham = hamiltonian_decomposition(m)?;
    let mut matchings: Vec<FactorClass> = Vec::new();
    let mut stars: Vec<FactorClass> = Vec::new();
    for (k, base) in ham.cycles.into_iter().enumerate() {
        let cycle = WeightedCycle::new(base, w)?;
        if k < req.ell {
            matchings.extend(matching_aurd(&cycle, n)?.classes);
        } else {
            stars.extend(star_aurd(&cycle, n)?.classes);
        }
    }
    if let Some(matching) = ham.leftover_matching {
        let wf = WeightedOneFactor::new(matching, m, w)?;
        matchings.extend(weighted_one_factor_aurd(&wf, n)?.classes);
    }
    matchings.extend(fill(m, n)?.classes);

    let (r, s) = pair_for_ell(m, n, req.ell);
    if matchings.len() != r || stars.len() != s {
        return Err(UrdError::construction(
            "assembly",
            format!(
                "got ({}, {}) classes, expected ({r}, {s})",
                matchings.len(),
                stars.len()
            ),
        ));
    }
    debug_assert!(stars.iter().all(|c| c.kind() == ClassKind::StarFactor));
    matchings.extend(stars);
    let decomposition = Decomposition::new(params, matchings);

    let report = verify(&decomposition);
    if !report.passed {
        let first = report
            .violations
            .first()
            .map(ToString::to_string)
            .unwrap_or_default();
        return Err(UrdError::construction("assembly", first));
    }
    Ok(decomposition)
}

/// Builds the decomposition with exactly `r` one-factors and `s` star
/// factors, if the pair is reached by the construction.
pub fn construct_pair(v: usize, n: usize, r: usize, s: usize) -> Result<Decomposition> {
    let verdict = check_pair(v, n, r, s).map_err(|e| UrdError::InvalidRequest(e.to_string()))?;
    match (verdict.status, verdict.ell) {
        (CoverageStatus::Constructive, Some(ell)) => construct(&BuildRequest::new(v, n, ell)),
        _ => Err(UrdError::Rejected(verdict)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v12_ell0() {
        let d = construct(&BuildRequest::new(12, 3, 0)).unwrap();
        assert_eq!((d.r(), d.s()), (5, 4));
        let (ones, stars) = d.classes().split_at(5);
        assert!(ones
            .iter()
            .all(|c| c.kind() == ClassKind::OneFactor && c.blocks().len() == 6));
        assert!(stars
            .iter()
            .all(|c| c.kind() == ClassKind::StarFactor && c.blocks().len() == 3));
        assert_eq!(
            d.classes().iter().map(|c| c.edges().count()).sum::<usize>(),
            66
        );
    }

    #[test]
    fn formula_examples() {
        let d = construct(&BuildRequest::new(16, 3, 1)).unwrap();
        assert_eq!((d.r(), d.s()), (15, 0));
        let d = construct(&BuildRequest::new(20, 3, 1)).unwrap();
        assert_eq!((d.r(), d.s()), (13, 4));
    }

    #[test]
    fn pair_requests() {
        let d = construct_pair(12, 3, 5, 4).unwrap();
        assert_eq!(d, construct(&BuildRequest::new(12, 3, 0)).unwrap());
        match construct_pair(12, 3, 4, 4) {
            Err(UrdError::Rejected(v)) => assert_eq!(v.status, CoverageStatus::Inadmissible),
            other => panic!("{other:?}"),
        }
        match construct_pair(8, 3, 1, 4) {
            Err(UrdError::Rejected(v)) => {
                assert_eq!(v.status, CoverageStatus::AdmissibleUnresolved)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn invalid_requests() {
        assert!(matches!(
            construct(&BuildRequest::new(12, 3, 2)),
            Err(UrdError::InvalidRequest(_))
        ));
        assert!(construct(&BuildRequest::new(8, 3, 0)).is_err());
        assert!(construct(&BuildRequest::new(12, 4, 0)).is_err());
        assert!(construct(&BuildRequest::new(13, 3, 0)).is_err());
    }

    #[test]
    fn deterministic() {
        let req = BuildRequest::new(24, 5, 1);
        assert_eq!(construct(&req).unwrap(), construct(&req).unwrap());
    }
}
