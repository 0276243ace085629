//! Hamiltonian decompositions of `K_m` and 1-factorizations of `K_k`.
//!
//! Both are classical: the Hamiltonian cycles come from Walecki's zig-zag
//! paths, the 1-factorizations from the round-robin (circle) method.

use std::collections::BTreeSet;

use crate::error::{Result, UrdError};

/// A perfect matching on points `0..k`, each pair as `(low, high)`, sorted.
pub type Matching = Vec<(usize, usize)>;

/// A Hamiltonian cycle of `K_m`, given as a cyclic ordering of `0..m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseCycle {
    order: Vec<usize>,
}

impl BaseCycle {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let m = order.len();
        if m < 3 {
            return Err(UrdError::InvalidParams(format!("cycle of length {m} < 3")));
        }
        let mut seen = vec![false; m];
        for &p in &order {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(UrdError::InvalidParams(format!(
                    "cycle order {order:?} is not a permutation of 0..{m}"
                )));
            }
        }
        Ok(BaseCycle { order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Base point at a cycle position, wrapping around.
    pub fn at(&self, position: usize) -> usize {
        self.order[position % self.order.len()]
    }

    /// The `m` edges of the cycle, each as `(low, high)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .map(|p| ordered(self.at(p), self.at(p + 1)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamDecomposition {
    pub cycles: Vec<BaseCycle>,
    /// Present exactly when `m` is even.
    pub leftover_matching: Option<Matching>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactorization {
    pub k: usize,
    pub factors: Vec<Matching>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// `j, j+1, j-1, j+2, j-2, ...` on `Z_q` for even `q`: a Hamiltonian path
/// of `K_q`. The paths for `j = 0..q/2` partition `E(K_q)`.
fn zigzag(j: usize, q: usize) -> Vec<usize> {
    let mut path = Vec::with_capacity(q);
    path.push(j % q);
    let mut t = 1;
    while path.len() < q {
        path.push((j + t) % q);
        if path.len() < q {
            path.push((j + q - t) % q);
        }
        t += 1;
    }
    path
}

fn circular_distance(a: usize, b: usize, q: usize) -> usize {
    let d = (a + q - b) % q;
    d.min(q - d)
}

/// Decomposes `K_m` into `(m-1)/2` Hamiltonian cycles (odd `m`), or into
/// `(m-2)/2` Hamiltonian cycles and a perfect matching (even `m`).
pub fn hamiltonian_decomposition(m: usize) -> Result<HamDecomposition> {
    if m < 3 {
        return Err(UrdError::InvalidParams(format!("m = {m} < 3")));
    }
    if m % 2 == 1 {
        // Walecki: zig-zag paths on Z_{m-1}, closed through the point m-1.
        let q = m - 1;
        let cycles = (0..q / 2)
            .map(|j| {
                let mut order = zigzag(j, q);
                order.push(q);
                BaseCycle::new(order)
            })
            .collect::<Result<_>>()?;
        return Ok(HamDecomposition {
            cycles,
            leftover_matching: None,
        });
    }

    // Even m: zig-zag paths on Z_{m-2} closed through `alpha`, with `beta`
    // spliced into each path's unique diameter edge. The diameters together
    // with {alpha, beta} are the leftover perfect matching.
    let q = m - 2;
    let alpha = m - 2;
    let beta = m - 1;
    let mut cycles = Vec::with_capacity(q / 2);
    let mut matching = vec![(alpha, beta)];
    for j in 0..q / 2 {
        let path = zigzag(j, q);
        let cut = (0..q - 1)
            .find(|&t| circular_distance(path[t], path[t + 1], q) == q / 2)
            .expect("every zig-zag path crosses exactly one diameter");
        matching.push(ordered(path[cut], path[cut + 1]));
        let mut order = Vec::with_capacity(m);
        order.extend_from_slice(&path[..=cut]);
        order.push(beta);
        order.extend_from_slice(&path[cut + 1..]);
        order.push(alpha);
        cycles.push(BaseCycle::new(order)?);
    }
    matching.sort_unstable();
    Ok(HamDecomposition {
        cycles,
        leftover_matching: Some(matching),
    })
}

/// Round-robin 1-factorization of `K_k`, factors sorted by the partner of 0.
pub fn one_factorization(k: usize) -> Result<OneFactorization> {
    if k < 2 || k % 2 == 1 {
        return Err(UrdError::InvalidParams(format!(
            "k = {k} must be a positive even integer"
        )));
    }
    let fixed = k - 1;
    let q = k - 1;
    let mut factors: Vec<Matching> = (0..q)
        .map(|r| {
            let mut f: Matching = vec![ordered(r, fixed)];
            f.extend((1..=(k - 2) / 2).map(|t| ordered((r + t) % q, (r + q - t) % q)));
            f.sort_unstable();
            f
        })
        .collect();
    factors.sort();
    Ok(OneFactorization { k, factors })
}

fn check_matching(matching: &[(usize, usize)], k: usize) -> Result<Matching> {
    let mut seen = vec![false; k];
    for &(a, b) in matching {
        if a == b || a >= k || b >= k || seen[a] || seen[b] {
            return Err(UrdError::InvalidParams(format!(
                "{matching:?} is not a perfect matching on {k} points"
            )));
        }
        seen[a] = true;
        seen[b] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(UrdError::InvalidParams(format!(
            "{matching:?} does not cover all {k} points"
        )));
    }
    let mut normalized: Matching = matching.iter().map(|&(a, b)| ordered(a, b)).collect();
    normalized.sort_unstable();
    Ok(normalized)
}

/// A 1-factorization of `K_k` whose first factor is `prescribed`.
///
/// Relabels [`one_factorization`] by a point bijection that carries its
/// first factor onto `prescribed`.
pub fn one_factorization_containing(
    prescribed: &[(usize, usize)],
    k: usize,
) -> Result<OneFactorization> {
    if k % 2 == 1 || k < 2 {
        return Err(UrdError::InvalidParams(format!(
            "k = {k} must be a positive even integer"
        )));
    }
    let target = check_matching(prescribed, k)?;
    let standard = one_factorization(k)?;
    let mut relabel = vec![0; k];
    for (&(a, b), &(c, d)) in standard.factors[0].iter().zip(&target) {
        relabel[a] = c;
        relabel[b] = d;
    }
    let factors = standard
        .factors
        .iter()
        .map(|f| {
            let mut g: Matching = f
                .iter()
                .map(|&(a, b)| ordered(relabel[a], relabel[b]))
                .collect();
            g.sort_unstable();
            g
        })
        .collect();
    Ok(OneFactorization { k, factors })
}

/// Every pair `(a, b)`, `a < b < k`.
pub fn all_pairs(k: usize) -> BTreeSet<(usize, usize)> {
    (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_partition(parts: &[Vec<(usize, usize)>], k: usize) {
        let mut seen = BTreeSet::new();
        for part in parts {
            for &e in part {
                assert!(seen.insert(e), "edge {e:?} repeated");
            }
        }
        assert_eq!(seen, all_pairs(k));
    }

    #[test]
    fn hamiltonian_small_cases() {
        let h = hamiltonian_decomposition(3).unwrap();
        assert_eq!(h.cycles.len(), 1);
        assert_eq!(h.cycles[0].order(), &[0, 1, 2]);
        assert!(h.leftover_matching.is_none());

        let h = hamiltonian_decomposition(5).unwrap();
        assert_eq!(h.cycles.len(), 2);
        let parts: Vec<_> = h.cycles.iter().map(BaseCycle::edges).collect();
        assert_partition(&parts, 5);

        let h = hamiltonian_decomposition(4).unwrap();
        assert_eq!(h.cycles.len(), 1);
        let matching = h.leftover_matching.clone().unwrap();
        assert_eq!(matching.len(), 2);
        let mut parts: Vec<_> = h.cycles.iter().map(BaseCycle::edges).collect();
        parts.push(matching);
        assert_partition(&parts, 4);

        assert!(hamiltonian_decomposition(2).is_err());
    }

    #[test]
    fn hamiltonian_partitions_up_to_12() {
        for m in 3..=12 {
            let h = hamiltonian_decomposition(m).unwrap();
            let expected = if m % 2 == 1 { (m - 1) / 2 } else { (m - 2) / 2 };
            assert_eq!(h.cycles.len(), expected, "m={m}");
            assert_eq!(h.leftover_matching.is_some(), m % 2 == 0);
            let mut parts: Vec<_> = h.cycles.iter().map(BaseCycle::edges).collect();
            if let Some(mm) = &h.leftover_matching {
                check_matching(mm, m).unwrap();
                parts.push(mm.clone());
            }
            assert_partition(&parts, m);
            assert_eq!(h, hamiltonian_decomposition(m).unwrap());
        }
    }

    #[test]
    fn one_factorization_examples() {
        assert_eq!(one_factorization(2).unwrap().factors, vec![vec![(0, 1)]]);
        assert_eq!(
            one_factorization(4).unwrap().factors,
            vec![
                vec![(0, 1), (2, 3)],
                vec![(0, 2), (1, 3)],
                vec![(0, 3), (1, 2)]
            ]
        );
        let f6 = one_factorization(6).unwrap();
        assert_eq!(f6.factors.len(), 5);
        assert!(f6.factors.iter().all(|f| f.len() == 3));
        assert_partition(&f6.factors, 6);
        assert!(one_factorization(5).is_err());
        assert!(one_factorization(0).is_err());
    }

    #[test]
    fn one_factorization_partitions_up_to_12() {
        for k in (2..=12).step_by(2) {
            let f = one_factorization(k).unwrap();
            assert_eq!(f.factors.len(), k - 1);
            for factor in &f.factors {
                check_matching(factor, k).unwrap();
            }
            assert_partition(&f.factors, k);
        }
    }

    #[test]
    fn containing_examples() {
        assert_eq!(
            one_factorization_containing(&[(0, 1), (2, 3)], 4)
                .unwrap()
                .factors,
            vec![
                vec![(0, 1), (2, 3)],
                vec![(0, 2), (1, 3)],
                vec![(0, 3), (1, 2)]
            ]
        );
        assert_eq!(
            one_factorization_containing(&[(0, 2), (1, 3)], 4)
                .unwrap()
                .factors,
            vec![
                vec![(0, 2), (1, 3)],
                vec![(0, 1), (2, 3)],
                vec![(0, 3), (1, 2)]
            ]
        );
        let f = one_factorization_containing(&[(0, 1), (2, 3), (4, 5)], 6).unwrap();
        assert_eq!(f.factors.len(), 5);
        assert_eq!(f.factors[0], vec![(0, 1), (2, 3), (4, 5)]);
        assert_partition(&f.factors, 6);

        assert!(one_factorization_containing(&[(0, 1), (1, 2)], 4).is_err());
        assert!(one_factorization_containing(&[(0, 1)], 4).is_err());
        assert!(one_factorization_containing(&[(0, 0), (2, 3)], 4).is_err());
    }

    /// All perfect matchings on `0..k`, built by pairing the least free point.
    fn all_matchings(k: usize) -> Vec<Matching> {
        fn rec(free: &mut Vec<usize>, cur: &mut Matching, out: &mut Vec<Matching>) {
            if free.is_empty() {
                let mut m = cur.clone();
                m.sort_unstable();
                out.push(m);
                return;
            }
            let a = free.remove(0);
            for idx in 0..free.len() {
                let b = free.remove(idx);
                cur.push((a, b));
                rec(free, cur, out);
                cur.pop();
                free.insert(idx, b);
            }
            free.insert(0, a);
        }
        let mut out = Vec::new();
        rec(&mut (0..k).collect(), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn containing_is_exhaustively_correct() {
        for k in (2..=12).step_by(2) {
            for m in all_matchings(k) {
                let f = one_factorization_containing(&m, k).unwrap();
                assert_eq!(f.factors[0], m);
                assert_eq!(f.factors.len(), k - 1);
                assert_partition(&f.factors, k);
            }
        }
    }
}
