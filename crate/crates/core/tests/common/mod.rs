//! Oracles shared by the integration tests. They enumerate vertex pairs
//! directly and do not call the blow-up or construction code.

#![allow(dead_code)]

use urd_core::{Edge, Vertex};

pub fn vertices(m: usize, w: usize) -> Vec<Vertex> {
    (0..m)
        .flat_map(|b| (0..w).map(move |l| Vertex::new(b, l)))
        .collect()
}

fn position(order: &[usize], base: usize) -> usize {
    order
        .iter()
        .position(|&x| x == base)
        .expect("base point on cycle")
}

/// Difference of the pair `{a, b}` read along `order`, if the two base
/// points are consecutive on the cycle.
pub fn difference_along(order: &[usize], w: usize, a: Vertex, b: Vertex) -> Option<usize> {
    let m = order.len();
    if a.base() == b.base() {
        return None;
    }
    let (pa, pb) = (position(order, a.base()), position(order, b.base()));
    if (pa + 1) % m == pb {
        Some((b.level() + w - a.level()) % w)
    } else if (pb + 1) % m == pa {
        Some((a.level() + w - b.level()) % w)
    } else {
        None
    }
}

/// Edges of the weighted cycle whose difference lies in `diffs`, sorted.
pub fn cycle_edges_with(order: &[usize], w: usize, diffs: &[usize]) -> Vec<Edge> {
    let vs = vertices(order.len(), w);
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if let Some(d) = difference_along(order, w, a, b) {
                if diffs.contains(&d) {
                    out.push(Edge::new(a, b).unwrap());
                }
            }
        }
    }
    out.sort();
    out
}

/// `E(C) \ J` for the weighted cycle on `order` with weight `w`.
pub fn cycle_minus_j(order: &[usize], w: usize) -> Vec<Edge> {
    let diffs: Vec<usize> = (1..w).collect();
    cycle_edges_with(order, w, &diffs)
}

/// `E(I_(w)) \ J` for a perfect matching of base points.
pub fn matching_minus_j(matching: &[(usize, usize)], m: usize, w: usize) -> Vec<Edge> {
    let vs = vertices(m, w);
    let matched = |x: usize, y: usize| {
        matching
            .iter()
            .any(|&(a, b)| (a, b) == (x, y) || (b, a) == (x, y))
    };
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if matched(a.base(), b.base()) && a.level() != b.level() {
                out.push(Edge::new(a, b).unwrap());
            }
        }
    }
    out.sort();
    out
}
