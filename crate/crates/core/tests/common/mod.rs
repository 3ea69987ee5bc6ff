//! Brute-force exact reference for the resource-sharing model.
//!
//! Shares nothing with the library's metric path: distances come from
//! frontier expansion over an edge set, every quantity is a `BigRational`.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use social_cloud::Graph;

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `None` for disconnected pairs.
pub fn distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<Option<u32>>> {
    let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let adjacent = |u: usize, v: usize| set.contains(&(u.min(v), u.max(v)));
    let mut out = vec![vec![None; n]; n];
    for s in 0..n {
        let mut seen = BTreeSet::from([s]);
        let mut frontier = vec![s];
        let mut hops = 0;
        out[s][s] = Some(0);
        while !frontier.is_empty() {
            hops += 1;
            let mut next = Vec::new();
            for v in 0..n {
                if !seen.contains(&v) && frontier.iter().any(|&u| adjacent(u, v)) {
                    next.push(v);
                }
            }
            for &v in &next {
                seen.insert(v);
                out[s][v] = Some(hops);
            }
            frontier = next;
        }
    }
    out
}

pub struct Exact {
    pub phi: Vec<Q>,
    pub alpha: Vec<Vec<Q>>,
    pub gamma: Vec<Q>,
}

pub fn exact(n: usize, edges: &[(usize, usize)]) -> Exact {
    let d = distances(n, edges);
    let inv = |i: usize, j: usize| match d[i][j] {
        Some(h) if i != j => q(1, h as i64),
        _ => Q::zero(),
    };
    let phi: Vec<Q> = (0..n).map(|i| (0..n).map(|j| inv(i, j)).sum()).collect();
    let alpha: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if phi[j].is_zero() {
                        Q::zero()
                    } else {
                        inv(i, j) / &phi[j]
                    }
                })
                .collect()
        })
        .collect();
    let gamma = (0..n)
        .map(|i| {
            let mut miss = Q::one();
            for j in (0..n).filter(|&j| j != i) {
                miss *= Q::one() - &alpha[i][j];
            }
            Q::one() - miss
        })
        .collect();
    Exact { phi, alpha, gamma }
}

pub fn exact_graph(g: &Graph) -> Exact {
    exact(g.node_count(), &g.edges().collect::<Vec<_>>())
}

/// Exact `(delta_phi, delta_gamma)` for every agent after adding `<jk>`.
pub fn exact_deltas(g: &Graph, j: usize, k: usize) -> Vec<(Q, Q)> {
    let edges: Vec<_> = g.edges().collect();
    let mut plus = edges.clone();
    plus.push((j, k));
    let before = exact(g.node_count(), &edges);
    let after = exact(g.node_count(), &plus);
    (0..g.node_count())
        .map(|i| (&after.phi[i] - &before.phi[i], &after.gamma[i] - &before.gamma[i]))
        .collect()
}

/// Third parties of `<jk>` whose availability strictly rises.
pub fn exact_beneficiaries(g: &Graph, j: usize, k: usize) -> Vec<usize> {
    exact_deltas(g, j, k)
        .into_iter()
        .enumerate()
        .filter(|&(i, (_, ref dg))| i != j && i != k && *dg > Q::zero())
        .map(|(i, _)| i)
        .collect()
}

pub fn to_f64(x: &Q) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap()
}
