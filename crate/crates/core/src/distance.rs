//! All-pairs hop distances.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Marker stored for pairs with no connecting path.
pub const UNREACHABLE: u32 = u32::MAX;

/// Dense symmetric matrix of hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    fn unreachable(n: usize) -> Self {
        let mut dist = vec![UNREACHABLE; n * n];
        for i in 0..n {
            dist[i * n + i] = 0;
        }
        DistanceMatrix { n, dist }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Hop count, or `None` when `j` cannot be reached from `i`.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        match self.dist[i * self.n + j] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw entry, [`UNREACHABLE`] included.
    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    /// Largest distance, or `None` if some pair is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if self.dist.contains(&UNREACHABLE) {
            None
        } else {
            self.dist.iter().copied().max()
        }
    }
}

/// One breadth-first traversal per source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.node_count();
    let mut m = DistanceMatrix::unreachable(n);
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut m.dist[s * n..(s + 1) * n];
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &v in g.neighbors(u) {
                if row[v] == UNREACHABLE {
                    row[v] = next;
                    queue.push_back(v);
                }
            }
        }
    }
    m
}

/// Independent check for [`all_pairs_distances`]: relaxation over every
/// `(via, i, j)` triple, starting from the adjacency relation.
pub fn oracle_distances(g: &Graph) -> DistanceMatrix {
    let n = g.node_count();
    let mut m = DistanceMatrix::unreachable(n);
    for (u, v) in g.edges() {
        m.dist[u * n + v] = 1;
        m.dist[v * n + u] = 1;
    }
    for via in 0..n {
        for i in 0..n {
            let left = m.dist[i * n + via];
            if left == UNREACHABLE {
                continue;
            }
            for j in 0..n {
                let right = m.dist[via * n + j];
                if right == UNREACHABLE {
                    continue;
                }
                let through = left + right;
                if through < m.dist[i * n + j] {
                    m.dist[i * n + j] = through;
                }
            }
        }
    }
    m
}
