//! Undirected simple graphs over dense agent ids `0..n`.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Immutable undirected simple graph. Adjacency lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    node_count: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Unordered node pairs that are not edges, `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.node_count {
            for v in u + 1..self.node_count {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of the graph with node `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.node_count, "permutation length");
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        make_graph(self.node_count, &edges)
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if node >= self.node_count {
            return Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count,
            });
        }
        Ok(())
    }
}

/// Builds a graph from an edge list. Pairs repeated in either orientation
/// collapse to one edge.
pub fn make_graph(node_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    if node_count == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut set = BTreeSet::new();
    for &(u, v) in edges {
        if u >= node_count || v >= node_count {
            return Err(Error::EndpointOutOfRange { u, v, node_count });
        }
        if u == v {
            return Err(Error::SelfLoop { node: u });
        }
        set.insert((u.min(v), u.max(v)));
    }
    let mut adjacency = vec![Vec::new(); node_count];
    for &(u, v) in &set {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
    }
    Ok(Graph {
        node_count,
        adjacency,
        edge_count: set.len(),
    })
}

/// Cycle on `n >= 3` nodes with edges `{i, i+1 mod n}`.
pub fn ring(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::RingTooSmall(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    make_graph(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    make_graph(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    make_graph(n, &edges)
}

/// Uniform random graph: each pair is an edge independently with
/// probability `edge_prob`. Same seed, same graph.
pub fn random_graph(node_count: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(&mut rng, node_count, edge_prob)
}

pub(crate) fn random_graph_with<R: Rng>(rng: &mut R, node_count: usize, edge_prob: f64) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..node_count {
        for v in u + 1..node_count {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    make_graph(node_count, &edges)
}

/// `g + <jk>`. `g` is left untouched.
pub fn add_link(g: &Graph, j: usize, k: usize) -> Result<Graph> {
    g.check_node(j)?;
    g.check_node(k)?;
    if j == k {
        return Err(Error::SameEndpoints(j));
    }
    if g.has_edge(j, k) {
        return Err(Error::EdgeExists { j, k });
    }
    let mut out = g.clone();
    let (a, b) = (&mut out.adjacency[j], k);
    let pos = a.binary_search(&b).unwrap_err();
    a.insert(pos, b);
    let a = &mut out.adjacency[k];
    let pos = a.binary_search(&j).unwrap_err();
    a.insert(pos, j);
    out.edge_count += 1;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;

    fn assert_invariants(g: &Graph) {
        let mut total = 0;
        for u in 0..g.node_count() {
            let adj = g.neighbors(u);
            assert!(adj.windows(2).all(|w| w[0] < w[1]), "sorted, no duplicates");
            for &v in adj {
                assert_ne!(u, v);
                assert!(g.neighbors(v).contains(&u), "symmetric");
            }
            total += adj.len();
        }
        assert_eq!(total, 2 * g.edge_count());
        assert_eq!(g.edges().count(), g.edge_count());
    }

    #[test]
    fn path_of_three() {
        let g = make_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_invariants(&g);
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = make_graph(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_invariants(&g);
    }

    #[test]
    fn out_of_range_endpoint_is_named() {
        let err = make_graph(2, &[(0, 2)]).unwrap_err();
        assert_eq!(
            err,
            Error::EndpointOutOfRange {
                u: 0,
                v: 2,
                node_count: 2
            }
        );
        assert!(err.to_string().contains("(0, 2)"));
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(make_graph(3, &[(1, 1)]).unwrap_err(), Error::SelfLoop { node: 1 });
    }

    #[test]
    fn zero_nodes_rejected() {
        assert_eq!(make_graph(0, &[]).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn ring_shapes() {
        for (n, diameter) in [(4, 2), (5, 2), (30, 15)] {
            let g = ring(n).unwrap();
            assert_eq!(g.edge_count(), n);
            assert!((0..n).all(|v| g.degree(v) == 2));
            assert_eq!(all_pairs_distances(&g).diameter(), Some(diameter));
            assert_invariants(&g);
        }
        assert_eq!(ring(2).unwrap_err(), Error::RingTooSmall(2));
    }

    #[test]
    fn add_link_is_value_semantic() {
        let p = path(3).unwrap();
        let t = add_link(&p, 0, 2).unwrap();
        assert_eq!(t, complete(3).unwrap());
        assert_eq!(p.edge_count(), 2);
        assert!(!p.has_edge(0, 2));

        let r = ring(6).unwrap();
        let r2 = add_link(&r, 0, 2).unwrap();
        assert_eq!(r2.edge_count(), 7);
        assert_eq!(all_pairs_distances(&r2).get(0, 2), Some(1));
        assert_invariants(&r2);
    }

    #[test]
    fn add_link_errors() {
        let r = ring(4).unwrap();
        assert_eq!(add_link(&r, 0, 1).unwrap_err(), Error::EdgeExists { j: 0, k: 1 });
        assert_eq!(add_link(&r, 1, 0).unwrap_err(), Error::EdgeExists { j: 1, k: 0 });
        assert_eq!(add_link(&r, 2, 2).unwrap_err(), Error::SameEndpoints(2));
        assert!(matches!(add_link(&r, 0, 9), Err(Error::NodeOutOfRange { node: 9, .. })));
    }

    #[test]
    fn random_graph_is_seeded() {
        let a = random_graph(12, 0.3, 7).unwrap();
        let b = random_graph(12, 0.3, 7).unwrap();
        assert_eq!(a, b);
        assert_invariants(&a);
    }

    #[test]
    fn non_edges_complement_edges() {
        let g = ring(7).unwrap();
        assert_eq!(g.non_edges().len() + g.edge_count(), 7 * 6 / 2);
        assert!(g.non_edges().iter().all(|&(u, v)| !g.has_edge(u, v)));
    }
}
