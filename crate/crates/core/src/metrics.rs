//! Harmonic closeness, pairwise resource probability and availability.
//!
//! For a graph with hop distances `d`:
//!
//! * closeness `phi[i] = sum_{j != i} 1 / d(i, j)`, unreachable pairs adding 0;
//! * resource probability `alpha[i][j] = (1 / d(i, j)) / phi[j]`, zero when the
//!   pair is disconnected or `j` is isolated;
//! * availability `gamma[i] = 1 - prod_{j != i} (1 - alpha[i][j])`.

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Dense `n x n` matrix of resource probabilities, zero diagonal.
/// Row `i` lists the suppliers of agent `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T> AlphaMatrix<T> {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsBundle<T> {
    pub phi: Vec<T>,
    pub alpha: AlphaMatrix<T>,
    pub gamma: Vec<T>,
}

impl<T> MetricsBundle<T> {
    pub fn node_count(&self) -> usize {
        self.phi.len()
    }
}

pub fn harmonic_closeness<T: Scalar>(d: &DistanceMatrix) -> Vec<T> {
    (0..d.node_count())
        .map(|i| {
            d.row(i)
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .filter_map(|(j, _)| d.get(i, j))
                .fold(T::zero(), |acc, hops| acc + T::reciprocal(hops))
        })
        .collect()
}

/// Probability that `i` obtains the resource from `j`.
pub fn resource_probability<T: Scalar>(phi: &[T], d: &DistanceMatrix, i: usize, j: usize) -> Result<T> {
    if i == j {
        return Err(Error::SameEndpoints(i));
    }
    Ok(alpha_entry(phi, d, i, j))
}

fn alpha_entry<T: Scalar>(phi: &[T], d: &DistanceMatrix, i: usize, j: usize) -> T {
    match d.get(i, j) {
        Some(hops) if !phi[j].is_zero() => T::reciprocal(hops) / phi[j].clone(),
        _ => T::zero(),
    }
}

pub fn alpha_matrix<T: Scalar>(phi: &[T], d: &DistanceMatrix) -> AlphaMatrix<T> {
    let n = d.node_count();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(if i == j { T::zero() } else { alpha_entry(phi, d, i, j) });
        }
    }
    AlphaMatrix { n, data }
}

/// Probability that `i` obtains the resource from at least one other agent.
pub fn availability<T: Scalar>(alpha: &AlphaMatrix<T>, i: usize) -> T {
    let miss = alpha
        .row(i)
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .fold(T::one(), |acc, (_, a)| acc * (T::one() - a.clone()));
    T::one() - miss
}

pub fn metrics_from_distances<T: Scalar>(d: &DistanceMatrix) -> MetricsBundle<T> {
    let phi = harmonic_closeness::<T>(d);
    let alpha = alpha_matrix(&phi, d);
    let gamma = (0..d.node_count()).map(|i| availability(&alpha, i)).collect();
    MetricsBundle { phi, alpha, gamma }
}

pub fn compute_metrics<T: Scalar>(g: &Graph) -> MetricsBundle<T> {
    metrics_from_distances(&all_pairs_distances(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, make_graph, path, ring};
    use crate::Rational;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num.into(), den.into())
    }

    #[test]
    fn closeness_examples() {
        let phi: Vec<f64> = harmonic_closeness(&all_pairs_distances(&ring(4).unwrap()));
        assert_eq!(phi[0], 2.5);
        let phi: Vec<f64> = harmonic_closeness(&all_pairs_distances(&complete(5).unwrap()));
        assert!(phi.iter().all(|&p| p == 4.0));
    }

    #[test]
    fn resource_probability_on_path() {
        let g = path(3).unwrap();
        let d = all_pairs_distances(&g);
        let phi: Vec<Rational> = harmonic_closeness(&d);
        assert_eq!(phi, vec![q(3, 2), q(2, 1), q(3, 2)]);
        assert_eq!(resource_probability(&phi, &d, 0, 1).unwrap(), q(1, 2));
        assert_eq!(resource_probability(&phi, &d, 0, 2).unwrap(), q(1, 3));
        assert_eq!(
            resource_probability(&phi, &d, 1, 1).unwrap_err(),
            Error::SameEndpoints(1)
        );
    }

    #[test]
    fn isolated_pair_has_zero_probability() {
        let g = make_graph(2, &[]).unwrap();
        let d = all_pairs_distances(&g);
        let phi: Vec<f64> = harmonic_closeness(&d);
        assert_eq!(resource_probability(&phi, &d, 0, 1).unwrap(), 0.0);
    }

    #[test]
    fn availability_examples() {
        let k2: MetricsBundle<Rational> = compute_metrics(&complete(2).unwrap());
        assert_eq!(k2.gamma[0], q(1, 1));

        let r4: MetricsBundle<Rational> = compute_metrics(&ring(4).unwrap());
        assert_eq!(r4.alpha.row(0), &[q(0, 1), q(2, 5), q(1, 5), q(2, 5)]);
        assert_eq!(r4.gamma[0], q(712, 1000));

        let r5: MetricsBundle<Rational> = compute_metrics(&ring(5).unwrap());
        assert!(r5.phi.iter().all(|p| *p == q(3, 1)));
        assert!(r5.gamma.iter().all(|g| *g == q(224, 324)));

        let r5f: MetricsBundle<f64> = compute_metrics(&ring(5).unwrap());
        assert!(r5f.gamma.iter().all(|g| (g - 0.691358).abs() < 1e-6));
    }

    #[test]
    fn path_availability() {
        let m: MetricsBundle<Rational> = compute_metrics(&path(3).unwrap());
        assert_eq!(m.gamma, vec![q(2, 3), q(8, 9), q(2, 3)]);
    }

    #[test]
    fn single_agent() {
        let m: MetricsBundle<f64> = compute_metrics(&make_graph(1, &[]).unwrap());
        assert_eq!(m.phi, vec![0.0]);
        assert_eq!(m.gamma, vec![0.0]);
    }

    #[test]
    fn isolated_agent_has_zero_availability() {
        let g = make_graph(4, &[(0, 1), (1, 2)]).unwrap();
        let m: MetricsBundle<f64> = compute_metrics(&g);
        assert_eq!(m.phi[3], 0.0);
        assert_eq!(m.gamma[3], 0.0);
        assert!(m.gamma[..3].iter().all(|&g| g > 0.0));
    }

    #[test]
    fn single_precision_tracks_double() {
        let a: MetricsBundle<f32> = compute_metrics(&ring(9).unwrap());
        let b: MetricsBundle<f64> = compute_metrics(&ring(9).unwrap());
        for (x, y) in a.gamma.iter().zip(&b.gamma) {
            assert!((*x as f64 - y).abs() < 1e-6);
        }
    }
}
