//! Resource availability in social-cloud sharing networks.
//!
//! Agents sit on an undirected graph. Each agent's closeness is its harmonic
//! centrality, the chance that `i` obtains a resource from `j` is `j`'s
//! reciprocal-distance weight toward `i` normalized by `j`'s closeness, and an
//! agent's availability is the chance of obtaining the resource from at least
//! one other agent. Adding a link changes everybody's availability; this crate
//! classifies those changes per third party and sweeps ring networks to count
//! who benefits.
//!
//! The model code is generic over [`Scalar`], so the same routines run in
//! `f64` for experiments and in exact rationals for verification. The aliases
//! below pin the common instantiations.

pub mod cli;
pub mod distance;
pub mod error;
pub mod experiments;
pub mod externality;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod scalar;

pub use distance::{all_pairs_distances, oracle_distances, DistanceMatrix};
pub use error::{Error, Result};
pub use experiments::{findings_check, ring_sweep, symmetry_reduced_sweep, FindingsVerdict, SweepRecord, SweepSummary};
pub use externality::{
    conjecture_scan, count_beneficiaries, externality_report, not_sufficient_witness, BeneficiaryCount, Externality,
    ExternalityReport, ScanCase, Violation,
};
pub use graph::{add_link, make_graph, ring, Graph};
pub use metrics::{availability, compute_metrics, harmonic_closeness, resource_probability, MetricsBundle};
pub use scalar::Scalar;

/// Exact rational scalar used by verification paths.
pub type Rational = num_rational::BigRational;

/// Metrics in double precision.
pub type Metrics = MetricsBundle<f64>;
/// Metrics in single precision.
pub type Metrics32 = MetricsBundle<f32>;
/// Metrics in exact rational arithmetic.
pub type ExactMetrics = MetricsBundle<Rational>;

/// Externality report in double precision.
pub type Report = ExternalityReport<f64>;
/// Externality report in exact rational arithmetic.
pub type ExactReport = ExternalityReport<Rational>;
