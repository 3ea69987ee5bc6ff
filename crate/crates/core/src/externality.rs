//! Effects of one new link on every other agent's availability.
//!
//! A third party `i` of link `<jk>` experiences a positive externality when
//! its availability strictly rises, a negative one when it strictly falls,
//! and none otherwise. "Strictly" means outside [`Scalar::zero_tolerance`].

use std::fmt;

use serde::Serialize;

use crate::distance::all_pairs_distances;
use crate::error::Result;
use crate::graph::{add_link, Graph};
use crate::metrics::{metrics_from_distances, MetricsBundle};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Externality {
    #[serde(rename = "POSITIVE")]
    Positive,
    #[serde(rename = "NEGATIVE")]
    Negative,
    #[serde(rename = "NONE")]
    Neutral,
}

impl Externality {
    /// Label for a change in availability.
    pub fn classify<T: Scalar>(delta_gamma: &T) -> Self {
        let tol = T::zero_tolerance();
        if *delta_gamma > tol {
            Externality::Positive
        } else if *delta_gamma < -tol {
            Externality::Negative
        } else {
            Externality::Neutral
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Externality::Positive => "POSITIVE",
            Externality::Negative => "NEGATIVE",
            Externality::Neutral => "NONE",
        }
    }
}

impl fmt::Display for Externality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Closeness and availability of one agent before and after the link.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgentDelta<T> {
    pub agent: usize,
    pub phi_before: T,
    pub phi_after: T,
    pub gamma_before: T,
    pub gamma_after: T,
    pub delta_phi: T,
    pub delta_gamma: T,
}

impl<T: Scalar> AgentDelta<T> {
    fn between(agent: usize, before: &MetricsBundle<T>, after: &MetricsBundle<T>) -> Self {
        let (pb, pa) = (before.phi[agent].clone(), after.phi[agent].clone());
        let (gb, ga) = (before.gamma[agent].clone(), after.gamma[agent].clone());
        AgentDelta {
            agent,
            delta_phi: pa.clone() - pb.clone(),
            delta_gamma: ga.clone() - gb.clone(),
            phi_before: pb,
            phi_after: pa,
            gamma_before: gb,
            gamma_after: ga,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThirdPartyEffect<T> {
    #[serde(flatten)]
    pub delta: AgentDelta<T>,
    pub label: Externality,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExternalityReport<T> {
    pub node_count: usize,
    pub link: (usize, usize),
    /// Hop distance between the endpoints before the link, `None` if they
    /// were disconnected.
    pub base_distance: Option<u32>,
    /// Every agent other than the endpoints, by ascending id.
    pub per_agent: Vec<ThirdPartyEffect<T>>,
    /// The endpoints `j` and `k`, in link order. They carry no label.
    pub endpoints: [AgentDelta<T>; 2],
}

impl<T> ExternalityReport<T> {
    /// All agents by id, third parties with their label and endpoints with `None`.
    pub fn rows(&self) -> Vec<(&AgentDelta<T>, Option<Externality>)> {
        let mut rows: Vec<_> = self
            .per_agent
            .iter()
            .map(|e| (&e.delta, Some(e.label)))
            .chain(self.endpoints.iter().map(|d| (d, None)))
            .collect();
        rows.sort_by_key(|(d, _)| d.agent);
        rows
    }
}

pub fn externality_report<T: Scalar>(g: &Graph, j: usize, k: usize) -> Result<ExternalityReport<T>> {
    let linked = add_link(g, j, k)?;
    let d_before = all_pairs_distances(g);
    let before = metrics_from_distances::<T>(&d_before);
    let after = metrics_from_distances::<T>(&all_pairs_distances(&linked));

    let per_agent = (0..g.node_count())
        .filter(|&i| i != j && i != k)
        .map(|i| {
            let delta = AgentDelta::between(i, &before, &after);
            let label = Externality::classify(&delta.delta_gamma);
            ThirdPartyEffect { delta, label }
        })
        .collect();

    Ok(ExternalityReport {
        node_count: g.node_count(),
        link: (j, k),
        base_distance: d_before.get(j, k),
        per_agent,
        endpoints: [
            AgentDelta::between(j, &before, &after),
            AgentDelta::between(k, &before, &after),
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BeneficiaryCount {
    pub nob: usize,
    pub non_beneficiaries: usize,
    pub beneficiaries: Vec<usize>,
    /// `100 * nob / n` over all `n` agents, endpoints included in `n`.
    pub beneficiary_pct: f64,
}

pub fn count_beneficiaries<T>(report: &ExternalityReport<T>) -> BeneficiaryCount {
    let beneficiaries: Vec<usize> = report
        .per_agent
        .iter()
        .filter(|e| e.label == Externality::Positive)
        .map(|e| e.delta.agent)
        .collect();
    let nob = beneficiaries.len();
    BeneficiaryCount {
        nob,
        non_beneficiaries: report.per_agent.len() - nob,
        beneficiary_pct: 100.0 * nob as f64 / report.node_count as f64,
        beneficiaries,
    }
}

/// A graph plus the candidate links to try on it.
#[derive(Debug, Clone)]
pub struct ScanCase {
    pub id: usize,
    pub graph: Graph,
    pub links: Vec<(usize, usize)>,
}

/// A beneficiary whose closeness did not rise.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph_id: usize,
    pub link: (usize, usize),
    pub agent: usize,
    pub delta_gamma: f64,
    pub delta_phi: f64,
}

/// Searches for agents that gain availability without gaining closeness.
///
/// An empty result means no counterexample was found in `cases`; it is not a
/// proof. Output is ordered by case, then link, then agent.
pub fn conjecture_scan<T: Scalar>(cases: &[ScanCase]) -> Result<Vec<Violation>> {
    let tol = T::zero_tolerance();
    let mut out = Vec::new();
    for case in cases {
        for &(j, k) in &case.links {
            let report = externality_report::<T>(&case.graph, j, k)?;
            for e in &report.per_agent {
                if e.label == Externality::Positive && e.delta.delta_phi <= tol {
                    out.push(Violation {
                        graph_id: case.id,
                        link: (j, k),
                        agent: e.delta.agent,
                        delta_gamma: e.delta.delta_gamma.to_f64_lossy(),
                        delta_phi: e.delta.delta_phi.to_f64_lossy(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Third parties whose closeness rose but who did not benefit.
pub fn not_sufficient_witness<T: Scalar>(g: &Graph, j: usize, k: usize) -> Result<Vec<usize>> {
    let tol = T::zero_tolerance();
    let report = externality_report::<T>(g, j, k)?;
    Ok(report
        .per_agent
        .iter()
        .filter(|e| e.delta.delta_phi > tol && e.label != Externality::Positive)
        .map(|e| e.delta.agent)
        .collect())
}
