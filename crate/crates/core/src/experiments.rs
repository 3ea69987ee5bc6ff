//! Ring-network sweep: for every ring size, every agent `j` and every chord
//! length `d` from 2 up to the ring diameter, add `<jk>` and count the third
//! parties whose availability strictly rises.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::externality::{count_beneficiaries, externality_report, ScanCase};
use crate::graph::{random_graph_with, ring};

/// Smallest ring that admits a chord of length 2.
pub const MIN_SWEEP_SIZE: usize = 4;
/// Largest ring size at which no agent benefits from any chord.
pub const SMALL_RING_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub j: usize,
    pub k: usize,
    pub d: usize,
    pub nob: usize,
    pub non_beneficiaries: usize,
    pub beneficiary_pct: f64,
    pub beneficiaries: Vec<usize>,
}

/// NOB statistics over all links of one length on one ring.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceAggregate {
    pub n: usize,
    pub d: usize,
    pub links: usize,
    pub min_nob: usize,
    pub max_nob: usize,
    pub mean_nob: f64,
}

/// How often mean NOB does not drop when the chord grows by one hop.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Monotonicity {
    pub n: usize,
    pub steps: usize,
    pub non_decreasing: usize,
    pub fraction: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    /// Sorted by `(n, j, k)`.
    pub records: Vec<SweepRecord>,
    /// Sorted by `(n, d)`.
    pub aggregates: Vec<DistanceAggregate>,
    pub monotonicity: Vec<Monotonicity>,
}

impl SweepSummary {
    pub fn from_records(mut records: Vec<SweepRecord>) -> Self {
        records.sort_by_key(|r| (r.n, r.j, r.k));

        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for r in &records {
            groups.entry((r.n, r.d)).or_default().push(r.nob);
        }
        let aggregates: Vec<DistanceAggregate> = groups
            .into_iter()
            .map(|((n, d), nobs)| DistanceAggregate {
                n,
                d,
                links: nobs.len(),
                min_nob: *nobs.iter().min().unwrap(),
                max_nob: *nobs.iter().max().unwrap(),
                mean_nob: nobs.iter().sum::<usize>() as f64 / nobs.len() as f64,
            })
            .collect();

        let mut monotonicity = Vec::new();
        for chunk in aggregates.chunk_by(|a, b| a.n == b.n) {
            let steps = chunk.len().saturating_sub(1);
            let non_decreasing = chunk.windows(2).filter(|w| w[1].mean_nob >= w[0].mean_nob).count();
            monotonicity.push(Monotonicity {
                n: chunk[0].n,
                steps,
                non_decreasing,
                fraction: (steps > 0).then(|| non_decreasing as f64 / steps as f64),
            });
        }

        SweepSummary {
            records,
            aggregates,
            monotonicity,
        }
    }

    pub fn aggregate(&self, n: usize, d: usize) -> Option<&DistanceAggregate> {
        self.aggregates
            .binary_search_by_key(&(n, d), |a| (a.n, a.d))
            .ok()
            .map(|i| &self.aggregates[i])
    }

    /// Ring sizes present, ascending.
    pub fn sizes(&self) -> Vec<usize> {
        self.monotonicity.iter().map(|m| m.n).collect()
    }

    /// `(non_decreasing, steps)` pooled over all ring sizes.
    pub fn overall_monotone(&self) -> (usize, usize) {
        self.monotonicity
            .iter()
            .fold((0, 0), |(a, b), m| (a + m.non_decreasing, b + m.steps))
    }
}

fn check_range(n_min: usize, n_max: usize) -> Result<()> {
    if n_min < MIN_SWEEP_SIZE || n_min > n_max {
        return Err(Error::SweepRange { n_min, n_max });
    }
    Ok(())
}

/// Partners of `j` at ring distance `d`; one partner when `d` is half the ring.
fn partners(n: usize, j: usize, d: usize) -> Vec<usize> {
    let fwd = (j + d) % n;
    let back = (j + n - d) % n;
    if fwd == back {
        vec![fwd]
    } else {
        vec![fwd, back]
    }
}

fn record(n: usize, j: usize, k: usize, d: usize, beneficiaries: Vec<usize>) -> SweepRecord {
    let nob = beneficiaries.len();
    SweepRecord {
        n,
        j,
        k,
        d,
        nob,
        non_beneficiaries: n - 2 - nob,
        beneficiary_pct: 100.0 * nob as f64 / n as f64,
        beneficiaries,
    }
}

/// Evaluates every agent and every admissible partner.
pub fn ring_sweep(n_min: usize, n_max: usize) -> Result<SweepSummary> {
    check_range(n_min, n_max)?;
    let mut records = Vec::new();
    for n in n_min..=n_max {
        let g = ring(n)?;
        for j in 0..n {
            for d in 2..=n / 2 {
                for k in partners(n, j, d) {
                    let report = externality_report::<f64>(&g, j, k)?;
                    debug_assert_eq!(report.base_distance, Some(d as u32));
                    records.push(record(n, j, k, d, count_beneficiaries(&report).beneficiaries));
                }
            }
        }
    }
    Ok(SweepSummary::from_records(records))
}

/// Same result as [`ring_sweep`], evaluating only link `(0, d)` per chord
/// length and mapping it onto every rotation and reflection.
pub fn symmetry_reduced_sweep(n_min: usize, n_max: usize) -> Result<SweepSummary> {
    check_range(n_min, n_max)?;
    let mut records = Vec::new();
    for n in n_min..=n_max {
        let g = ring(n)?;
        for d in 2..=n / 2 {
            let base = count_beneficiaries(&externality_report::<f64>(&g, 0, d)?).beneficiaries;
            for j in 0..n {
                for k in partners(n, j, d) {
                    // (0, d) -> (j, j + d) is a rotation by j; (0, d) -> (j, j - d)
                    // is the reflection i -> j - i.
                    let forward = k == (j + d) % n;
                    let mut mapped: Vec<usize> = base
                        .iter()
                        .map(|&i| if forward { (i + j) % n } else { (j + n - i) % n })
                        .collect();
                    mapped.sort_unstable();
                    records.push(record(n, j, k, d, mapped));
                }
            }
        }
    }
    Ok(SweepSummary::from_records(records))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FindingsVerdict {
    /// No record on a ring of size at most [`SMALL_RING_LIMIT`] has a beneficiary.
    pub finding2: bool,
    /// Every larger ring has some chord length with at least one beneficiary.
    pub onset: bool,
    pub sizes_without_beneficiaries: Vec<usize>,
    /// For every larger ring, mean NOB at `d = 2` is at most mean NOB at `d = 3`.
    pub finding3_small_d: bool,
    /// No ring larger than [`SMALL_RING_LIMIT`] was present.
    pub finding3_vacuous: bool,
    pub finding3_failures: Vec<usize>,
    pub monotone_non_decreasing: usize,
    pub monotone_steps: usize,
    pub monotone_fraction: Option<f64>,
    /// Every record has fewer beneficiaries than non-beneficiaries.
    pub finding4: bool,
    pub max_beneficiary_pct: f64,
    /// `(n, d)` of the first record reaching the maximum percentage.
    pub max_beneficiary_at: Option<(usize, usize)>,
}

pub fn findings_check(summary: &SweepSummary) -> Result<FindingsVerdict> {
    let sizes = summary.sizes();
    if let (Some(&lo), Some(&hi)) = (sizes.first(), sizes.last()) {
        for n in lo..=hi {
            for d in 2..=n / 2 {
                if summary.aggregate(n, d).is_none() {
                    return Err(Error::MissingCoverage { n, d });
                }
            }
        }
    }

    let finding2 = summary
        .records
        .iter()
        .filter(|r| r.n <= SMALL_RING_LIMIT)
        .all(|r| r.nob == 0);

    let large: Vec<usize> = sizes.iter().copied().filter(|&n| n > SMALL_RING_LIMIT).collect();
    let sizes_without_beneficiaries: Vec<usize> = large
        .iter()
        .copied()
        .filter(|&n| (2..=n / 2).all(|d| summary.aggregate(n, d).is_some_and(|a| a.max_nob == 0)))
        .collect();

    let finding3_failures: Vec<usize> = large
        .iter()
        .copied()
        .filter(|&n| match (summary.aggregate(n, 2), summary.aggregate(n, 3)) {
            (Some(two), Some(three)) => two.mean_nob > three.mean_nob,
            _ => false,
        })
        .collect();

    let (monotone_non_decreasing, monotone_steps) = summary.overall_monotone();

    let mut max_beneficiary_pct = 0.0;
    let mut max_beneficiary_at = None;
    for r in &summary.records {
        if max_beneficiary_at.is_none() || r.beneficiary_pct > max_beneficiary_pct {
            max_beneficiary_pct = r.beneficiary_pct;
            max_beneficiary_at = Some((r.n, r.d));
        }
    }

    Ok(FindingsVerdict {
        finding2,
        onset: sizes_without_beneficiaries.is_empty(),
        sizes_without_beneficiaries,
        finding3_small_d: finding3_failures.is_empty(),
        finding3_vacuous: large.is_empty(),
        finding3_failures,
        monotone_non_decreasing,
        monotone_steps,
        monotone_fraction: (monotone_steps > 0).then(|| monotone_non_decreasing as f64 / monotone_steps as f64),
        finding4: summary.records.iter().all(|r| r.nob < r.non_beneficiaries),
        max_beneficiary_pct,
        max_beneficiary_at,
    })
}

/// Every ring size in range with all of its non-edges as candidates.
/// Case ids count up from `first_id`.
pub fn ring_corpus(n_min: usize, n_max: usize, first_id: usize) -> Result<Vec<ScanCase>> {
    (n_min..=n_max)
        .enumerate()
        .map(|(offset, n)| {
            let graph = ring(n)?;
            let links = graph.non_edges();
            Ok(ScanCase {
                id: first_id + offset,
                graph,
                links,
            })
        })
        .collect()
}

/// Parameters of a seeded random-graph corpus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomCorpus {
    pub count: usize,
    pub min_nodes: usize,
    pub max_nodes: usize,
    pub edge_prob: f64,
    pub seed: u64,
}

impl RandomCorpus {
    /// Graphs with node counts drawn uniformly from `min_nodes..=max_nodes`,
    /// all non-edges as candidates. Deterministic in `seed`.
    pub fn generate(&self, first_id: usize) -> Result<Vec<ScanCase>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|i| {
                let nodes = rng.gen_range(self.min_nodes..=self.max_nodes);
                let graph = random_graph_with(&mut rng, nodes, self.edge_prob)?;
                let links = graph.non_edges();
                Ok(ScanCase {
                    id: first_id + i,
                    graph,
                    links,
                })
            })
            .collect()
    }
}
