//! Edge-list ingestion and result serialization.
//!
//! CSV files are comma-separated with a header row and LF endings; reals are
//! written with 6 decimals. JSON files hold one object each and keep full
//! precision.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::experiments::{FindingsVerdict, SweepSummary};
use crate::externality::{ExternalityReport, Violation};
use crate::graph::{make_graph, Graph};
use crate::metrics::MetricsBundle;

/// Parses the edge-list text format.
///
/// One edge per line as two whitespace-separated ids. Blank lines and lines
/// starting with `#` are skipped. A line `n <count>` fixes the node count,
/// otherwise it is one more than the largest id seen.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if fields.len() != 2 {
                return Err(err(format!("expected `n <count>`, got `{line}`")));
            }
            if header.is_some() {
                return Err(err("duplicate `n` header".into()));
            }
            let count = fields[1]
                .parse::<usize>()
                .map_err(|e| err(format!("bad node count `{}`: {e}", fields[1])))?;
            header = Some((count, line_no));
            continue;
        }
        if fields.len() != 2 {
            return Err(err(format!("expected two node ids, got `{line}`")));
        }
        let id = |s: &str| s.parse::<usize>().map_err(|e| err(format!("bad node id `{s}`: {e}")));
        let (u, v) = (id(fields[0])?, id(fields[1])?);
        if u == v {
            return Err(err(format!("self-loop on node {u}")));
        }
        edges.push((u, v, line_no));
    }

    let max_id = edges.iter().map(|&(u, v, _)| u.max(v)).max();
    let node_count = match (header, max_id) {
        (Some((count, _)), _) => count,
        (None, Some(m)) => m + 1,
        (None, None) => return Err(Error::EmptyGraph),
    };
    if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u.max(v) >= node_count) {
        return Err(Error::Parse {
            line,
            message: format!("edge ({u}, {v}) exceeds node count {node_count}"),
        });
    }
    let pairs: Vec<_> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    make_graph(node_count, &pairs)
}

/// Inverse of [`parse_edge_list`]; always writes the `n` header.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.node_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn fixed(x: f64) -> String {
    format!("{x:.6}")
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

/// Per-agent table `agent,phi,gamma`.
pub fn write_metrics_csv<W: Write>(m: &MetricsBundle<f64>, w: W) -> io::Result<()> {
    let mut out = csv_writer(w);
    out.write_record(["agent", "phi", "gamma"])?;
    for (i, (phi, gamma)) in m.phi.iter().zip(&m.gamma).enumerate() {
        out.write_record([i.to_string(), fixed(*phi), fixed(*gamma)])?;
    }
    out.flush()
}

/// Square matrix with a leading `agent` column; row `i` holds `alpha[i][*]`.
pub fn write_alpha_csv<W: Write>(m: &MetricsBundle<f64>, w: W) -> io::Result<()> {
    let mut out = csv_writer(w);
    let n = m.node_count();
    let header: Vec<String> = std::iter::once("agent".to_string())
        .chain((0..n).map(|j| j.to_string()))
        .collect();
    out.write_record(&header)?;
    for (i, row) in m.alpha.rows().enumerate().take(n) {
        let fields: Vec<String> = std::iter::once(i.to_string())
            .chain(row.iter().map(|&a| fixed(a)))
            .collect();
        out.write_record(&fields)?;
    }
    out.flush()
}

pub fn metrics_json(m: &MetricsBundle<f64>) -> Value {
    let alpha: Vec<Vec<f64>> = m.alpha.rows().take(m.node_count()).map(|r| r.to_vec()).collect();
    json!({
        "node_count": m.node_count(),
        "phi": m.phi,
        "gamma": m.gamma,
        "alpha": alpha,
    })
}

/// One row per agent, mirroring the before/after layout of a closeness and
/// availability comparison table. Endpoints get the label `ENDPOINT`.
pub fn write_externality_csv<W: Write>(report: &ExternalityReport<f64>, w: W) -> io::Result<()> {
    let mut out = csv_writer(w);
    out.write_record([
        "agent",
        "phi_before",
        "gamma_before",
        "phi_after",
        "gamma_after",
        "delta_phi",
        "delta_gamma",
        "label",
    ])?;
    for (d, label) in report.rows() {
        out.write_record([
            d.agent.to_string(),
            fixed(d.phi_before),
            fixed(d.gamma_before),
            fixed(d.phi_after),
            fixed(d.gamma_after),
            fixed(d.delta_phi),
            fixed(d.delta_gamma),
            label.map_or("ENDPOINT", |l| l.as_str()).to_string(),
        ])?;
    }
    out.flush()
}

pub fn write_records_csv<W: Write>(summary: &SweepSummary, w: W) -> io::Result<()> {
    let mut out = csv_writer(w);
    out.write_record(["n", "j", "k", "d", "nob", "non_beneficiaries", "beneficiary_pct"])?;
    for r in &summary.records {
        out.write_record([
            r.n.to_string(),
            r.j.to_string(),
            r.k.to_string(),
            r.d.to_string(),
            r.nob.to_string(),
            r.non_beneficiaries.to_string(),
            fixed(r.beneficiary_pct),
        ])?;
    }
    out.flush()
}

/// Aggregates and monotonicity table; the per-link records go to CSV.
pub fn summary_json(summary: &SweepSummary) -> Value {
    let (non_decreasing, steps) = summary.overall_monotone();
    json!({
        "sizes": summary.sizes(),
        "record_count": summary.records.len(),
        "aggregates": summary.aggregates,
        "monotonicity": summary.monotonicity,
        "overall_monotone": { "non_decreasing": non_decreasing, "steps": steps },
    })
}

pub fn findings_json(verdict: &FindingsVerdict) -> Value {
    serde_json::to_value(verdict).expect("verdict serializes")
}

/// Long-form `d,nob,n` rows, one per `(n, d)`, NOB being the mean over links.
pub fn write_plot_data<W: Write>(summary: &SweepSummary, w: W) -> io::Result<()> {
    let mut out = csv_writer(w);
    out.write_record(["d", "nob", "n"])?;
    for a in &summary.aggregates {
        out.write_record([a.d.to_string(), a.mean_nob.to_string(), a.n.to_string()])?;
    }
    out.flush()
}

pub const PLOT_DATA_FILE: &str = "nob_surface.csv";
pub const PLOT_SCRIPT_FILE: &str = "plot_nob_surface.py";

const PLOT_SCRIPT: &str = r#"#!/usr/bin/env python3
"""Render number-of-beneficiaries surfaces from nob_surface.csv.

x: hop distance between the linking agents, y: number of beneficiaries,
z: ring size. One panel per size band.
"""
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

BANDS = [(4, 10), (11, 20), (21, 30)]

here = os.path.dirname(os.path.abspath(__file__))
data = os.path.join(here, "nob_surface.csv")
out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "nob_surface.png")

rows = []
with open(data, newline="") as fh:
    for r in csv.DictReader(fh):
        rows.append((int(r["d"]), float(r["nob"]), int(r["n"])))

fig = plt.figure(figsize=(5 * len(BANDS), 4.5))
for idx, (lo, hi) in enumerate(BANDS, start=1):
    ax = fig.add_subplot(1, len(BANDS), idx, projection="3d")
    for n in range(lo, hi + 1):
        pts = sorted((d, nob) for d, nob, m in rows if m == n)
        if not pts:
            continue
        ds, nobs = zip(*pts)
        ax.plot(ds, nobs, [n] * len(ds), marker="o", markersize=2)
    ax.set_xlabel("distance d")
    ax.set_ylabel("NOB")
    ax.set_zlabel("network size")
    ax.set_title(f"ring sizes {lo}-{hi}")
fig.tight_layout()
fig.savefig(out, dpi=150)
print(out)
"#;

/// Writes the plot data file and the plotting script into `dir`.
pub fn emit_plot_data(summary: &SweepSummary, dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let data = dir.join(PLOT_DATA_FILE);
    write_plot_data(summary, fs::File::create(&data)?)?;
    let script = dir.join(PLOT_SCRIPT_FILE);
    fs::write(&script, PLOT_SCRIPT)?;
    Ok(vec![data, script])
}

pub fn write_violations_csv<W: Write>(violations: &[Violation], w: W) -> io::Result<()> {
    let mut out = csv_writer(w);
    out.write_record(["graph_id", "j", "k", "agent", "delta_gamma", "delta_phi"])?;
    for v in violations {
        out.write_record([
            v.graph_id.to_string(),
            v.link.0.to_string(),
            v.link.1.to_string(),
            v.agent.to_string(),
            format!("{:e}", v.delta_gamma),
            format!("{:e}", v.delta_phi),
        ])?;
    }
    out.flush()
}

/// Pretty JSON with a trailing newline.
pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> io::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)
}
