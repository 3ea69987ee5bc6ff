//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::experiments::{findings_check, ring_corpus, symmetry_reduced_sweep, RandomCorpus};
use crate::externality::{conjecture_scan, count_beneficiaries, externality_report};
use crate::graph::Graph;
use crate::io;
use crate::metrics::compute_metrics;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "social-cloud",
    version,
    about = "Resource availability and link externalities in sharing networks"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closeness, resource probabilities and availability for a graph.
    Metrics {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write files here instead of printing to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-agent effect of adding one link.
    Externality {
        #[arg(long)]
        input: PathBuf,
        /// Link endpoints as `j,k`.
        #[arg(long, value_parser = parse_link)]
        link: (usize, usize),
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Beneficiary counts for every chord of every ring size in range.
    Sweep {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, default_value = "results")]
        out: PathBuf,
    },
    /// Look for beneficiaries whose closeness did not rise.
    ConjectureScan {
        /// Smallest ring in the ring corpus.
        #[arg(long)]
        min: usize,
        /// Largest ring in the ring corpus.
        #[arg(long)]
        max: usize,
        /// Number of random graphs to add to the corpus.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        random_min_nodes: usize,
        #[arg(long, default_value_t = 14)]
        random_max_nodes: usize,
        #[arg(long, default_value = "results")]
        out: PathBuf,
    },
}

fn parse_link(s: &str) -> Result<(usize, usize), String> {
    let (j, k) = s.split_once(',').ok_or_else(|| format!("expected `j,k`, got `{s}`"))?;
    let id = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad node id `{t}`: {e}"));
    Ok((id(j)?, id(k)?))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn create_dir(dir: &Path) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))
}

fn create_file(path: &Path) -> anyhow::Result<fs::File> {
    fs::File::create(path).with_context(|| format!("creating {}", path.display()))
}

/// Executes one command. Human-readable progress goes to `stdout`.
pub fn run(config: RunConfig, stdout: &mut dyn Write) -> anyhow::Result<()> {
    match config.command {
        Command::Metrics { input, format, out } => {
            let m = compute_metrics::<f64>(&load_graph(&input)?);
            match (format, out) {
                (Format::Csv, None) => io::write_metrics_csv(&m, &mut *stdout)?,
                (Format::Json, None) => writeln!(stdout, "{}", serde_json::to_string_pretty(&io::metrics_json(&m))?)?,
                (Format::Csv, Some(dir)) => {
                    create_dir(&dir)?;
                    io::write_metrics_csv(&m, create_file(&dir.join("metrics.csv"))?)?;
                    io::write_alpha_csv(&m, create_file(&dir.join("alpha.csv"))?)?;
                }
                (Format::Json, Some(dir)) => {
                    create_dir(&dir)?;
                    io::write_json(&dir.join("metrics.json"), &io::metrics_json(&m))?;
                }
            }
        }
        Command::Externality {
            input,
            link: (j, k),
            format,
            out,
        } => {
            let g = load_graph(&input)?;
            let report = externality_report::<f64>(&g, j, k).context("invalid link")?;
            let count = count_beneficiaries(&report);
            let doc = json!({ "report": report, "beneficiaries": count });
            match (format, out) {
                (Format::Csv, None) => io::write_externality_csv(&report, &mut *stdout)?,
                (Format::Json, None) => writeln!(stdout, "{}", serde_json::to_string_pretty(&doc)?)?,
                (Format::Csv, Some(dir)) => {
                    create_dir(&dir)?;
                    io::write_externality_csv(&report, create_file(&dir.join("externality.csv"))?)?;
                }
                (Format::Json, Some(dir)) => {
                    create_dir(&dir)?;
                    io::write_json(&dir.join("externality.json"), &doc)?;
                }
            }
        }
        Command::Sweep { min, max, out } => {
            let summary = symmetry_reduced_sweep(min, max)?;
            let verdict = findings_check(&summary)?;
            create_dir(&out)?;
            io::write_records_csv(&summary, create_file(&out.join("sweep_records.csv"))?)?;
            io::write_json(&out.join("sweep_summary.json"), &io::summary_json(&summary))?;
            io::write_json(&out.join("findings.json"), &io::findings_json(&verdict))?;
            io::emit_plot_data(&summary, &out).with_context(|| format!("writing plot data to {}", out.display()))?;
            writeln!(
                stdout,
                "{} records over ring sizes {min}..={max}; max beneficiary share {:.2}%",
                summary.records.len(),
                verdict.max_beneficiary_pct
            )?;
            writeln!(stdout, "wrote results to {}", out.display())?;
        }
        Command::ConjectureScan {
            min,
            max,
            random,
            edge_prob,
            seed,
            random_min_nodes,
            random_max_nodes,
            out,
        } => {
            if min < 3 || min > max {
                bail!("invalid ring range {min}..={max}: need 3 <= min <= max");
            }
            if !(0.0..=1.0).contains(&edge_prob) {
                bail!("edge probability {edge_prob} outside [0, 1]");
            }
            if random > 0 && (random_min_nodes == 0 || random_min_nodes > random_max_nodes) {
                bail!("invalid random node range {random_min_nodes}..={random_max_nodes}");
            }
            let mut cases = ring_corpus(min, max, 0)?;
            let random_spec = (random > 0).then_some(RandomCorpus {
                count: random,
                min_nodes: random_min_nodes,
                max_nodes: random_max_nodes,
                edge_prob,
                seed,
            });
            if let Some(spec) = &random_spec {
                cases.extend(spec.generate(cases.len())?);
            }
            let violations = conjecture_scan::<f64>(&cases)?;

            create_dir(&out)?;
            io::write_violations_csv(&violations, create_file(&out.join("violations.csv"))?)?;
            let ring_count = max - min + 1;
            let manifest = json!({
                "rings": { "min": min, "max": max },
                "random": random_spec,
                "cases": cases.iter().map(|c| json!({
                    "id": c.id,
                    "family": if c.id < ring_count { "ring" } else { "random" },
                    "nodes": c.graph.node_count(),
                    "edges": c.graph.edges().collect::<Vec<_>>(),
                    "candidates": c.links.len(),
                })).collect::<Vec<_>>(),
                "violation_count": violations.len(),
            });
            io::write_json(&out.join("corpus_manifest.json"), &manifest)?;
            writeln!(
                stdout,
                "{} graphs, {} candidate links, {} violations",
                cases.len(),
                cases.iter().map(|c| c.links.len()).sum::<usize>(),
                violations.len()
            )?;
        }
    }
    Ok(())
}
