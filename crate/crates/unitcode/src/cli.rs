//! Command-line front end: construction, computation, verification, and
//! export, with deterministic byte-identical output.
//!
//! Exit codes: 0 success (and all claims passing), 1 usage error,
//! 2 claim failure, 3 enumeration budget exceeded.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::code::{code_from_incidence, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::gf_linalg::incidence_matrix;
use crate::modring::ResidueRing;
use crate::unitgraph::{build_unit_graph, Bipartition};
use crate::verify::{summarize, sweep};

#[derive(Parser)]
#[command(
    name = "unitcode",
    version,
    about = "Unit graphs over Z_n, their incidence matrices, and the linear codes they span"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Print facts about the unit graph G(Z_n)
    Graph {
        /// Modulus n (at least 2)
        n: u64,
        /// Output format: text, json, dot, or matrix
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write output to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump the vertex-edge incidence matrix of G(Z_n)
    Matrix {
        /// Modulus n (at least 2)
        n: u64,
        /// Field characteristic (2 or an odd prime)
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Output format: text or json
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write output to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the parameters of the code spanned by the incidence rows
    Code {
        /// Modulus n (at least 2)
        n: u64,
        /// Field characteristic (2 or an odd prime)
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Cap on q^k codeword evaluations
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Output format: text or json
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write output to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed-form claims for a modulus or range (a..b inclusive)
    Verify {
        /// Modulus or inclusive range, e.g. 5 or 3..23
        range: String,
        /// Odd characteristic for the bipartite checks (2 selects 3)
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Cap on q^k codeword evaluations
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Output format: text or json (one report per line)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write output to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses, runs, and reports; returns the process exit code.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not usage errors.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let (result, out) = match cli.command {
        Command::Graph { n, format, out } => (cmd_graph(n, format), out),
        Command::Matrix { n, q, format, out } => (cmd_matrix(n, q, format), out),
        Command::Code {
            n,
            q,
            budget,
            format,
            out,
        } => (cmd_code(n, q, budget, format), out),
        Command::Verify {
            range,
            q,
            budget,
            format,
            out,
        } => (cmd_verify(&range, q, budget, format), out),
    };
    match result {
        Ok((output, code)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            } else {
                print!("{output}");
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 1,
            }
        }
    }
}

#[derive(Serialize)]
struct GraphReport {
    modulus: u64,
    vertices: usize,
    edges: usize,
    edge_list: Vec<(usize, usize)>,
    degree_profile: Vec<usize>,
    components: usize,
    bipartition: Option<Bipartition>,
    lambda: usize,
    witness_side: Vec<usize>,
}

fn cmd_graph(n: u64, format: Format) -> Result<(String, u8)> {
    let graph = build_unit_graph(ResidueRing::new(n)?);
    if format == Format::Dot {
        return Ok((graph.to_dot(), 0));
    }
    if format == Format::Matrix {
        return Ok((incidence_matrix(&graph).to_text(), 0));
    }
    let cut = graph.edge_connectivity();
    let report = GraphReport {
        modulus: n,
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        edge_list: graph.edges().to_vec(),
        degree_profile: graph.degree_profile(),
        components: graph.connected_components().count,
        bipartition: graph.bipartition(),
        lambda: cut.lambda,
        witness_side: cut.witness_side,
    };
    let output = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&report).expect("serializable")),
        _ => {
            let set = |vs: &[usize]| {
                let inner = vs
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{{{inner}}}")
            };
            let bipartition = match &report.bipartition {
                Some(b) => format!("{} | {}", set(&b.left), set(&b.right)),
                None => "none".to_string(),
            };
            format!(
                "G(Z_{n}): |V|={} |E|={}\nedges: {}\ndegrees: {}\ncomponents: {}\nbipartition: {}\nlambda: {}\nwitness: {}\n",
                report.vertices,
                report.edges,
                report
                    .edge_list
                    .iter()
                    .map(|(u, v)| format!("({u},{v})"))
                    .collect::<Vec<_>>()
                    .join(" "),
                report
                    .degree_profile
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                report.components,
                bipartition,
                report.lambda,
                set(&report.witness_side),
            )
        }
    };
    Ok((output, 0))
}

fn cmd_matrix(n: u64, q: u64, format: Format) -> Result<(String, u8)> {
    if format == Format::Dot {
        return Err(Error::InvalidArgument(
            "the matrix subcommand supports only text or json output".into(),
        ));
    }
    let graph = build_unit_graph(ResidueRing::new(n)?);
    let incidence = incidence_matrix(&graph);
    let output = match (format, q) {
        (Format::Json, 2) => format!(
            "{}\n",
            serde_json::to_string(&incidence.dump()).expect("serializable")
        ),
        (Format::Json, q) => format!(
            "{}\n",
            serde_json::to_string(&incidence.lift_to_prime(q)?.dump()).expect("serializable")
        ),
        (_, 2) => incidence.to_text(),
        (_, q) => incidence.lift_to_prime(q)?.to_text(),
    };
    Ok((output, 0))
}

fn cmd_code(n: u64, q: u64, budget: u64, format: Format) -> Result<(String, u8)> {
    if format != Format::Text && format != Format::Json {
        return Err(Error::InvalidArgument(
            "the code subcommand supports only text or json output".into(),
        ));
    }
    let graph = build_unit_graph(ResidueRing::new(n)?);
    let mut code = code_from_incidence(&graph, q)?;
    // One enumeration yields the distribution; d is its first positive
    // index, so this costs no more than computing d alone.
    code.weight_distribution(budget)?;
    let report = code.to_report()?;
    let output = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&report).expect("serializable")),
        _ => {
            let weights = report
                .weight_distribution
                .as_deref()
                .unwrap_or(&[])
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            format!(
                "[{}, {}, {}]_{} mds={}\nweight_distribution: {}\n",
                report.n, report.k, report.d, report.q, report.mds, weights
            )
        }
    };
    Ok((output, 0))
}

/// `a..b` (inclusive) or a single modulus.
fn parse_range(s: &str) -> Result<(u64, u64)> {
    let parse_bound = |b: &str| -> Result<u64> {
        b.trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("invalid modulus '{b}'")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse_bound(lo)?, parse_bound(hi)?),
        None => {
            let n = parse_bound(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(Error::InvalidArgument(format!(
            "empty range {lo}..{hi}"
        )));
    }
    if lo < 2 {
        return Err(Error::InvalidArgument(
            "moduli below 2 do not form a ring with units".into(),
        ));
    }
    Ok((lo, hi))
}

fn cmd_verify(range: &str, q: u64, budget: u64, format: Format) -> Result<(String, u8)> {
    if format != Format::Text && format != Format::Json {
        return Err(Error::InvalidArgument(
            "the verify subcommand supports only text or json output".into(),
        ));
    }
    let (lo, hi) = parse_range(range)?;
    let odd_q = if q == 2 { 3 } else { q };
    let reports = sweep(lo, hi, odd_q, budget);
    let summary = summarize(&reports);
    let output = match format {
        Format::Json => {
            let mut out = String::new();
            for report in &reports {
                out.push_str(&serde_json::to_string(report).expect("serializable"));
                out.push('\n');
            }
            out
        }
        _ => {
            let mut out = String::new();
            for report in &reports {
                out.push_str(&report.to_text());
            }
            out.push_str(&format!(
                "summary: rows={} applicable={} passed={} failed={} skipped_claims={} errors={}\n",
                summary.rows,
                summary.applicable,
                summary.passed,
                summary.failed,
                summary.skipped_claims,
                summary.errors
            ));
            out
        }
    };
    let code = if summary.failed > 0 || summary.errors > 0 {
        2
    } else if summary.skipped_claims > 0 {
        3
    } else {
        0
    };
    Ok((output, code))
}
