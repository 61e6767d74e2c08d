//! Command-line front end for graph independence complexes: property
//! analysis, complete multipartite closed forms, and cross-validation.

mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use indecomp::harness::{cross_validate, Budgets};
use indecomp::{Error, Graph, Partition};

use report::{build_analysis, build_multipartite, build_validate, to_sorted_json, CheckKind};

#[derive(Parser)]
#[command(
    name = "indecomp",
    version,
    about = "Independence complexes of finite simple graphs: shellability, \
             vertex decomposability, unmixedness, Cohen-Macaulay verdicts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a graph given in the text format
    Analyze {
        /// Graph file: '#' comments, first data line n, then "u v" edges
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated subset of checks; all of them when omitted
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<CheckKind>>,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Closed-form answers for a complete multipartite graph
    Multipartite {
        /// Class sizes as CSV, e.g. "3,1,1"
        #[arg(long)]
        parts: String,
        /// Print the graph file (text mode) or embed it (JSON mode)
        #[arg(long)]
        emit_graph: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate the general checkers against the closed forms
    Validate {
        #[arg(long, default_value_t = 8)]
        max_partition_total: usize,
        #[arg(long, default_value_t = 8)]
        max_random_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze {
            graph,
            checks,
            json,
        } => {
            let text = std::fs::read_to_string(&graph)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", graph.display())))?;
            let g = Graph::from_text(&text)?;
            let report = build_analysis(&g, &checks.unwrap_or_default())?;
            if json {
                print!("{}", to_sorted_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(0)
        }
        Command::Multipartite {
            parts,
            emit_graph,
            json,
        } => {
            let p = Partition::from_csv(&parts)?;
            let report = build_multipartite(&p, emit_graph)?;
            if json {
                print!("{}", to_sorted_json(&report));
            } else if let Some(text) = report.graph_text() {
                print!("{text}");
            } else {
                print!("{}", report.render_text());
            }
            Ok(0)
        }
        Command::Validate {
            max_partition_total,
            max_random_n,
            samples,
            seed,
            json,
        } => {
            let budgets = Budgets {
                max_partition_total,
                max_random_n,
                samples,
                seed,
            };
            let report = build_validate(cross_validate(&budgets));
            if json {
                print!("{}", to_sorted_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.passed() { 0 } else { 3 })
        }
    }
}

fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 1;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input(_) => 1,
                Error::ResourceLimit(_) => 2,
            }
        }
    }
}

fn main() {
    std::process::exit(run(std::env::args_os()));
}
