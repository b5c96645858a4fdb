use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use abfactor::avoidance::{CheckOptions, Params};
use abfactor::graph::VertexSet;
use abfactor::Limits;
use abfactor_cli::campaign;
use abfactor_cli::commands::{self, parse_edge, AvoidMode};
use abfactor_cli::config::CampaignConfig;
use abfactor_cli::Exit;
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "abfactor",
    version,
    about = "Exact [a,b]-factor and isolated toughness checks"
)]
struct Cli {
    /// Seed override for campaigns
    #[arg(long, global = true, env = "ABFACTOR_SEED")]
    seed: Option<u64>,

    /// Largest vertex count for exhaustive subset scans
    #[arg(long, global = true, env = "ABFACTOR_CAP_N")]
    cap_n: Option<usize>,

    /// Largest number of deletions enumerated per instance
    #[arg(long, global = true, env = "ABFACTOR_CAP_DELETIONS")]
    cap_deletions: Option<usize>,

    /// Node budget for factor search
    #[arg(long, global = true, env = "ABFACTOR_BUDGET")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isolated toughness of each graph6 line
    Toughness {
        /// Input file (stdin if omitted or "-")
        input: Option<PathBuf>,
    },
    /// Decide [a,b]-factor existence for each graph6 line
    Factor {
        #[arg(short, long)]
        a: usize,
        #[arg(short, long)]
        b: usize,
        /// Print an explicit factor when one exists
        #[arg(long)]
        find: bool,
        input: Option<PathBuf>,
    },
    /// Factors that survive deleting vertices, edges or matchings
    Avoid {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(short, long)]
        a: Option<usize>,
        #[arg(short, long)]
        b: Option<usize>,
        /// Star size for edge mode
        #[arg(short, long)]
        m: Option<usize>,
        /// Number of deleted vertices, edges or matching edges
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: Option<usize>,
        /// Edge to avoid, as u-v
        #[arg(short, long, value_parser = parse_edge)]
        edge: Option<abfactor::graph::Edge>,
        /// Only delete this vertex set (vertices mode), as 3,7,9
        #[arg(long)]
        delete: Option<String>,
        /// Evaluate the conclusion even when a premise fails
        #[arg(long)]
        always: bool,
        input: Option<PathBuf>,
    },
    /// Build the extremal graph for (m,a,b,n) and show its failing deletion
    Extremal {
        m: usize,
        a: usize,
        b: usize,
        n: usize,
    },
    /// Run a campaign described by a key = value config file
    Campaign {
        config: PathBuf,
        /// Write the JSON report here instead of the config's json_out
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the CSV summary here instead of the config's csv_out
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Vertices,
    Edges,
    Matching,
    Edge,
    Pairs,
    Hierarchy,
    Inner,
}

impl From<Mode> for AvoidMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Vertices => AvoidMode::Vertices,
            Mode::Edges => AvoidMode::Edges,
            Mode::Matching => AvoidMode::Matching,
            Mode::Edge => AvoidMode::Edge,
            Mode::Pairs => AvoidMode::Pairs,
            Mode::Hierarchy => AvoidMode::Hierarchy,
            Mode::Inner => AvoidMode::Inner,
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> anyhow::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .context("reading stdin")?;
        }
    }
    Ok(text)
}

fn parse_set(s: &str) -> anyhow::Result<VertexSet> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .with_context(|| format!("bad vertex {v:?}"))
        })
        .collect()
}

fn run(cli: Cli) -> anyhow::Result<Exit> {
    let mut limits = Limits::default();
    if let Some(n) = cli.cap_n {
        limits.forall_max_n = n;
    }
    if let Some(d) = cli.cap_deletions {
        limits.max_deletions = d;
    }
    if let Some(b) = cli.budget {
        limits.search_budget = b;
    }
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let exit = match cli.command {
        Command::Toughness { input } => {
            commands::toughness(&read_input(&input)?, &mut out, &mut err)?
        }
        Command::Factor { a, b, find, input } => commands::factor(
            &read_input(&input)?,
            a,
            b,
            find,
            &limits,
            &mut out,
            &mut err,
        )?,
        Command::Avoid {
            mode,
            a,
            b,
            m,
            n,
            k,
            edge,
            delete,
            always,
            input,
        } => {
            let opts = CheckOptions {
                limits,
                evaluate_vacuous: always,
                vertex_deletions: delete
                    .as_deref()
                    .map(parse_set)
                    .transpose()?
                    .map(|s| vec![s]),
                ..CheckOptions::default()
            };
            let params = Params {
                a,
                b,
                n,
                m,
                k,
                edge,
            };
            commands::avoid(
                &read_input(&input)?,
                mode.into(),
                &params,
                &opts,
                &mut out,
                &mut err,
            )?
        }
        Command::Extremal { m, a, b, n } => {
            commands::extremal(m, a, b, n, &limits, &mut out, &mut err)?
        }
        Command::Campaign { config, json, csv } => {
            let text = std::fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let mut cfg: CampaignConfig = match text.parse() {
                Ok(c) => c,
                Err(e) => {
                    writeln!(err, "{}: {e}", config.display())?;
                    return Ok(Exit::Error);
                }
            };
            if let Some(seed) = cli.seed {
                cfg.seed_list = vec![seed];
            }
            if let Some(n) = cli.cap_n {
                cfg.cap_n = n;
            }
            if let Some(d) = cli.cap_deletions {
                cfg.cap_deletions = d;
            }
            if let Some(b) = cli.budget {
                cfg.search_budget = b;
            }
            let report = campaign::run(&cfg);
            let body = serde_json::to_string_pretty(&report)?;
            match json.or(cfg.json_out.clone()) {
                Some(p) => std::fs::write(&p, body + "\n")
                    .with_context(|| format!("writing {}", p.display()))?,
                None => writeln!(out, "{body}")?,
            }
            if let Some(p) = csv.or(cfg.csv_out.clone()) {
                let f = std::fs::File::create(&p)
                    .with_context(|| format!("writing {}", p.display()))?;
                report.write_csv(f)?;
            }
            let t = &report.totals;
            writeln!(
                err,
                "{} instances: {} verified, {} counterexample, {} capped, {} error, {} expected failures, {} rejected as vacuous",
                t.instances, t.verified, t.counterexample, t.capped, t.error, t.expected_failure, t.rejected_vacuous
            )?;
            if t.counterexample > 0 {
                Exit::No
            } else if t.error > 0 {
                Exit::Error
            } else {
                Exit::Yes
            }
        }
    };
    Ok(exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(exit) => ExitCode::from(exit.code() as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(Exit::Error.code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
