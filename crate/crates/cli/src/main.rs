use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use privlabel_cli::config::{generator_to_string, parse_params};
use privlabel_cli::report::to_csv;
use privlabel_cli::{parse_generator, render_table, run, run_suite, Algorithm, GraphSource, RunConfig, Suite};
use privlabel_graph::{generate, to_edge_list};

#[derive(Parser)]
#[command(name = "privlabel", version, about = "Inherently private distributed labeling algorithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RunFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFormat {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm and check its output.
    Run {
        /// Algorithm tag; `privlabel list` shows them.
        #[arg(long)]
        algo: String,
        /// Edge-list file.
        #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
        graph: Option<PathBuf>,
        /// Generator spec such as `gnp:n=1024,p=0.01,max_degree=20,seed=1`.
        #[arg(long)]
        gen: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Algorithm parameter `key=value`; repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: RunFormat,
        /// Include every entity's label domain in the report.
        #[arg(long)]
        with_domains: bool,
    },
    /// Write a generated graph as an edge list.
    Generate {
        #[arg(long)]
        gen: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a suite file, or the built-in suite when none is given.
    Bench {
        suite: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: BenchFormat,
    },
    /// List algorithm tags.
    List,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

enum Failure {
    Config(privlabel_cli::ConfigError),
    Other(anyhow::Error),
}

impl From<privlabel_cli::ConfigError> for Failure {
    fn from(e: privlabel_cli::ConfigError) -> Self {
        Failure::Config(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn dispatch(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Run { algo, graph, gen, seed, params, out, format, with_domains } => {
            let graph = match (graph, gen) {
                (Some(path), _) => GraphSource::File(path),
                (None, Some(text)) => GraphSource::Generator(parse_generator(&text)?),
                (None, None) => unreachable!("clap requires one source"),
            };
            let config = RunConfig {
                algorithm: Algorithm::from_tag(&algo)?,
                graph,
                params: parse_params(&params)?,
                seed,
                with_domains,
            };
            let report = run(&config)?;
            let text = match format {
                RunFormat::Json => report.to_json(),
                RunFormat::Csv => to_csv([&report]),
            };
            emit(out.as_deref(), &text)?;
            Ok(report.outcome().exit_code() as u8)
        }
        Command::Generate { gen, out } => {
            let spec = parse_generator(&gen)?;
            let generated = generate(&spec).map_err(privlabel_cli::ConfigError::from)?;
            let mut text = format!("# {}\n", generator_to_string(&spec));
            text.push_str(&to_edge_list(&generated.graph));
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Bench { suite, out, format } => {
            let suite = match suite {
                Some(path) => Suite::load(&path)?,
                None => Suite::default_suite(),
            };
            let output = run_suite(&suite);
            let text = match format {
                BenchFormat::Table => render_table(&output.summary),
                BenchFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&output).context("serializing bench output")?;
                    s.push('\n');
                    s
                }
                BenchFormat::Csv => to_csv(&output.runs),
            };
            emit(out.as_deref(), &text)?;
            Ok(output.exit_code() as u8)
        }
        Command::List => {
            for a in Algorithm::ALL {
                println!("{:<26} {}", a.tag(), a.round_kind());
            }
            Ok(0)
        }
    }
}
