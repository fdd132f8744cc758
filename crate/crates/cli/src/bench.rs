//! Batch runs from a suite file and the summary table.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithm::Algorithm;
use crate::config::{parse_generator, with_size, ConfigError, ConfigResult, GraphSource, RunConfig};
use crate::report::{run, Outcome, Report};
use crate::table::{table_row, TableRow};

pub const DEFAULT_SUITE: &str = include_str!("../suites/default.toml");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SuiteFile {
    #[serde(default)]
    row: Vec<RowSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Seeds {
    Count(u64),
    List(Vec<u64>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RowSpec {
    algo: String,
    gen: Option<String>,
    graph: Option<PathBuf>,
    sizes: Option<Vec<usize>>,
    seeds: Option<Seeds>,
    #[serde(default)]
    params: BTreeMap<String, toml::Value>,
}

/// A parsed suite row: the runs it expands to, or why it cannot run.
#[derive(Debug)]
pub struct SuiteRow {
    pub algo: String,
    pub graph: String,
    pub runs: Result<Vec<RunConfig>, String>,
}

#[derive(Debug)]
pub struct Suite {
    pub rows: Vec<SuiteRow>,
}

fn param_text(v: &toml::Value) -> String {
    match v {
        toml::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Suite {
    /// Parses a suite; graph paths are taken relative to `base`.
    pub fn parse(text: &str, base: &Path) -> ConfigResult<Suite> {
        let file: SuiteFile = toml::from_str(text).map_err(|e| ConfigError::Suite(e.to_string()))?;
        let rows = file.row.into_iter().map(|spec| expand(spec, base)).collect();
        Ok(Suite { rows })
    }

    pub fn load(path: &Path) -> ConfigResult<Suite> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.into(), source })?;
        Suite::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn default_suite() -> Suite {
        Suite::parse(DEFAULT_SUITE, Path::new(".")).expect("built-in suite parses")
    }
}

fn expand(spec: RowSpec, base: &Path) -> SuiteRow {
    let graph_text = spec
        .gen
        .clone()
        .or_else(|| spec.graph.as_ref().map(|p| p.display().to_string()))
        .unwrap_or_default();
    let runs = (|| -> Result<Vec<RunConfig>, String> {
        let algorithm = Algorithm::from_tag(&spec.algo).map_err(|e| e.to_string())?;
        let sources = match (&spec.gen, &spec.graph) {
            (Some(text), None) => {
                let gen = parse_generator(text).map_err(|e| e.to_string())?;
                match &spec.sizes {
                    Some(sizes) => sizes.iter().map(|&n| GraphSource::Generator(with_size(&gen, n))).collect(),
                    None => vec![GraphSource::Generator(gen)],
                }
            }
            (None, Some(path)) if spec.sizes.is_none() => vec![GraphSource::File(base.join(path))],
            (None, Some(_)) => return Err("`sizes` applies to generated graphs only".into()),
            _ => return Err("exactly one of `gen` and `graph` is required".into()),
        };
        let seeds: Vec<u64> = match spec.seeds {
            None => vec![0],
            Some(Seeds::Count(k)) => (0..k).collect(),
            Some(Seeds::List(list)) => list,
        };
        let params: BTreeMap<String, String> = spec.params.iter().map(|(k, v)| (k.clone(), param_text(v))).collect();
        Ok(sources
            .iter()
            .flat_map(|source| {
                seeds.iter().map(|&seed| RunConfig {
                    algorithm,
                    graph: source.clone(),
                    params: params.clone(),
                    seed,
                    with_domains: false,
                })
            })
            .collect())
    })();
    SuiteRow { algo: spec.algo, graph: graph_text, runs }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Ok,
    Failed,
    Error,
}

/// One summary row, aggregated over every size and seed of a suite row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub algorithm: String,
    pub graph: String,
    pub sizes: Vec<usize>,
    pub runs: usize,
    pub rounds_max: Option<usize>,
    pub rounds_mean: Option<f64>,
    pub solution_domain_min: Option<usize>,
    /// Largest contingency factor over the runs.
    pub contingency_factor: Option<String>,
    pub passed: usize,
    pub incomplete: usize,
    pub status: RowStatus,
    pub error: Option<String>,
    pub known_bounds: Option<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchOutput {
    pub summary: Vec<SummaryRow>,
    pub runs: Vec<Report>,
}

impl BenchOutput {
    pub fn exit_code(&self) -> i32 {
        if self.summary.iter().all(|r| r.status == RowStatus::Ok) {
            0
        } else {
            1
        }
    }
}

pub fn run_suite(suite: &Suite) -> BenchOutput {
    let jobs: Vec<(usize, &RunConfig)> = suite
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.runs.iter().flatten().map(move |c| (i, c)))
        .collect();
    let results: Vec<(usize, ConfigResult<Report>)> = jobs.par_iter().map(|&(i, c)| (i, run(c))).collect();

    let mut summary = Vec::with_capacity(suite.rows.len());
    let mut runs = Vec::new();
    for (i, row) in suite.rows.iter().enumerate() {
        let algorithm = Algorithm::from_tag(&row.algo).ok();
        let mut out = SummaryRow {
            algorithm: row.algo.clone(),
            graph: row.graph.clone(),
            sizes: Vec::new(),
            runs: 0,
            rounds_max: None,
            rounds_mean: None,
            solution_domain_min: None,
            contingency_factor: None,
            passed: 0,
            incomplete: 0,
            status: RowStatus::Ok,
            error: None,
            known_bounds: algorithm.and_then(table_row),
        };
        if let Err(e) = &row.runs {
            out.status = RowStatus::Error;
            out.error = Some(e.clone());
        }
        let mut factor: Option<Ratio<u64>> = None;
        let mut round_sum = 0usize;
        for (_, result) in results.iter().filter(|r| r.0 == i) {
            let report = match result {
                Ok(r) => r,
                Err(e) => {
                    out.status = RowStatus::Error;
                    out.error.get_or_insert_with(|| e.to_string());
                    continue;
                }
            };
            out.runs += 1;
            if !out.sizes.contains(&report.graph.n) {
                out.sizes.push(report.graph.n);
            }
            round_sum += report.rounds.count;
            out.rounds_max = Some(out.rounds_max.unwrap_or(0).max(report.rounds.count));
            if let Some(m) = &report.metrics {
                out.solution_domain_min =
                    Some(out.solution_domain_min.map_or(m.solution_domain_min, |x| x.min(m.solution_domain_min)));
                factor = match (factor, m.contingency_factor) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                };
            }
            match report.outcome() {
                Outcome::Ok => out.passed += 1,
                Outcome::VerdictFailed => {
                    if out.status == RowStatus::Ok {
                        out.status = RowStatus::Failed;
                    }
                }
                Outcome::Incomplete => {
                    out.incomplete += 1;
                    if out.status == RowStatus::Ok {
                        out.status = RowStatus::Failed;
                    }
                }
            }
            runs.push(report.clone());
        }
        if out.runs > 0 {
            out.rounds_mean = Some(round_sum as f64 / out.runs as f64);
        }
        out.contingency_factor = factor.map(|f| f.to_string());
        summary.push(out);
    }
    BenchOutput { summary, runs }
}

pub fn render_table(rows: &[SummaryRow]) -> String {
    let header = [
        "#", "algorithm", "n", "rounds", "min domain", "contingency", "pass", "status", "table rounds",
        "table domain", "table factor",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let t = r.known_bounds;
            vec![
                (i + 1).to_string(),
                r.algorithm.clone(),
                r.sizes.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","),
                r.rounds_max.map_or("-".into(), |x| x.to_string()),
                r.solution_domain_min.map_or("-".into(), |x| x.to_string()),
                r.contingency_factor.clone().unwrap_or_else(|| "-".into()),
                format!("{}/{}", r.passed, r.runs),
                match &r.status {
                    RowStatus::Ok => "ok".into(),
                    RowStatus::Failed => "FAILED".into(),
                    RowStatus::Error => format!("ERROR: {}", r.error.as_deref().unwrap_or("")),
                },
                t.map_or("-".into(), |t| t.rounds.into()),
                t.map_or("-".into(), |t| t.solution_domain.into()),
                t.map_or("-".into(), |t| t.contingency_factor.into()),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, row: &[String]| {
        let mut s = String::new();
        for (c, w) in row.iter().zip(&widths) {
            let _ = write!(s, "{c}{}  ", " ".repeat(w - c.chars().count()));
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut out, &header.map(String::from));
    line(&mut out, &widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>());
    for row in &cells {
        line(&mut out, row);
    }
    out
}
