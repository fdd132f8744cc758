//! Run reports and their JSON and CSV renderings.

use serde::Serialize;
use serde_json::Value;

use privlabel_graph::LabelDomain;
use privlabel_verify::{metrics, MetricsReport, NamedVerdict, Verdict};

use crate::algorithm::{execute, Params, RoundSummary};
use crate::config::{ConfigResult, RunConfig};
use crate::table::{compare, Comparison};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSummary {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub arboricity: Option<usize>,
}

/// Field order is the serialization order; keep it stable.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub algorithm: &'static str,
    pub graph: GraphSummary,
    pub seed: u64,
    pub parameters: Params,
    pub rounds: RoundSummary,
    pub metrics: Option<MetricsReport>,
    pub verdicts: Vec<NamedVerdict>,
    pub known_bounds: Option<Comparison>,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domains: Option<LabelDomain>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    VerdictFailed,
    Incomplete,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::VerdictFailed => 1,
            Outcome::Incomplete => 3,
        }
    }
}

impl Report {
    pub fn outcome(&self) -> Outcome {
        if !self.rounds.complete {
            Outcome::Incomplete
        } else if self.verdicts.iter().all(|v| v.verdict.passed()) {
            Outcome::Ok
        } else {
            Outcome::VerdictFailed
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn run(config: &RunConfig) -> ConfigResult<Report> {
    let input = config.graph.load()?;
    let params = config.algorithm.resolve(&config.params, &input)?;
    let exec = execute(config.algorithm, &input, &params, config.seed)?;
    let g = &input.graph;
    let metrics = match (&exec.domains, exec.declared_palette) {
        (Some(d), Some(palette)) => Some(metrics(d, palette, exec.rounds.count)),
        _ => None,
    };
    let known_bounds = compare(
        config.algorithm,
        exec.expected.as_ref(),
        metrics.as_ref().map(|m| m.solution_domain_min),
        metrics.as_ref().and_then(|m| m.contingency_factor),
    );
    Ok(Report {
        algorithm: config.algorithm.tag(),
        graph: GraphSummary {
            source: input.description.clone(),
            n: g.n(),
            m: g.m(),
            max_degree: g.max_degree(),
            arboricity: input.arboricity,
        },
        seed: config.seed,
        parameters: params,
        rounds: exec.rounds,
        metrics,
        verdicts: exec.verdicts,
        known_bounds,
        details: exec.details,
        domains: if config.with_domains { exec.domains } else { None },
    })
}

/// One CSV record per run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CsvRecord {
    pub algorithm: &'static str,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub rounds: usize,
    pub round_kind: &'static str,
    pub complete: bool,
    pub problem_domain_size: Option<u64>,
    pub solution_domain_min: Option<usize>,
    pub solution_domain_median: Option<usize>,
    pub solution_domain_max: Option<usize>,
    pub contingency_factor: Option<String>,
    pub verdicts_passed: usize,
    pub verdicts_total: usize,
    /// Names of the non-passing verdicts, `;`-separated.
    pub failed: String,
}

impl From<&Report> for CsvRecord {
    fn from(r: &Report) -> Self {
        let m = r.metrics.as_ref();
        CsvRecord {
            algorithm: r.algorithm,
            graph: r.graph.source.clone(),
            n: r.graph.n,
            m: r.graph.m,
            max_degree: r.graph.max_degree,
            seed: r.seed,
            rounds: r.rounds.count,
            round_kind: r.rounds.kind,
            complete: r.rounds.complete,
            problem_domain_size: m.map(|m| m.problem_domain_size),
            solution_domain_min: m.map(|m| m.solution_domain_min),
            solution_domain_median: m.map(|m| m.solution_domain_median),
            solution_domain_max: m.map(|m| m.solution_domain_max),
            contingency_factor: m.and_then(|m| m.contingency_factor).map(|f| f.to_string()),
            verdicts_passed: r.verdicts.iter().filter(|v| v.verdict.passed()).count(),
            verdicts_total: r.verdicts.len(),
            failed: r
                .verdicts
                .iter()
                .filter(|v| v.verdict != Verdict::Pass)
                .map(|v| v.name.as_str())
                .collect::<Vec<_>>()
                .join(";"),
        }
    }
}

pub fn to_csv<'a>(reports: impl IntoIterator<Item = &'a Report>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(CsvRecord::from(r)).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}
