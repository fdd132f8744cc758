use num_rational::Ratio;
use serde::Serialize;

use privlabel_graph::LabelDomain;

use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedVerdict {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl NamedVerdict {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        NamedVerdict { name: name.into(), verdict }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    /// Number of labels the problem allows.
    pub problem_domain_size: u64,
    pub solution_domain_min: usize,
    /// Lower median.
    pub solution_domain_median: usize,
    pub solution_domain_max: usize,
    /// Problem domain size over the smallest solution domain; `None` when
    /// some domain is empty or there are no entities.
    #[serde(serialize_with = "ratio_text")]
    pub contingency_factor: Option<Ratio<u64>>,
    pub rounds: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<NamedVerdict>,
}

/// Writes a ratio as `"p/q"`, or `"p"` when it is an integer.
pub fn ratio_text<S: serde::Serializer>(r: &Option<Ratio<u64>>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl MetricsReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.verdict.passed())
    }

    pub fn with_verdict(mut self, name: impl Into<String>, verdict: Verdict) -> Self {
        self.verdicts.push(NamedVerdict::new(name, verdict));
        self
    }
}

/// Domain-size statistics and contingency factor of `domains` against a
/// problem domain of `declared_palette` labels.
pub fn metrics(domains: &LabelDomain, declared_palette: u64, rounds: usize) -> MetricsReport {
    let mut sizes = domains.sizes();
    sizes.sort_unstable();
    let min = sizes.first().copied().unwrap_or(0);
    let contingency_factor = (min > 0).then(|| Ratio::new(declared_palette, min as u64));
    MetricsReport {
        problem_domain_size: declared_palette,
        solution_domain_min: min,
        solution_domain_median: sizes.get(sizes.len().saturating_sub(1) / 2).copied().unwrap_or(0),
        solution_domain_max: sizes.last().copied().unwrap_or(0),
        contingency_factor,
        rounds,
        verdicts: Vec::new(),
    }
}
