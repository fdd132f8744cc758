//! Run configuration: graph sources, generator specs and raw parameters.

use std::collections::BTreeMap;
use std::path::PathBuf;

use thiserror::Error;

use privlabel_graph::{generate, load_edge_list, GeneratorKind, GeneratorSpec, Graph, GraphError};

use crate::algorithm::Algorithm;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("unknown algorithm `{name}`; known tags: {known}")]
    UnknownAlgorithm { name: String, known: String },
    #[error("parameter `{key}` is not accepted by {algorithm}; accepted: {accepted}")]
    UnknownParameter { algorithm: &'static str, key: String, accepted: String },
    #[error("parameter `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },
    #[error("parameter `{key}` is required by {algorithm}")]
    MissingParameter { algorithm: &'static str, key: &'static str },
    #[error("generator spec `{spec}`: {reason}")]
    Generator { spec: String, reason: String },
    #[error("graph: {0}")]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{algorithm} rejected the input: {reason}")]
    Rejected { algorithm: &'static str, reason: String },
    #[error("suite: {0}")]
    Suite(String),
}

pub type ConfigResult<T> = Result<T, ConfigError>;

/// Parses `kind:key=value,key=value`, for instance
/// `gnp:n=1024,p=0.01,max_degree=20,seed=7`.
pub fn parse_generator(text: &str) -> ConfigResult<GeneratorSpec> {
    let err = |reason: String| ConfigError::Generator { spec: text.to_string(), reason };
    let (kind, rest) = text.split_once(':').unwrap_or((text, ""));
    let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
    for pair in rest.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| err(format!("expected key=value, got `{pair}`")))?;
        if fields.insert(k.trim(), v.trim()).is_some() {
            return Err(err(format!("`{k}` given twice")));
        }
    }
    let allowed: &[&str] = match kind {
        "clique" | "path" => &["n", "seed"],
        "random-tree" => &["n", "max_degree", "seed"],
        "gnp" => &["n", "p", "max_degree", "seed"],
        "forest-union" => &["n", "forests", "seed"],
        _ => return Err(err(format!("unknown kind `{kind}`; known: clique, path, random-tree, gnp, forest-union"))),
    };
    if let Some(k) = fields.keys().find(|k| !allowed.contains(k)) {
        return Err(err(format!("`{k}` does not apply to {kind}; accepted: {}", allowed.join(", "))));
    }
    let int = |key: &str| -> ConfigResult<Option<usize>> {
        fields
            .get(key)
            .map(|v| v.parse::<usize>().map_err(|_| err(format!("`{key}` must be a non-negative integer, got `{v}`"))))
            .transpose()
    };
    let need = |key: &str| -> ConfigResult<usize> { int(key)?.ok_or_else(|| err(format!("`{key}` is required"))) };
    let seed = fields
        .get("seed")
        .map(|v| v.parse::<u64>().map_err(|_| err(format!("`seed` must be a non-negative integer, got `{v}`"))))
        .transpose()?
        .unwrap_or(0);
    let kind = match kind {
        "clique" => GeneratorKind::Clique { n: need("n")? },
        "path" => GeneratorKind::Path { n: need("n")? },
        "random-tree" => GeneratorKind::RandomTree { n: need("n")?, max_degree: int("max_degree")? },
        "gnp" => {
            let p = fields.get("p").ok_or_else(|| err("`p` is required".into()))?;
            let p = p.parse::<f64>().map_err(|_| err(format!("`p` must be a number, got `{p}`")))?;
            GeneratorKind::Gnp { n: need("n")?, p, max_degree: int("max_degree")? }
        }
        _ => GeneratorKind::ForestUnion { n: need("n")?, forests: need("forests")? },
    };
    Ok(GeneratorSpec::new(kind, seed))
}

/// Canonical text of a generator spec, accepted by [`parse_generator`].
pub fn generator_to_string(spec: &GeneratorSpec) -> String {
    let body = match &spec.kind {
        GeneratorKind::Clique { n } => format!("clique:n={n}"),
        GeneratorKind::Path { n } => format!("path:n={n}"),
        GeneratorKind::RandomTree { n, max_degree } => match max_degree {
            Some(d) => format!("random-tree:n={n},max_degree={d}"),
            None => format!("random-tree:n={n}"),
        },
        GeneratorKind::Gnp { n, p, max_degree } => match max_degree {
            Some(d) => format!("gnp:n={n},p={p},max_degree={d}"),
            None => format!("gnp:n={n},p={p}"),
        },
        GeneratorKind::ForestUnion { n, forests } => format!("forest-union:n={n},forests={forests}"),
    };
    format!("{body},seed={}", spec.seed)
}

/// Replaces the vertex count of a generator spec.
pub fn with_size(spec: &GeneratorSpec, size: usize) -> GeneratorSpec {
    let mut spec = spec.clone();
    match &mut spec.kind {
        GeneratorKind::Clique { n }
        | GeneratorKind::Path { n }
        | GeneratorKind::RandomTree { n, .. }
        | GeneratorKind::Gnp { n, .. }
        | GeneratorKind::ForestUnion { n, .. } => *n = size,
    }
    spec
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Generator(GeneratorSpec),
}

#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Arboricity bound certified by the generator, if any.
    pub arboricity: Option<usize>,
    pub description: String,
}

impl GraphSource {
    pub fn load(&self) -> ConfigResult<LoadedGraph> {
        match self {
            GraphSource::File(path) => {
                let text =
                    std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.clone(), source })?;
                Ok(LoadedGraph {
                    graph: load_edge_list(&text)?,
                    arboricity: None,
                    description: format!("file:{}", path.display()),
                })
            }
            GraphSource::Generator(spec) => {
                let generated = generate(spec)?;
                Ok(LoadedGraph {
                    graph: generated.graph,
                    arboricity: generated.arboricity,
                    description: generator_to_string(spec),
                })
            }
        }
    }
}

/// Splits repeated `key=value` arguments.
pub fn parse_params<S: AsRef<str>>(pairs: &[S]) -> ConfigResult<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for pair in pairs {
        let pair = pair.as_ref();
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| ConfigError::InvalidValue { key: pair.to_string(), reason: "expected key=value".into() })?;
        if out.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(ConfigError::InvalidValue { key: k.to_string(), reason: "given twice".into() });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub graph: GraphSource,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    /// Include every entity's domain in the report.
    pub with_domains: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_round_trip() {
        for text in [
            "gnp:n=1024,p=0.01,max_degree=20,seed=7",
            "clique:n=4,seed=0",
            "random-tree:n=100,seed=3",
            "forest-union:n=100,forests=2,seed=7",
            "path:n=64,seed=0",
        ] {
            assert_eq!(generator_to_string(&parse_generator(text).unwrap()), text);
        }
        assert_eq!(parse_generator("clique:n=4").unwrap().seed, 0);
    }

    #[test]
    fn generator_errors_name_the_field() {
        let e = parse_generator("gnp:n=10").unwrap_err().to_string();
        assert!(e.contains("`p` is required"), "{e}");
        let e = parse_generator("clique:n=4,p=0.1").unwrap_err().to_string();
        assert!(e.contains("`p` does not apply"), "{e}");
        assert!(parse_generator("wheel:n=4").is_err());
        assert!(parse_generator("path:n=x").is_err());
    }

    #[test]
    fn params_split() {
        let p = parse_params(&["c=4", "eps = 0.5"]).unwrap();
        assert_eq!(p["eps"], "0.5");
        assert!(parse_params(&["c"]).is_err());
        assert!(parse_params(&["c=1", "c=2"]).is_err());
    }
}
