use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

use privlabel_cli::bench::RowStatus;
use privlabel_cli::report::to_csv;
use privlabel_cli::{parse_generator, render_table, run, run_suite, Algorithm, GraphSource, Outcome, RunConfig, Suite};

fn privlabel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_privlabel")).args(args).output().unwrap()
}

fn config(algorithm: Algorithm, gen: &str, params: &[(&str, &str)], seed: u64) -> RunConfig {
    RunConfig {
        algorithm,
        graph: GraphSource::Generator(parse_generator(gen).unwrap()),
        params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect::<BTreeMap<_, _>>(),
        seed,
        with_domains: false,
    }
}

fn input_for(algorithm: Algorithm) -> &'static str {
    match algorithm {
        Algorithm::Cv3Delta => "random-tree:n=300,seed=1",
        Algorithm::ArboricityColoring | Algorithm::ForestHPartition | Algorithm::HPartition => {
            "forest-union:n=300,forests=2,seed=1"
        }
        _ => "gnp:n=200,p=0.03,max_degree=8,seed=1",
    }
}

#[test]
fn every_tag_runs_and_passes() {
    for algorithm in Algorithm::ALL {
        assert_eq!(Algorithm::from_tag(algorithm.tag()).unwrap(), algorithm);
        let report = run(&config(algorithm, input_for(algorithm), &[], 3)).unwrap();
        assert_eq!(report.outcome(), Outcome::Ok, "{}: {:?}", algorithm.tag(), report.verdicts);
        assert!(!report.verdicts.is_empty());
    }
}

#[test]
fn random_coloring_is_one_round() {
    let report =
        run(&config(Algorithm::RandomColoring, "gnp:n=1024,p=0.01,max_degree=20,seed=7", &[], 7)).unwrap();
    assert_eq!(report.rounds.count, 1);
    assert_eq!(report.parameters.values["c"], serde_json::json!(4.0));
    let alias = Algorithm::from_tag("generic-random-coloring").unwrap();
    assert_eq!(alias, Algorithm::RandomColoring);
}

#[test]
fn defaults_are_echoed() {
    let report = run(&config(Algorithm::NetworkDecomposition, "path:n=1024", &[], 0)).unwrap();
    assert_eq!(report.parameters.values["B"], serde_json::json!(20));
    assert_eq!(report.parameters.values["c"], serde_json::json!(4));
    let report = run(&config(Algorithm::HPartition, "forest-union:n=64,forests=3", &[], 0)).unwrap();
    assert_eq!(report.parameters.values["a"], serde_json::json!(3));
    assert_eq!(report.parameters.values["eps"], serde_json::json!(1.0));
}

#[test]
fn arboricity_must_be_given_for_files() {
    let dir = std::env::temp_dir().join("privlabel-cli-test-arb");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("path.txt");
    std::fs::write(&path, "0 1\n1 2\n").unwrap();
    let mut c = config(Algorithm::HPartition, "path:n=3", &[], 0);
    c.graph = GraphSource::File(path);
    let e = run(&c).unwrap_err().to_string();
    assert!(e.contains("`a` is required"), "{e}");
}

#[test]
fn schema_errors_name_the_field() {
    let e = run(&config(Algorithm::RandomColoring, "path:n=10", &[("p", "2")], 0)).unwrap_err().to_string();
    assert!(e.contains("`p`") && e.contains("accepted: c"), "{e}");
    let e = run(&config(Algorithm::KuhnDefectiveEdge, "path:n=10", &[("i", "two")], 0)).unwrap_err().to_string();
    assert!(e.contains("`i`"), "{e}");
    let e = run(&config(Algorithm::EdgeRandom, "path:n=10", &[("c", "-1")], 0)).unwrap_err().to_string();
    assert!(e.contains("`c`"), "{e}");
}

#[test]
fn exit_codes() {
    let out = privlabel(&["run", "--algo", "random-coloring", "--gen", "path:n=8", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = privlabel(&["run", "--algo", "random-coloring", "--gen", "path:n=8", "--param", "q=1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`q`"));
    let out = privlabel(&["run", "--algo", "no-such-thing", "--gen", "path:n=8"]);
    assert_eq!(out.status.code(), Some(2));
    let out = privlabel(&["run", "--algo", "cv-3delta", "--gen", "clique:n=5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = privlabel(&["run", "--algo", "maximal-matching", "--gen", "path:n=200", "--param", "max_rounds=1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = privlabel(&["run", "--algo", "delta2-coloring", "--gen", "gnp:n=100,p=0.05,seed=2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["run", "--algo", "dominating-edge-coloring", "--gen", "gnp:n=128,p=0.05,seed=4", "--seed", "9"];
    let a = privlabel(&args);
    let b = privlabel(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_field_order() {
    let report = run(&config(Algorithm::ForestId, "clique:n=5", &[], 0)).unwrap().to_json();
    let keys = ["\"algorithm\"", "\"graph\"", "\"seed\"", "\"parameters\"", "\"rounds\"", "\"metrics\"", "\"verdicts\"", "\"known_bounds\"", "\"details\""];
    let positions: Vec<usize> = keys.iter().map(|k| report.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    assert!(!report.contains("\"domains\""));
    let mut c = config(Algorithm::ForestId, "clique:n=5", &[], 0);
    c.with_domains = true;
    assert!(run(&c).unwrap().to_json().contains("\"domains\""));
}

#[test]
fn csv_has_one_row_per_run() {
    let reports: Vec<_> =
        (0..3).map(|s| run(&config(Algorithm::EdgeDelta2, "gnp:n=60,p=0.1,seed=1", &[], s)).unwrap()).collect();
    let text = to_csv(&reports);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers[0], "algorithm");
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[2][5], "2");
}

#[test]
fn empty_suite() {
    let suite = Suite::parse("", Path::new(".")).unwrap();
    let out = run_suite(&suite);
    assert!(out.summary.is_empty());
    assert_eq!(out.exit_code(), 0);
    assert_eq!(render_table(&out.summary).lines().count(), 2);

    let dir = std::env::temp_dir().join("privlabel-cli-test-empty");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.toml");
    std::fs::write(&path, "# nothing\n").unwrap();
    let out = privlabel(&["bench", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_rows_do_not_stop_the_others() {
    let text = r#"
[[row]]
algo = "defective-coloring"
gen = "path:n=20"
params = { p = 5 }

[[row]]
algo = "no-such-algorithm"
gen = "path:n=20"

[[row]]
algo = "forest-id"
gen = "gnp:n=50,p=0.1"
sizes = [30, 60]
seeds = [1, 2]
"#;
    let out = run_suite(&Suite::parse(text, Path::new(".")).unwrap());
    assert_eq!(out.summary.len(), 3);
    assert_eq!(out.summary[0].status, RowStatus::Error);
    assert!(out.summary[0].error.as_deref().unwrap().contains("p must be"));
    assert_eq!(out.summary[1].status, RowStatus::Error);
    assert_eq!(out.summary[2].status, RowStatus::Ok);
    assert_eq!(out.summary[2].runs, 4);
    assert_eq!(out.summary[2].sizes, vec![30, 60]);
    assert_eq!(out.exit_code(), 1);
    assert!(render_table(&out.summary).contains("ERROR"));
}

#[test]
fn suite_rejects_unknown_fields() {
    let e = Suite::parse("[[row]]\nalgo = \"forest-id\"\ngen = \"path:n=4\"\nsead = 3\n", Path::new("."));
    assert!(e.unwrap_err().to_string().contains("sead"));
}

#[test]
fn default_suite_covers_the_table() {
    let suite = Suite::default_suite();
    let out = run_suite(&suite);
    assert_eq!(out.summary.len(), 12);
    for row in &out.summary {
        assert_eq!(row.status, RowStatus::Ok, "{row:?}");
        assert!(row.known_bounds.is_some());
    }
    let tags: std::collections::BTreeSet<&str> = out.summary.iter().map(|r| r.algorithm.as_str()).collect();
    assert_eq!(tags.len(), 12);
}

#[test]
fn generate_writes_an_edge_list() {
    let out = privlabel(&["generate", "--gen", "clique:n=4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let g = privlabel_graph::load_edge_list(&text).unwrap();
    assert_eq!((g.n(), g.m()), (4, 6));
}
