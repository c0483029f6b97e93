use std::path::Path;
use std::process::{Command, Output};

use colourbias::config::ExperimentFile;
use colourbias::io::{read_edge_list, write_edge_list};
use colourbias::runner::{run_experiment_batch, run_process_batch};
use colourbias_core::constructions::{build, ConstructionSpec};
use colourbias_core::random::ProcessOptions;
use colourbias_core::{Graph, Rational};
use serde_json::Value;

fn cli(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colourbias")).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn edge_list_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(ConstructionSpec::small(12, 2, Rational::new(2, 3))).unwrap();
    let path = dir.path().join("f.txt");
    write_edge_list(&path, &f.graph, Some(&f.colouring)).unwrap();
    let back = read_edge_list(&path).unwrap();
    assert_eq!(back.graph, f.graph);
    assert_eq!(back.colouring.unwrap(), f.colouring);
}

#[test]
fn construct_then_monomatch() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&cli(dir.path(), &["construct", "--variant", "med", "--n", "12", "--r", "2", "--alpha", "3/4", "--out", "f.txt"]));
    let report: Value = serde_json::from_str(&stdout(&cli(dir.path(), &["monomatch", "--in", "f.txt", "--report", "json"]))).unwrap();
    assert_eq!(report["size"], 5);
    assert_eq!(report["per_colour"], serde_json::json!([5, 3]));
    let w = &report["witness"];
    assert_eq!(w["matching_number"], 5);
    assert_eq!(w["deficiency"], 2);
    // A missing alpha for a variant that needs one is a usage error.
    assert!(!cli(dir.path(), &["construct", "--variant", "small", "--n", "12", "--r", "2"]).status.success());
}

#[test]
fn hamilton_prints_a_certified_cycle() {
    let dir = tempfile::tempdir().unwrap();
    // C_6 minus the edge 0–5, with the matching supplying it
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
    write_edge_list(&dir.path().join("h.txt"), &g, None).unwrap();
    std::fs::write(dir.path().join("m.txt"), "6 1\n0 5\n").unwrap();
    let out = stdout(&cli(dir.path(), &["hamilton", "--in", "h.txt", "--matching", "m.txt"]));
    let mut lines = out.lines();
    let order: Vec<usize> = lines.next().unwrap().strip_prefix("cycle ").unwrap().split(' ').map(|s| s.parse().unwrap()).collect();
    assert_eq!(order.len(), 6);
    let certs: Vec<&str> = lines.collect();
    assert_eq!(certs.len(), 6);
    assert!(certs.contains(&"0 5 M"));
    assert_eq!(certs.iter().filter(|l| l.ends_with(" H")).count(), 5);

    // The Petersen graph has no Hamilton cycle; the command must fail.
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let petersen = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
    write_edge_list(&dir.path().join("p.txt"), &petersen, None).unwrap();
    assert!(!cli(dir.path(), &["hamilton", "--in", "p.txt", "--budget", "20000"]).status.success());
}

#[test]
fn forest_and_process_commands() {
    let dir = tempfile::tempdir().unwrap();
    stdout(&cli(dir.path(), &["construct", "--variant", "large", "--n", "9", "--r", "2", "--out", "k.txt"]));
    let plan: Value = serde_json::from_str(&stdout(&cli(dir.path(), &["forest", "--in", "k.txt", "--target", "5", "--json"]))).unwrap();
    assert_eq!(plan["reached_target"], true);
    assert_eq!(plan["size"], 5);
    let rows = stdout(&cli(dir.path(), &["process", "--n", "30", "--seeds", "0..4", "--json"]));
    let rows: Vec<Value> = rows.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert!(r["tau_ham"].as_u64() >= r["tau_mindeg2"].as_u64());
    }
}

#[test]
fn experiment_appends_records() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("e.toml"),
        "n = 30\nr = 2\neps = \"1/4\"\nseeds = \"0..3\"\n[host]\nkind = \"complete\"\n[colouring]\nkind = \"construction\"\nvariant = \"large\"\n",
    )
    .unwrap();
    for _ in 0..2 {
        let o = cli(dir.path(), &["experiment", "--config", "e.toml", "--out", "r.jsonl", "--cycles"]);
        assert!(o.status.success());
    }
    let text = std::fs::read_to_string(dir.path().join("r.jsonl")).unwrap();
    let recs: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 6);
    for r in &recs {
        assert_eq!(r["found"], true);
        assert!(r["fatal"].is_null());
        let bias = r["achieved_bias"].as_u64().unwrap();
        assert!((15..=20).contains(&bias));
        assert_eq!(r["cycle"].as_array().unwrap().len(), 30);
    }
}

#[test]
fn config_to_batch_in_memory() {
    let file = ExperimentFile::parse(
        "n = 40\nr = 3\nseeds = [1, 2]\n[host]\nkind = \"gnp\"\np = 0.5\n[colouring]\nkind = \"random\"\n[adversary]\nalpha = \"3/4\"\nstrategy = { kind = \"greedy\" }\n",
    )
    .unwrap();
    let cfg = file.to_config(Path::new(".")).unwrap();
    let mut buf = Vec::new();
    let summary = run_experiment_batch(&cfg, &mut buf, false).unwrap();
    assert_eq!((summary.records, summary.fatal), (2, 0));
    let lines: Vec<Value> = String::from_utf8(buf).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let mut seeds: Vec<u64> = lines.iter().map(|r| r["seed"].as_u64().unwrap()).collect();
    seeds.sort_unstable();
    assert_eq!(seeds, vec![1, 2]);
    assert!(lines.iter().all(|r| r.get("cycle").is_none_or(Value::is_null)));

    let rows = run_process_batch(20, &[3, 1, 2], &ProcessOptions::default(), std::io::sink()).unwrap();
    assert_eq!(rows.iter().map(|r| r.seed).collect::<Vec<_>>(), vec![1, 2, 3]);
}
