use std::path::Path;
use std::process::{Command, Output};

fn trapset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trapset")).args(args).output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sample_census_oracle_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"lambda": {"3": 1.0}, "rho": {"6": 1.0}, "n": 40}"#).unwrap();
    let graph = dir.path().join("g.txt");
    let out = trapset(&[
        "sample", "--spec", path(&spec), "--seed", "3", "--max-retries", "100000", "--out", path(&graph),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&graph).unwrap();
    assert!(text.starts_with("40 20 120\n"));

    let again = trapset(&["sample", "--regular", "3,6", "--n", "40", "--seed", "3", "--max-retries", "100000"]);
    assert_eq!(stdout(&again), text);

    let census = trapset(&["census", path(&graph), "--a-max", "4", "--category", "LETS", "--category", "SS"]);
    assert!(census.status.success());
    let csv = stdout(&census);
    assert!(csv.starts_with("category,a,b,count\n"));
    assert!(csv.lines().skip(1).all(|l| l.starts_with("SS,") || l.starts_with("LETS,")));

    let json = trapset(&["census", path(&graph), "--a-max", "3", "--emit-instances"]);
    let dump: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let first = &dump.as_array().unwrap()[0];
    for field in ["S", "a", "b", "categories", "cycle_rank"] {
        assert!(first.get(field).is_some(), "missing {field}");
    }

    let oracle = trapset(&["oracle", path(&graph), "--a-max", "4"]);
    assert!(oracle.status.success());
    assert!(stdout(&oracle).contains("matches"));
}

#[test]
fn predict_table() {
    let out = trapset(&["predict", "--regular", "3,6", "--a-max", "5", "--b-max", "5"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert!(csv.starts_with("category,a,b,estimate,lower_factor,formula_id\n"));
    let row = csv.lines().find(|l| l.starts_with("LETS,4,4,")).unwrap();
    assert_eq!(row, "LETS,4,4,1250,1,lets-cycle-composition");

    let ets = trapset(&["predict", "--regular", "3,6", "--category", "ETS", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&ets)).unwrap();
    let hit = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["a"] == 4 && r["b"] == 4)
        .unwrap();
    assert!((hit["estimate"].as_f64().unwrap() - 3750.0).abs() < 1e-6);
}

#[test]
fn experiment_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("exp.json");
    std::fs::write(
        &config,
        r#"{"spec": {"lambda": {"3": 1.0}, "rho": {"6": 1.0}, "n": 300}, "n_values": [300, 1500],
            "trials": 3, "a_max": 4, "b_max": 4, "girth_min": 6, "seed": 1}"#,
    )
    .unwrap();
    let report = dir.path().join("r.csv");
    let out = trapset(&["experiment", path(&config), "--out", path(&report)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(&report).unwrap();
    assert!(csv.starts_with("category,a,b,n,trials,mean,sd,estimate,lower_factor,discrepancy,pass\n"));

    // A zero tolerance with a tiny sample fails at least one row.
    std::fs::write(
        &config,
        r#"{"spec": {"lambda": {"3": 1.0}, "rho": {"6": 1.0}, "n": 300},
            "trials": 2, "a_max": 4, "b_max": 4, "seed": 1, "tolerance": {"relative": 0.0}}"#,
    )
    .unwrap();
    assert_eq!(trapset(&["experiment", path(&config), "--trials", "1"]).status.code(), Some(1));

    std::fs::write(
        &config,
        r#"{"spec": {"lambda": {"3": 1.0}, "rho": {"6": 1.0}, "n": 60},
            "trials": 2, "a_max": 5, "b_max": 4, "categories": ["TS"], "budget": 10, "max_retries": 100000}"#,
    )
    .unwrap();
    assert_eq!(trapset(&["experiment", path(&config)]).status.code(), Some(3));

    std::fs::write(&config, "{ not json").unwrap();
    assert_eq!(trapset(&["experiment", path(&config)]).status.code(), Some(2));
    assert_eq!(trapset(&["census"]).status.code(), Some(2));
    assert_eq!(trapset(&["census", "/no/such/graph"]).status.code(), Some(2));
}

#[test]
fn oracle_refuses_large_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let out = trapset(&["sample", "--regular", "3,6", "--n", "100", "--girth", "6", "--out", path(&graph)]);
    assert!(out.status.success());
    assert_eq!(trapset(&["oracle", path(&graph)]).status.code(), Some(2));
}
