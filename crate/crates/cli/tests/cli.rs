use std::path::PathBuf;
use std::process::{Command, Output};

fn arbor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arbor"))
        .args(args)
        .env_remove("ARBOR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arbor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn path9() -> PathBuf {
    let mut s = String::from("9\n");
    for v in 1..9 {
        s.push_str(&format!("{v} {}\n", v + 1));
    }
    temp_file("path9.tree", &s)
}

#[test]
fn balance_of_a_sequence() {
    let v = json(&arbor(&["balance", "--seq", "1,3,12,2,1,1,4,3"]));
    assert_eq!(v["F"], 3);
    assert_eq!(v["balanced"], false);
    let side = |k: &str| {
        v[k].as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap())
            .collect::<Vec<_>>()
    };
    let (i, j) = (side("partition_I"), side("partition_J"));
    assert_eq!(i.len() + j.len(), 8);
    assert!(i.iter().chain(&j).all(|&p| (1..=8).contains(&p)));
}

#[test]
fn balance_rejects_zero_entries() {
    let o = arbor(&["balance", "--seq", "1,0,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&arbor(&["enumerate", "--n", "4", "--count-only"])), "16\n");
    let listed = stdout(&arbor(&["enumerate", "--n", "5"]));
    assert_eq!(listed.lines().count(), 125);
    assert_eq!(arbor(&["enumerate", "--n", "9", "--count-only"]).status.code(), Some(2));
}

#[test]
fn colors_a_path() {
    let p = path9();
    let v = json(&arbor(&["color", "--k", "3", "--in", p.to_str().unwrap()]));
    assert_eq!(v["class_sizes"], serde_json::json!([3, 3, 3]));
    let a: Vec<u64> = v["assignment"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert!(a.windows(2).all(|w| w[0] != w[1]));
}

#[test]
fn constrained_and_verified_colorings() {
    let p = path9();
    let v = json(&arbor(&["color", "--in", p.to_str().unwrap(), "--constrain", "2", "8"]));
    assert_ne!(v["assignment"][1], v["assignment"][7]);
    let good = temp_file("good.colors", "1 2 3 1 2 3 1 2 3\n");
    let v = json(&arbor(&[
        "color",
        "--in",
        p.to_str().unwrap(),
        "--verify",
        good.to_str().unwrap(),
    ]));
    assert_eq!(v["valid"], true);
    let bad = temp_file("bad.colors", "1 1 2 3 1 2 3 2 3\n");
    let v = json(&arbor(&[
        "color",
        "--in",
        p.to_str().unwrap(),
        "--verify",
        bad.to_str().unwrap(),
    ]));
    assert_eq!(v["valid"], false);
}

#[test]
fn color_precondition_errors_exit_two() {
    let star = temp_file("star.tree", "P: 1 1 1 1\n");
    let o = arbor(&["color", "--k", "3", "--in", star.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let p = path9();
    assert_eq!(
        arbor(&["color", "--in", p.to_str().unwrap(), "--constrain", "3", "8"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(arbor(&["color", "--in", "/nonexistent/tree"]).status.code(), Some(2));
    let cyc = temp_file("cycle.tree", "3\n1 2\n2 3\n3 1\n");
    assert_eq!(arbor(&["check", "--in", cyc.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(arbor(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(arbor(&["sample"]).status.code(), Some(2));
}

#[test]
fn check_reports_structure() {
    let p = path9();
    let v = json(&arbor(&["check", "--in", p.to_str().unwrap()]));
    assert_eq!(v["n"], 9);
    assert_eq!(v["is_string"], true);
    assert_eq!(v["pre_leaves"], serde_json::json!([2, 8]));
    assert_eq!(v["balanced"], true);
}

#[test]
fn sample_streams_are_seeded() {
    let a = stdout(&arbor(&[
        "sample", "--n", "30", "--trials", "20", "--seed", "7", "--emit", "stats",
    ]));
    assert!(a.starts_with("trial,max_degree,x1,x2\n"));
    assert_eq!(a.lines().count(), 21);
    let b = Command::new(env!("CARGO_BIN_EXE_arbor"))
        .args(["sample", "--n", "30", "--trials", "20", "--emit", "stats"])
        .env("ARBOR_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(a, stdout(&b));
    let prufer = stdout(&arbor(&[
        "sample", "--n", "30", "--trials", "3", "--seed", "7", "--emit", "prufer",
    ]));
    for line in prufer.lines() {
        assert_eq!(line.split_whitespace().count(), 29);
    }
}

#[test]
fn sampled_tree_files_parse_back() {
    let edges = stdout(&arbor(&["sample", "--n", "12", "--seed", "3"]));
    let f = temp_file("sampled.tree", &edges);
    let v = json(&arbor(&["check", "--in", f.to_str().unwrap()]));
    assert_eq!(v["edges"], 11);
}

#[test]
fn experiment_formats() {
    let v = json(&arbor(&[
        "experiment",
        "equitable",
        "--n",
        "30",
        "--trials",
        "50",
        "--seed",
        "1",
    ]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["counters"]["failures"], 0);
    let csv = stdout(&arbor(&[
        "experiment",
        "degrees",
        "--n",
        "50",
        "--trials",
        "20",
        "--format",
        "csv",
    ]));
    assert!(csv.starts_with("key,value\nschema,1\n"));
    assert!(csv.contains("observable.x1.mean,"));
    let out = std::env::temp_dir().join(format!("arbor-cli-{}-out.json", std::process::id()));
    let o = arbor(&[
        "experiment",
        "maxdeg",
        "--n",
        "100",
        "--trials",
        "10",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success() && o.stdout.is_empty());
    let written: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written["experiment"], "maxdeg");
    assert_eq!(arbor(&["experiment", "balanced", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        arbor(&["experiment", "equitable", "--n", "20", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
}
