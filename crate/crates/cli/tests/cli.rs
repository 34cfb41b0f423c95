use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitcrystal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_case_b_succeeds() {
    let o = run(&["verify", "--case", "b", "--n", "1", "--i", "1", "--s", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn corrupted_edge_names_pairing() {
    for target in ["kr", "hat"] {
        let o = run(&["verify", "--case", "a", "--n", "2", "--target", target, "--inject-corrupt-edge"]);
        assert_eq!(o.status.code(), Some(1));
        let out = stdout(&o);
        let line = out.lines().find(|l| l.starts_with("axiom:pairing")).unwrap();
        assert!(line.contains("FAIL"));
    }
}

#[test]
fn case_e_is_out_of_scope() {
    let o = run(&["build", "--case", "e", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("case (e) out of scope"));
}

#[test]
fn out_of_scope_instance_exits_two() {
    for args in [
        ["verify", "--case", "c", "--n", "3", "--i", "2", "--s", "1"],
        ["build", "--case", "d", "--n", "3", "--i", "2", "--s", "2"],
        ["build", "--case", "a", "--n", "1", "--i", "1", "--s", "1"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn build_is_deterministic() {
    for format in ["json", "dot", "text"] {
        let args = ["build", "--case", "a", "--n", "2", "--i", "1", "--s", "1", "--target", "hat", "--format", format];
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let o = run(&["build", "--case", "a", "--n", "2", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("[label=\"0\"]") && dot.contains("[label=\"2\"]"));
}

#[test]
fn build_json_schema() {
    let o = run(&["build", "--case", "c", "--n", "3", "--i", "1", "--s", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["datum_ref"], "A_5^(2)");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    for e in v["edges"].as_array().unwrap() {
        assert!(e["src"].is_u64() && e["dst"].is_u64() && e["j"].is_u64());
    }
}

#[test]
fn branch_reports() {
    let o = run(&["branch", "--case", "a", "--n", "3", "--i", "2", "--s", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("matches closed formula"));
    assert!(stdout(&o).contains("Σ mult·dim = 329"));
    let o = run(&["branch", "--case", "d", "--i", "2", "--s", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no closed formula"));
    let o = run(&["branch", "--case", "b", "--n", "2", "--i", "1", "--s", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total"], 5);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
}

#[test]
fn all_scope_passes() {
    let o = run(&["verify", "--all-scope"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 22);
    assert_eq!(run(&["branch", "--all-scope"]).status.code(), Some(0));
}

#[test]
fn rmatrix_and_energy() {
    let o = run(&["rmatrix", "--case", "a", "--n", "2", "--target", "kr", "--i", "1", "--i2", "3", "--s", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["rmatrix", "--case", "a", "--n", "2", "--i", "1", "--s", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["intertwiner"]["pairs"].as_array().unwrap().len(), 36);
    let o = run(&["energy", "--case", "a", "--n", "2", "--target", "kr", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 16);
    let o = run(&["energy", "--case", "c", "--n", "3", "--target", "hat"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("consistent"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("orbitcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    let o = run(&["build", "--case", "a", "--n", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
