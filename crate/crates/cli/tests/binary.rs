use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_abfactor"))
        .args(args)
        .env_remove("ABFACTOR_CAP_N")
        .env_remove("ABFACTOR_CAP_DELETIONS")
        .env_remove("ABFACTOR_BUDGET")
        .env_remove("ABFACTOR_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["factor", "-a", "1", "-b", "2"], "Cl\n").status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["factor", "-a", "2", "-b", "3"], "Ch\n").status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["factor", "-a", "2", "-b", "3"], "#bad\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["factor", "-a", "4", "-b", "3"], "Cl\n").status.code(),
        Some(2)
    );
    let capped = run(
        &[
            "--budget", "1", "--cap-n", "2", "factor", "-a", "1", "-b", "2", "--find",
        ],
        "IheA@GUAo\n",
    );
    assert_eq!(capped.status.code(), Some(3));
    assert_eq!(run(&["toughness"], "").status.code(), Some(0));
}

#[test]
fn caps_come_from_the_environment() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_abfactor"))
        .args([
            "avoid", "--mode", "vertices", "-a", "1", "-b", "2", "-n", "2",
        ])
        .env("ABFACTOR_CAP_DELETIONS", "3")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"D~{\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("deletions per instance"));
}

#[test]
fn avoid_vertices_with_explicit_set() {
    let o = run(
        &[
            "avoid", "--mode", "vertices", "-a", "2", "-b", "3", "-n", "1", "--delete", "2",
        ],
        "D~{\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "verified");
    assert_eq!(v["routes"][0]["instances"], 1);
}

const CONFIG: &str = "\
theorems = vertex-deletion, matching-deletion, edge-avoidance
n_range = 5..8
p_list = 1/2, 4/5
seed_list = 2
ab = 1:2, 2:3
n = 1
quota = 4
max_attempts = 80
extremal = 1:2:3:1, 2:2:3:1
";

#[test]
fn campaign_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, CONFIG).unwrap();
    let mut bodies = Vec::new();
    for i in 0..2 {
        let json = dir.path().join(format!("r{i}.json"));
        let csv = dir.path().join(format!("r{i}.csv"));
        let o = run(
            &[
                "campaign",
                cfg.to_str().unwrap(),
                "--json",
                json.to_str().unwrap(),
                "--csv",
                csv.to_str().unwrap(),
            ],
            "",
        );
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
        assert!(v["header"]["generatedAt"].as_u64().unwrap() > 0);
        v["header"]["generatedAt"] = serde_json::Value::Null;
        bodies.push((
            serde_json::to_string(&v).unwrap(),
            std::fs::read_to_string(&csv).unwrap(),
        ));
    }
    assert_eq!(bodies[0], bodies[1]);
    let v: serde_json::Value = serde_json::from_str(&bodies[0].0).unwrap();
    assert_eq!(v["totals"]["expectedFailure"], 2);
    assert_eq!(v["totals"]["counterexample"], 0);
    let flagged = v["instances"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| i["expectedFailure"] == true)
        .count();
    assert_eq!(flagged, 2);
}

#[test]
fn bad_config_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "theorems = vertex-deletion\np_list = 3/2\n").unwrap();
    let o = run(&["campaign", cfg.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p_list"));
}
