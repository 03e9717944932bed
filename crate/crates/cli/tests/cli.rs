use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn fixloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fixloc"))
        .args(args)
        .output()
        .expect("run fixloc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn fixture_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let out = fixloc(&["examples", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    dir
}

#[test]
fn examples_writes_every_fixture() {
    let dir = fixture_dir();
    let mut names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["cp2.json", "cp2xs6.json", "cp5.json", "s2xs6.json", "s6.json"]);
}

#[test]
fn every_fixture_verifies() {
    let dir = fixture_dir();
    for stem in ["cp2", "cp5", "s6", "s2xs6", "cp2xs6"] {
        let path = dir.path().join(format!("{stem}.json"));
        let out = fixloc(&["verify", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{stem}: {}", stdout(&out));
        assert!(stdout(&out).contains("verdict: PASS"));
    }
}

#[test]
fn odd_count_in_dim10_fails_parity() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "three.json",
        r#"{"n": 5, "points": [[1,1,1,1,1],[-1,1,1,1,1],[-1,-1,1,1,1]]}"#,
    );
    let out = fixloc(&["--format", "json", "verify", &p]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "fail");
    let parity = v["checks"].as_array().unwrap().iter().find(|c| c["check"] == "parity").unwrap();
    assert_eq!(parity["status"], "fail");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    let out = fixloc(&["verify", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let bad = write(dir.path(), "bad.json", r#"{"n": 2, "points": [[1, 0]]}"#);
    for cmd in ["verify", "genus", "chern"] {
        assert_eq!(fixloc(&[cmd, &bad]).status.code(), Some(2), "{cmd}");
    }
    let junk = write(dir.path(), "junk.json", "not json");
    assert_eq!(fixloc(&["verify", &junk]).status.code(), Some(2));

    assert_eq!(fixloc(&["search", "--bound", "0"]).status.code(), Some(2));
    assert_eq!(fixloc(&["search", "--bound", "x"]).status.code(), Some(2));

    let file = write(dir.path(), "plain", "");
    let under_file = Path::new(&file).join("sub");
    assert_eq!(fixloc(&["examples", under_file.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn genus_of_cp5() {
    let dir = fixture_dir();
    let p = dir.path().join("cp5.json");
    let out = fixloc(&["--no-banner", "genus", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("chi = (1,-1,1,-1,1,-1)  N = (1,1,1,1,1,1)"), "{s}");
    assert!(s.contains("todd = 1  euler = 6"), "{s}");

    let out = fixloc(&["--format", "json", "genus", p.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["chi"], serde_json::json!([1, -1, 1, -1, 1, -1]));
    assert_eq!(v["n_profile"], serde_json::json!([1, 1, 1, 1, 1, 1]));
}

#[test]
fn chern_tables() {
    let dir = fixture_dir();
    let cp2 = dir.path().join("cp2.json");
    let out = fixloc(&["--format", "json", "chern", cp2.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["chern_numbers"], serde_json::json!({"c1^2": 9, "c2": 3}));

    let s6 = dir.path().join("s6.json");
    let out = fixloc(&["--format", "json", "chern", s6.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["chern_numbers"], serde_json::json!({"c1^3": 0, "c1c2": 0, "c3": 2}));

    // text lists the same monomials in the same order
    let out = fixloc(&["--no-banner", "chern", s6.to_str().unwrap()]);
    let rows: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .take(3)
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(rows, ["c1^3", "c1c2", "c3"]);
}

#[test]
fn prove_dim10_reports_contradictions() {
    let out = fixloc(&["--no-banner", "prove-dim10"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    for row in ["1532/3", "1508/3", "20/3", "-4/3"] {
        assert!(s.contains(row), "{row}");
    }
    assert_eq!(s.matches("contradiction").count(), 4);
    assert!(s.contains("minimum: 6 fixed points"));

    let out = fixloc(&["--format", "json", "prove-dim10"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cases"][0]["c1c2sq"], serde_json::json!({"num": 1532, "den": 3}));
    assert_eq!(v["minimum_fixed_points"], 6);
}

#[test]
fn search_bound_1() {
    let out = fixloc(&["--format", "json", "search", "--bound", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passing"], 0);
    assert_eq!(v["candidates"], 126);
    assert_eq!(v["expected_candidates"], 126);
}

#[test]
fn search_knobs_can_find_survivors() {
    // three points in dimension 4 include the CP2 action, so the search fails
    let out = fixloc(&["--quiet", "search", "--bound", "2", "--n", "2", "--points", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("verdict: FAIL"));
}

#[test]
fn quiet_and_banner() {
    let dir = fixture_dir();
    let p = dir.path().join("cp5.json");
    let p = p.to_str().unwrap();
    let out = fixloc(&["--quiet", "verify", p]);
    assert_eq!(stdout(&out), "verdict: PASS (CP5)\n");

    let with = stdout(&fixloc(&["verify", p]));
    let without = stdout(&fixloc(&["--no-banner", "verify", p]));
    assert_eq!(with, format!("fixloc {}\n{without}", env!("CARGO_PKG_VERSION")));
}

#[test]
fn output_is_deterministic() {
    let dir = fixture_dir();
    let p = dir.path().join("s2xs6.json");
    let p = p.to_str().unwrap();
    for args in [
        vec!["--format", "json", "verify", p],
        vec!["verify", p],
        vec!["chern", p],
        vec!["search", "--bound", "1"],
    ] {
        assert_eq!(stdout(&fixloc(&args)), stdout(&fixloc(&args)));
    }
}

#[test]
fn json_mirrors_text_checks() {
    let dir = fixture_dir();
    let p = dir.path().join("cp2xs6.json");
    let p = p.to_str().unwrap();
    let text = stdout(&fixloc(&["--no-banner", "verify", p]));
    let v: serde_json::Value = serde_json::from_str(&stdout(&fixloc(&["--format", "json", "verify", p]))).unwrap();
    for c in v["checks"].as_array().unwrap() {
        let name = c["check"].as_str().unwrap();
        let status = c["status"].as_str().unwrap().to_uppercase();
        assert!(text.contains(&format!("[{status:<7}] {name}")), "{name}");
        for (k, _) in c["witness"].as_object().unwrap() {
            assert!(text.contains(&format!("{k} = ")), "{name}.{k}");
        }
    }
}
