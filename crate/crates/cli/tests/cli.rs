use std::io::Write;
use std::process::{Command, Output, Stdio};

fn polygap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polygap")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = polygap(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn feasibility_of_eighty_edges_in_dimension_ten() {
    assert_eq!(
        stdout(&["feasible", "--dim", "10", "--edges", "80"]).trim(),
        "Infeasible (v=14 band {80}; v≤13 max 78; v≥15 min 85)"
    );
}

#[test]
fn check_mode_exits_two_on_infeasible() {
    let out = polygap(&["feasible", "--dim", "10", "--edges", "80", "--check"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polygap(&["feasible", "--dim", "4", "--edges", "16", "--check"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn max_dimension_and_phi() {
    assert_eq!(stdout(&["max-dim", "--edges", "407"]).trim(), "23");
    assert_eq!(stdout(&["phi", "--v", "10", "--d", "5", "--m", "2"]).trim(), "30");
}

#[test]
fn construct_json_is_canonical_and_stable() {
    let a = stdout(&["construct", "pentasm", "--dim", "4", "--json"]);
    let b = stdout(&["construct", "pentasm(4)", "--json"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["nverts"], 9);
    let facets: Vec<Vec<u64>> = serde_json::from_value(v["facets"].clone()).unwrap();
    assert_eq!(facets.len(), 7);
    let mut sorted = facets.clone();
    sorted.sort();
    assert_eq!(facets, sorted);
    assert!(facets.iter().all(|f| f.windows(2).all(|w| w[0] < w[1])));
}

#[test]
fn fvector_from_family_and_from_json() {
    assert_eq!(stdout(&["fvector", "pentasm", "--dim", "4"]).trim(), "9 19 17 7");
    assert_eq!(stdout(&["fvector", "triplex", "--k", "2", "--dim", "3"]).trim(), "5 8 5");
    let json = stdout(&["construct", "sigma3", "--json"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_polygap"))
        .args(["fvector", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(json.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "7 11 6");
}

#[test]
fn validation_errors_exit_one_with_one_line() {
    for args in [
        &["min-edges", "--v", "3", "--d", "5"][..],
        &["construct", "nonagon", "--dim", "3"],
        &["construct", "pentasm"],
        &["phi", "--v", "10"],
        &["verify", "--id", "11"],
    ] {
        let out = polygap(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn min_edges_text_and_json() {
    let text = stdout(&["min-edges", "--v", "9", "--d", "4"]);
    assert!(text.starts_with("18 [ProvedHere]"), "{text}");
    assert!(text.contains("witness delta_sum(2,2)"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["min-edges", "--v", "9", "--d", "4", "--json"])).unwrap();
    assert_eq!(json["query"], "min_edges(v=9,d=4)");
    assert_eq!(json["value"], 18);
    assert_eq!(json["status"], "ProvedHere");
    assert_eq!(json["witness"], "delta_sum(2,2)");
}

#[test]
fn table_csv_has_header_and_full_grid() {
    let csv = stdout(&["table", "min-edges", "--max-dim", "7", "--csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("v,d,min_edges,status,witness"));
    // d from 2 to 7, v from d+1 to 2d+2
    assert_eq!(lines.count(), (2..=7).map(|d| d + 2).sum::<usize>());
    assert!(csv.contains("11,5,29,ProvedHere,pentasm(5)"));
    let text = stdout(&["table", "min-edges", "--max-dim", "7"]);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(header, ["v", "d", "min_edges", "status", "witness"]);
}

#[test]
fn gaps_list_the_dimension_four_holes() {
    let out = stdout(&["gaps", "--dim", "4", "--csv"]);
    let edges: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(edges, ["11", "12"]);
}

#[test]
fn realize_then_hull_round_trip() {
    let points = stdout(&["realize", "delta_sum", "--r", "2", "--s", "2"]);
    let dir = std::env::temp_dir().join(format!("polygap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("delta.txt");
    std::fs::write(&path, points).unwrap();
    let hull = stdout(&["hull", path.to_str().unwrap()]);
    assert!(hull.contains("f-vector: 9 18 15 6"), "{hull}");
    let a = stdout(&["hull", path.to_str().unwrap(), "--json"]);
    let b = stdout(&["construct", "delta_sum(2,2)", "--json"]);
    assert_eq!(a.len(), b.len());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn hull_reports_point_limit() {
    let points = stdout(&["realize", "cyclic(4,8)"]);
    let dir = std::env::temp_dir().join(format!("polygap-limit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.txt");
    std::fs::write(&path, points).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_polygap"))
        .args(["hull", path.to_str().unwrap()])
        .env("POLYGAP_MAX_POINTS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("resource limit"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_reports_each_check() {
    let out = polygap(&["verify", "--id", "1", "--id", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("AC1  PASS"));
    assert!(text.contains("AC6  PASS"));
    assert!(text.trim_end().ends_with("2 passed, 0 failed"));
}
