use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freechar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn polys_rank_two() {
    let doc = json(&["polys", "--m", "2", "--dmax", "2", "--format", "json"]);
    assert_eq!(doc["m"], 2);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(strs(&rows[0]["A"]), ["1", "-2", "1"]);
    assert_eq!(strs(&rows[1]["A"]), ["0", "0", "0", "1", "-2", "1"]);
    assert_eq!(rows[1]["A_text"], "q^5 - 2*q^4 + q^3");
    assert_eq!(rows[1]["chi_pgl"], "1");
    assert_eq!(rows[1]["chi_pgl_irr"], "-1");
    assert_eq!(strs(&rows[1]["s_coeffs_A"]), ["0", "0", "1", "3", "3", "1"]);
    assert_eq!(rows[1]["positive"], true);
    for key in [
        "d",
        "A",
        "A_irr",
        "A_ind",
        "M",
        "chi_pgl",
        "chi_pgl_irr",
        "s_coeffs_A",
        "positive",
    ] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn json_round_trips() {
    let o = run(&["polys", "--m", "3", "--dmax", "3", "--format", "json"]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn output_is_deterministic() {
    let args = ["polys", "--m", "2", "--dmax", "4", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify", "--m", "2", "--dmax", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn rank_one_has_no_euler_characteristic() {
    let doc = json(&["polys", "--m", "1", "--dmax", "2", "--format", "json"]);
    let row = &doc["rows"][1];
    assert!(row["chi_pgl"].is_null());
    assert!(row["E_pgl"].is_null());
}

#[test]
fn csv_one_row_per_degree() {
    let o = run(&["polys", "--m", "2", "--dmax", "3", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "m,d,A,A_irr,A_ind,M,chi_pgl,chi_pgl_irr,s_coeffs_A,positive"
    );
    assert!(lines[1].starts_with("2,1,1 -2 1,"));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("freechar-cli-{}.json", std::process::id()));
    let o = run(&[
        "subgroups",
        "--m",
        "2",
        "--nmax",
        "3",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"][2]["J_n"], "13");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn subgroups_rank_two() {
    let doc = json(&["subgroups", "--m", "2", "--nmax", "5", "--format", "json"]);
    let j: Vec<String> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["J_n"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(j, ["1", "3", "13", "71", "461"]);
    assert_eq!(doc["rows"][3]["limit"], "71/4");
}

#[test]
fn permstats_degree_three() {
    let o = run(&["permstats", "--m", "2", "--n", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("a_3 = q^3 + 2*q^2\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains("length")).count(), 3);
}

#[test]
fn oracle_small_field() {
    let doc = json(&[
        "oracle", "--d", "2", "--p", "2", "--m", "2", "--format", "json",
    ]);
    assert_eq!(doc["orbits"], 11);
    assert_eq!(doc["abs_irr"], 3);
    assert_eq!(doc["abs_ind"], 6);
    assert_eq!(doc["agree"], true);
}

#[test]
fn verify_passes() {
    for args in [
        &["verify", "--m", "2", "--dmax", "4", "--primes", "2,3"][..],
        &["verify", "--m", "3", "--dmax", "3"][..],
    ] {
        let o = run(args);
        assert!(o.status.success(), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = run(&["verify", "--m", "1", "--dmax", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("SKIP Euler characteristics"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["polys", "--m", "0", "--dmax", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["polys", "--m", "2", "--dmax", "4", "--order", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["subgroups", "--m", "2", "--nmax", "3", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["oracle", "--d", "2", "--p", "4", "--m", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["oracle", "--d", "2", "--p", "3", "--m", "5"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["permstats", "--m", "2", "--n", "11"]).status.code(),
        Some(4)
    );
}
