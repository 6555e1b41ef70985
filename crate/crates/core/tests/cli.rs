use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recipbinom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn triangle_formats() {
    let o = run(&["triangle", "--col", "A", "--row", "0", "--max-n", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n1,1\n1,1/2,1\n");

    let o = run(&["triangle", "--col", "K", "--row", "0", "--max-n", "1", "--format", "json"]);
    assert_eq!(json(&o), serde_json::json!([["1"], ["1", "1/2"]]));

    let o = run(&["triangle", "--col", "A", "--max-n", "2", "--format", "bfile", "--offset", "1"]);
    assert_eq!(stdout(&o), "1 1\n2 1\n3 1\n4 1\n5 1/2\n6 1\n");
}

#[test]
fn triangle_rejects_bad_arguments() {
    assert_eq!(run(&["triangle", "--row", "7"]).status.code(), Some(2));
    assert_eq!(run(&["triangle", "--col", "Z"]).status.code(), Some(2));
    assert_eq!(run(&["triangle", "--max-n", "100000"]).status.code(), Some(2));
}

#[test]
fn check_identities() {
    let o = run(&["check", "--ids", "iden7,iden6", "--max-n", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 2);

    let o = run(&["check", "--ids", "iden5", "--variant", "printed", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let f = &json(&o)["checks"][0]["first_failure"];
    assert_eq!((f["n"].as_i64(), f["m"].as_i64()), (Some(1), Some(0)));

    let o = run(&["check", "--ids", "iden5", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));

    assert_eq!(run(&["check", "--ids", "nonsense"]).status.code(), Some(2));
}

#[test]
fn check_all_has_every_entry() {
    let o = run(&["check", "--ids", "all", "--max-n", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(json(&o)["checks"].as_array().unwrap().len() >= 20);
}

#[test]
fn sums() {
    let o = run(&["sum", "--name", "col-A", "--m", "5", "--terms", "100000"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["closed_form_value"].as_f64(), Some(1.25));
    assert_eq!(r["verdict"], "match");

    let o = run(&["sum", "--name", "row-weighted", "--terms", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let target = 8.0 / 3.0 + 8.0 / 9.0 * std::f64::consts::LN_2;
    assert!((json(&o)["closed_form_value"].as_f64().unwrap() - target).abs() < 1e-15);

    assert_eq!(run(&["sum", "--name", "col-A", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["sum", "--name", "row-weighted", "--terms", "1"]).status.code(), Some(1));
    assert_eq!(run(&["sum", "--name", "abel", "--y", "-0.5"]).status.code(), Some(0));
    let o = run(&["sum", "--name", "col-even-rows", "--m", "3", "--terms", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "no_reference");
}

#[test]
fn series_dump() {
    let o = run(&["series", "--id", "S9", "--order", "3"]);
    assert_eq!(stdout(&o), "0,-1,-1,-5/6\n");
    let o = run(&["series", "--id", "S9", "--order", "3", "--corrected"]);
    assert_eq!(stdout(&o), "0,1,1,5/6\n");
    let o = run(&["series", "--id", "I", "--order", "2", "--format", "json"]);
    assert_eq!(json(&o), serde_json::json!([["0", "0", "0"], ["1", "0", "0"], ["1/2", "1/2", "0"]]));
    assert_eq!(run(&["series", "--id", "A", "--corrected"]).status.code(), Some(2));
}

#[test]
fn export_oeis() {
    let o = run(&["export-oeis", "--sequence", "exp-row-sums", "--count", "4"]);
    assert_eq!(stdout(&o), "0 1\n1 2\n2 5\n3 16\n");
    let o = run(&["export-oeis", "--sequence", "diag-factorial", "--count", "4", "--offset", "1"]);
    assert_eq!(stdout(&o), "1 1\n2 1\n3 4\n4 9\n");
    let o = run(&["export-oeis", "--sequence", "exp-triangle", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn io_failure_exit_code() {
    let o = run(&["export-oeis", "--sequence", "exp-row-sums", "--out", "/nonexistent-dir/x.txt"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["check", "--ids", "S1,S7,A_diag,F_xy", "--max-n", "10"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
