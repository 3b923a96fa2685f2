use std::path::Path;
use std::process::{Command, Output};

use supercong_cli::report::{from_csv, from_json, to_json};

fn supercong(args: &[&str]) -> Output {
    supercong_with(args, None)
}

fn supercong_with(args: &[&str], budget: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_supercong"));
    cmd.args(args).env_remove("SUPERCONG_BUDGET");
    if let Some(b) = budget {
        cmd.env("SUPERCONG_BUDGET", b);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_eq0_two_primes() {
    let o = supercong(&["verify", "--cases", "eq0", "--pmin", "5", "--pmax", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let entries = from_json(&stdout(&o)).unwrap();
    assert_eq!(entries.len(), 2);
    assert!(entries.iter().all(|e| e.case == "EQ0" && e.pass));
    assert_eq!(entries[0].lhs, "435/512");
    assert_eq!(entries[0].achieved, "3");
    assert!(stderr(&o).contains("congruence: 2 records, 2 passed, 0 failed"));
}

#[test]
fn empty_range_warns_and_succeeds() {
    let o = supercong(&["verify", "--cases", "all", "--pmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
    assert_eq!(from_json(&stdout(&o)).unwrap(), []);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(supercong(&["verify", "--pmin", "7", "--pmax", "5"]).status.code(), Some(2));
    assert_eq!(supercong(&["verify", "--cases", "EQ0,NOPE"]).status.code(), Some(2));
    assert_eq!(supercong(&["verify", "--r", "0"]).status.code(), Some(2));
    assert_eq!(supercong(&["coeffs", "--n", "0"]).status.code(), Some(2));
    assert_eq!(supercong(&["coeffs"]).status.code(), Some(2));
    let o = supercong_with(&["verify", "--cases", "eq0", "--pmax", "5"], Some("lots"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unwritable_report_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing").join("report.json");
    let o = supercong(&["verify", "--cases", "eq0", "--pmax", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn coefficient_dump() {
    let o = supercong(&["coeffs", "--n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["1 1", "3 -4", "5 -2", "7 24", "9 -11"] {
        assert!(text.lines().any(|l| l == line), "missing {line}");
    }
    assert_eq!(stdout(&supercong(&["coeffs", "--n", "1"])), "1 1\n");
    let primes = stdout(&supercong(&["coeffs", "--n", "9", "--primes-only"]));
    assert_eq!(primes, "2 0\n3 -4\n5 -2\n7 24\n");
}

#[test]
fn coefficient_dump_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.txt");
    let o = supercong(&["coeffs", "--n", "25", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(text.lines().count(), 25);
    assert!(text.lines().any(|l| l == "25 -121"));
}

fn write_report(dir: &Path, name: &str, extra: &[&str], budget: Option<&str>) -> (Output, String) {
    let out = dir.join(name);
    let mut args = vec!["verify", "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = supercong_with(&args, budget);
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    (o, text)
}

#[test]
fn json_report_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let (o, text) =
        write_report(dir.path(), "r.json", &["--cases", "THM1,CAI,EXACT_DIV_P", "--pmax", "13", "--r", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("series: 4 records"));
    let entries = from_json(&text).unwrap();
    assert_eq!(to_json(&entries).unwrap(), text);
    assert!(entries.iter().any(|e| e.case == "THM1" && e.param == 2 && e.required == "v>=5"));
    assert!(!text.contains('.'));
}

#[test]
fn csv_report() {
    let dir = tempfile::tempdir().unwrap();
    let (o, text) = write_report(
        dir.path(),
        "r.csv",
        &["--cases", "KILBOURN", "--pmin", "3", "--pmax", "5", "--format", "csv"],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("case,p,param,required,achieved,lhs,rhs,pass,conjectural"));
    assert_eq!(lines.next(), Some("KILBOURN,3,0,v>=3,4,17/16,-4,true,false"));
    assert_eq!(lines.next(), Some("KILBOURN,5,0,v>=3,3,4433/4096,-2,true,false"));
    assert_eq!(from_csv(&text).unwrap().len(), 2);
}

#[test]
fn small_budget_only_breaks_conjectural_records() {
    let dir = tempfile::tempdir().unwrap();
    let (o, text) = write_report(
        dir.path(),
        "r.json",
        &["--cases", "CONJ1", "--pmin", "11", "--pmax", "11", "--r", "2"],
        Some("50"),
    );
    assert_eq!(o.status.code(), Some(0));
    let entries = from_json(&text).unwrap();
    assert_eq!(entries.len(), 2);
    assert!(entries.iter().all(|e| e.conjectural));
    assert!(entries[0].pass);
    assert!(!entries[1].pass && entries[1].achieved.starts_with("error:"), "{:?}", entries[1]);

    let (o, text) = write_report(dir.path(), "t.json", &["--cases", "THM2", "--pmax", "11"], Some("10"));
    assert_eq!(o.status.code(), Some(1));
    let entries = from_json(&text).unwrap();
    assert!(entries.iter().any(|e| e.p == 11 && !e.pass));
    assert!(entries.iter().any(|e| e.p == 7 && e.pass));
}
