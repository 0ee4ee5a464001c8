use std::path::Path;
use std::process::{Command, Output};

fn logfano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logfano")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

#[test]
fn describe_reports_budget_and_anticanonical() {
    let o = logfano(&["describe", "--base", "F2", "--chain", "Z+F", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["schema"], "aa-schema/1");
    assert_eq!(doc["boundary"]["budget"], "4");
    let alone = json(&logfano(&["describe", "--base", "F5", "--format", "json"]));
    assert_eq!(alone["anticanonical_class"], "2*Z + 7*F");
}

#[test]
fn aa_intervals_in_text() {
    let o = logfano(&["aa", "--base", "F3", "--chain", "Z"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("body interval (0, 2/3)"));
    let p = logfano(&["aa", "--base", "P2", "--blowup", "H", "--chain", "E1", "--bundle", "H"]);
    assert!(stdout(&p).contains("body interval (0, 1)"));
}

#[test]
fn empty_body_is_a_result() {
    // L = F - Z: the F row reads beta_1 - 2 > 0 against the unit box
    let o = logfano(&["aa", "--base", "F2", "--chain", "Z+F", "--bundle=F-Z", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["nonempty"], false);
}

#[test]
fn tail_verdicts_and_exit_codes() {
    let ok = json(&logfano(&["tail", "--base", "F1", "--chain", "Z+F", "--h", "1", "--v", "0", "--format", "json"]));
    assert_eq!(ok["tail"]["verdict"], "ALF_ModuloCurves");
    let over = logfano(&["tail", "--base", "F1", "--chain", "Z+F", "--h", "3", "--v", "1", "--format", "json"]);
    assert_eq!(over.status.code(), Some(0));
    assert_eq!(json(&over)["tail"]["verdict"], "NotALF_Budget");
    assert_eq!(logfano(&["tail", "--base", "F9x", "--chain", "Z"]).status.code(), Some(2));
    assert_eq!(logfano(&["tail", "--base", "F1", "--chain", "Z+Q"]).status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic_across_job_counts() {
    let a = logfano(&["sweep", "--n", "0..2", "--max-tails", "4", "--format", "csv", "--jobs", "1"]);
    let b = logfano(&["sweep", "--n", "0..2", "--max-tails", "4", "--format", "csv", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let csv = stdout(&a);
    let header = csv.lines().next().unwrap();
    assert!(header.starts_with("n,r,h,v,x,budget,remaining_budget"));
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let (n, x): (i64, i64) = (f[0].parse().unwrap(), f[4].parse().unwrap());
        assert_eq!(f[6].parse::<i64>().unwrap(), n + 2 - x, "{line}");
        assert_ne!(f[9], "infeasible", "{line}");
    }
    let empty = logfano(&["sweep", "--n", "3..2", "--format", "csv"]);
    assert_eq!(stdout(&empty).lines().count(), 1);
}

#[test]
fn out_dir_and_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = logfano(&["tail", "--base", "F2", "--chain", "Z+F", "--h", "1", "--v", "1", "--out", out]);
    assert_eq!(o.status.code(), Some(0));
    for ext in ["json", "txt", "csv"] {
        assert!(Path::new(out).join(format!("tail.{ext}")).exists());
    }
    let file = Path::new(out).join("tail.json");
    let c = logfano(&["check", file.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
    assert!(stdout(&c).contains("certificates verify"));

    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let point = &mut doc["tail"]["matrix"]["gordan"]["certificate"]["point"];
    point[0] = serde_json::json!("-1");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(logfano(&["check", bad.to_str().unwrap()]).status.code(), Some(1));
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "not json").unwrap();
    assert_eq!(logfano(&["check", junk.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn json_output_is_byte_identical() {
    let args = ["aa", "--base", "F1", "--chain", "Z+F", "--format", "json"];
    assert_eq!(logfano(&args).stdout, logfano(&args).stdout);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("job.json");
    std::fs::write(&cfg, r#"{"base": "F1", "chain": "Z+F", "h": 3, "v": 1, "format": "json"}"#).unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(json(&logfano(&["tail", "--config", c]))["tail"]["verdict"], "NotALF_Budget");
    let o = json(&logfano(&["tail", "--config", c, "--h", "1", "--v", "0"]));
    assert_eq!(o["tail"]["verdict"], "ALF_ModuloCurves");
    std::fs::write(&cfg, r#"{"bsae": "F1"}"#).unwrap();
    assert_eq!(logfano(&["tail", "--config", c]).status.code(), Some(2));
}

#[test]
fn curves_file_enters_the_curve_list() {
    let dir = tempfile::tempdir().unwrap();
    let curves = dir.path().join("curves.txt");
    // after one right tail on F_1: the strict transform of a second fiber
    std::fs::write(&curves, "G = F\n").unwrap();
    let o = json(&logfano(&[
        "tail", "--base", "F1", "--chain", "Z+F", "--h", "1", "--curves", curves.to_str().unwrap(), "--format", "json",
    ]));
    let list: Vec<String> = serde_json::from_value(o["tail"]["curve_list"].clone()).unwrap();
    assert!(list.contains(&"G".to_string()));
}

#[test]
fn verify_only_selected_checks() {
    let o = logfano(&["verify", "--only", "adjunction,gordan-fm"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS [ 4] adjunction"));
    assert!(text.contains("PASS [ 9] gordan-fm"));
    assert!(text.contains("2 of 2 checks passed"));
    assert_eq!(logfano(&["verify", "--only", "nope"]).status.code(), Some(2));
}
