use std::path::Path;
use std::process::{Command, Output};

use recurra::Rational;

fn recurra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recurra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_config(dir: &Path, json: &str) -> String {
    let path = dir.join("exp.json");
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

fn rows(csv: &str) -> Vec<(i64, Rational, Rational)> {
    csv.lines()
        .skip(1)
        .map(|line| {
            let f: Vec<_> = line.split(',').collect();
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[2].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn sys_one_csv_repeats_with_period_nine() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("orbit.csv");
    let out = recurra(&[
        "simulate",
        "--system",
        "sys1",
        "--k",
        "2",
        "--seed",
        "1",
        "--iterations",
        "60",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("n,x_exact,y_exact,x_float,y_float\n"));
    let rows = rows(&text);
    assert_eq!(rows.len(), 63);
    for i in 0..rows.len() - 9 {
        assert_eq!(rows[i].1, rows[i + 9].1);
        assert_eq!(rows[i].2, rows[i + 9].2);
    }
}

#[test]
fn csv_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        r#"{"system":"sys2","k":4,"m":2,"init":{"random_positive":{"seed":11}}}"#,
    );
    let a = recurra(&["simulate", "--config", &cfg]);
    let b = recurra(&["simulate", "--config", &cfg]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = recurra(&["simulate", "--config", &cfg, "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn explicit_ones_give_unit_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        r#"{"system":"sys2","k":1,"m":0,"init":{"x":["1","1"],"y":["1","1"]},"iterations":10}"#,
    );
    let out = recurra(&["simulate", "--config", &cfg]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 13);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",1,1,1,1")));
}

#[test]
fn budget_exhaustion_exits_three_with_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("orbit.csv");
    let out = recurra(&[
        "simulate",
        "--system",
        "sys2",
        "--k",
        "3",
        "--m",
        "2",
        "--seed",
        "1",
        "--bit-budget",
        "256",
        "--iterations",
        "10000",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let n = rows(&std::fs::read_to_string(&csv).unwrap()).len();
    assert!(n > 4 && n < 10_004);
}

#[test]
fn classify_lines_and_errors() {
    let line = |args: &[&str]| stdout(&recurra(args)).trim_end().to_string();
    assert_eq!(
        line(&["classify", "--system", "sys2", "--k", "4", "--m", "2", "--seed", "1"]),
        "verdict=Periodic stated=30 generic=30 rule=S2_iiia"
    );
    assert_eq!(
        line(&["classify", "--system", "sys2", "--k", "5", "--m", "1", "--seed", "1"]),
        "verdict=Periodic stated=12 generic=12 rule=S2_iiid_corrected"
    );
    assert_eq!(
        line(&["classify", "--system", "sys2", "--k", "3", "--m", "1", "--seed", "1"]),
        "verdict=Unbounded rule=S2_iiic"
    );

    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        r#"{"system":"sys2","k":1,"m":0,"init":{"x":["1","-1/2"],"y":["1","1"]}}"#,
    );
    assert_eq!(
        recurra(&["classify", "--config", &cfg]).status.code(),
        Some(2)
    );
}

#[test]
fn config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"system":"sys2","k":1"#);
    let out = recurra(&["simulate", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(
        recurra(&["simulate", "--config", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        recurra(&["classify", "--system", "sys2", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(recurra(&["sweep", "--k-max", "9"]).status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let out = recurra(&[
        "verify",
        "--system",
        "sys2",
        "--k",
        "1",
        "--m",
        "0",
        "--seed",
        "3",
        "--closed-form",
        "s3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "match=true n_checked=200\n");
    let out = recurra(&[
        "verify",
        "--system",
        "sys2",
        "--k",
        "5",
        "--m",
        "1",
        "--seed",
        "3",
        "--closed-form",
        "s5",
    ]);
    assert_eq!(stdout(&out), "match=true n_checked=200\n");
    let out = recurra(&[
        "verify",
        "--system",
        "sys2",
        "--k",
        "5",
        "--m",
        "1",
        "--seed",
        "3",
        "--closed-form",
        "s4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k ≡ 3 (mod 4)"));
}

#[test]
fn sweep_rows_and_extra_pair() {
    let out = recurra(&[
        "sweep", "--k-max", "2", "--m-max", "2", "--seeds", "1", "--pairs", "7:11",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "k,m,seed,verdict,rule,stated,generic,detected_period,unbounded_certificate,minimal_match,agree");
    assert!(lines.contains(&"2,2,1,Periodic,S2_i,6,6,6,false,true,true"));
    assert_eq!(
        *lines.last().unwrap(),
        "7,11,1,Unbounded,S2_iiid_corrected,,,,true,false,true"
    );
    assert_eq!(lines.len(), 1 + 2 * 3 + 1);
}

#[test]
fn svg_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("plot.svg");
    let out = recurra(&[
        "simulate",
        "--system",
        "sys1",
        "--k",
        "1",
        "--seed",
        "2",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(svg).unwrap().contains("<polyline"));
}

#[test]
fn bundled_configs_run() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/configs");
    let out = recurra(&["classify", "--config", &format!("{dir}/sys2_k4_m2.json")]);
    assert_eq!(stdout(&out), "verdict=Periodic stated=30 generic=30 rule=S2_iiia\n");
    let out = recurra(&["verify", "--config", &format!("{dir}/sys2_k5_m1_s5.json")]);
    assert_eq!(stdout(&out), "match=true n_checked=200\n");
}
