use std::process::{Command, Output};

use serde_json::Value;
use xop::algebra::parse_rational;
use xop::construct::{exceptional_polynomial, FamilySpec};

fn xop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xop"))
        .args(args)
        .env_remove("XOP_CONFIG")
        .env_remove("XOP_PRECISION_BITS")
        .env_remove("XOP_MAX_ABERTH_ITERS")
        .output()
        .expect("spawn xop")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_round_trips_coefficients() {
    let out = xop(&["--n", "9", "construct", "laguerre3", "--m", "5", "--alpha", "-2/5"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["degree"], 9);
    let coeffs: Vec<_> = json["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| parse_rational(c.as_str().unwrap()).unwrap())
        .collect();
    let spec = FamilySpec::LaguerreTypeIII { m: 5, alpha: parse_rational("-2/5").unwrap() };
    let p = exceptional_polynomial(&spec, 9).unwrap();
    assert_eq!(coeffs.as_slice(), p.coeffs());
}

#[test]
fn output_is_deterministic() {
    let args = ["--n", "14", "zeros", "hermite", "--partition", "2,2"];
    let a = xop(&args);
    let b = xop(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("re,im,class,matched_limit_re,matched_limit_im,distance"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 14);
    assert_eq!(rows.iter().filter(|r| r.contains(",exceptional,")).count(), 4);
}

#[test]
fn writes_output_and_plot_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rate.csv");
    let plot = dir.path().join("rate.dat");
    let out = xop(&[
        "--grid",
        "20,30",
        "--anchor",
        "0.7i",
        "-o",
        csv.to_str().unwrap(),
        "--plot",
        plot.to_str().unwrap(),
        "rate",
        "hermite",
        "--partition",
        "1,1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let table = std::fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("n,zeta_re,zeta_im,scaled_gap_re,scaled_gap_im,abs_gap_to_limit"));
    assert!(table.lines().any(|l| l.starts_with("20,")));
    assert!(table.lines().any(|l| l.starts_with("limit,")));
    let data = std::fs::read_to_string(&plot).unwrap();
    let rows: Vec<Vec<f64>> = data
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.len() == 2 && r[1].is_finite()));
}

#[test]
fn config_file_and_environment_layers() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("xop.conf");
    std::fs::write(&cfg, "# low digits\ndigits = 5\n").unwrap();
    let out = xop(&["--config", cfg.to_str().unwrap(), "--n", "6", "zeros", "hermite", "--partition", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let first = stdout(&out).lines().nth(1).unwrap().to_string();
    let re = first.split(',').next().unwrap();
    assert!(re.trim_start_matches('-').replace('.', "").trim_start_matches('0').len() <= 5, "{first}");

    std::fs::write(&cfg, "colour = blue\n").unwrap();
    let out = xop(&["--config", cfg.to_str().unwrap(), "--n", "6", "zeros", "hermite", "--partition", "1,1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_xop"))
        .args(["--n", "6", "zeros", "hermite", "--partition", "1,1"])
        .env("XOP_PRECISION_BITS", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| xop(args).status.code();
    assert_eq!(code(&["--n", "2", "construct", "hermite", "--partition", "1,1"]), Some(2));
    assert_eq!(code(&["--n", "5", "construct", "laguerre3", "--m", "2", "--alpha", "0.4"]), Some(2));
    assert_eq!(code(&["--grid", "", "--anchor", "0.7i", "rate", "hermite", "--partition", "1,1"]), Some(2));
    let ones = vec!["1"; 13].join(",");
    assert_eq!(code(&["--n", "20", "construct", "hermite", "--partition", &ones]), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_xop"))
        .args(["--n", "60", "zeros", "hermite", "--partition", "2,2"])
        .env("XOP_MAX_ABERTH_ITERS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_reports_json() {
    let out = xop(&["--n", "12", "verify", "--which", "ode", "hermite", "--partition", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["check"], "ode");
    assert_eq!(json["pass"], true);
    for key in ["inputs", "threshold"] {
        assert!(json.get(key).is_some(), "missing {key}");
    }

    let out = xop(&["--n", "30", "verify", "--which", "electrostatic", "laguerre3", "--m", "5", "--alpha", "-2/5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn limits_report() {
    let out = xop(&["limits", "laguerre3", "--m", "5", "--alpha", "-2/5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-1.0077251459474"), "{text}");
}
