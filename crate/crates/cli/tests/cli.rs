//! End-to-end CLI checks: schemas, determinism, JSON round-trips, exit
//! codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclemix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn evolve_emits_uniform_row_at_the_c3_mixing_time() {
    let csv = stdout(&["evolve", "--model", "ct-quantum", "--n", "3", "--t", "1.3962634"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "t,n,p");
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[1], "0");
    let p: f64 = first[2].parse().unwrap();
    assert!((p - 1.0 / 3.0).abs() < 1e-7);
}

#[test]
fn evolve_accepts_exact_pi_literals() {
    let a = stdout(&["evolve", "--model", "ct-quantum", "--n", "4", "--t", "pi/2"]);
    let b = stdout(&[
        "evolve",
        "--model",
        "ct-quantum",
        "--n",
        "4",
        "--t",
        "1.5707963267948966",
    ]);
    assert_eq!(a, b);
}

#[test]
fn evolve_steps_rows_sum_to_one_per_step() {
    let csv = stdout(&["evolve", "--model", "dt-coined", "--n", "9", "--steps", "50"]);
    let mut sums = std::collections::BTreeMap::<String, f64>::new();
    for line in csv.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        *sums.entry(fields[0].to_string()).or_default() += fields[2].parse::<f64>().unwrap();
    }
    assert_eq!(sums.len(), 51);
    for (t, total) in sums {
        assert!((total - 1.0).abs() < 1e-10, "step {t}: {total}");
    }
}

#[test]
fn average_csv_schema_and_values() {
    let csv = stdout(&["average", "--model", "ct-quantum", "--n", "3", "--route", "closed"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,pbar,route");
    let row0: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(row0[2], "closed");
    assert!((row0[1].parse::<f64>().unwrap() - 5.0 / 9.0).abs() < 1e-15);
}

#[test]
fn average_route_all_emits_gap_columns() {
    let csv = stdout(&[
        "average", "--model", "ct-quantum", "--n", "4", "--route", "all", "--horizon", "500",
    ]);
    let header = csv.lines().next().unwrap();
    assert_eq!(
        header,
        "n,pbar_closed,pbar_resonance,pbar_quadrature,gap_closed_resonance,\
         gap_closed_quadrature,gap_resonance_quadrature"
    );
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let gap_cr: f64 = row[4].parse().unwrap();
    assert!(gap_cr < 1e-12);
}

#[test]
fn sigma_dt_classical_quadrature_is_tiny_on_odd_cycles() {
    let csv = stdout(&[
        "sigma",
        "--model",
        "dt-classical",
        "--n",
        "7",
        "--route",
        "quadrature",
        "--horizon",
        "1000",
    ]);
    for line in csv.lines().skip(1) {
        let v: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!(v < 1e-6);
    }
}

#[test]
fn mixing_iump_finds_the_c4_times() {
    let csv = stdout(&["mixing", "iump", "--n", "4", "--tmax", "10"]);
    let times: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    let pi = std::f64::consts::PI;
    assert!(times.iter().any(|&t| (t - pi / 2.0).abs() < 1e-6));
    assert!(times.iter().any(|&t| (t - 3.0 * pi / 2.0).abs() < 1e-6));
}

#[test]
fn identical_configs_give_byte_identical_output() {
    let args = [
        "mixing", "curve", "--model", "ct-quantum", "--n", "6", "--tgrid", "0:20:0.1",
    ];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
}

#[test]
fn thread_count_does_not_change_output() {
    let base = [
        "average",
        "--model",
        "ct-quantum",
        "--n",
        "5",
        "--route",
        "quadrature",
        "--horizon",
        "2000",
    ];
    let one = stdout(&[&base[..], &["--threads", "1"]].concat());
    let four = stdout(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one, four);
}

#[test]
fn json_document_round_trips() {
    let json = stdout(&[
        "sigma", "--model", "ct-quantum", "--n", "5", "--route", "closed", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let reemitted = serde_json::to_string_pretty(&value).unwrap() + "\n";
    assert_eq!(json, reemitted);
    assert_eq!(value["config"]["subcommand"], "sigma");
    assert_eq!(value["provenance"]["route"], "closed");
    assert_eq!(value["rows"].as_array().unwrap().len(), 5);
    let sigma0 = value["rows"][0]["sigma"].as_f64().unwrap();
    assert!((sigma0 - 4.0 * 3.0f64.sqrt() / 25.0).abs() < 1e-15);
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("cyclemix-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("avg.csv");
    let _ = stdout(&[
        "average",
        "--model",
        "ct-classical",
        "--n",
        "4",
        "--route",
        "closed",
        "--out",
        path.to_str().unwrap(),
    ]);
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("n,pbar,route"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn bessel_check_passes_and_reports() {
    let csv = stdout(&["bessel", "check", "--n", "8", "--t", "7.3"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "check,value,bound,pass");
    // five hard identities, all true
    assert_eq!(lines.iter().filter(|l| l.ends_with(",true")).count(), 5);
    assert!(lines.iter().any(|l| l.starts_with("line_vs_cycle_max_gap")));
}

#[test]
fn config_errors_exit_2() {
    for args in [
        &["evolve", "--model", "ct-quantum", "--n", "2", "--t", "1"][..],
        &["evolve", "--model", "ct-quantum", "--n", "5", "--steps", "3"][..],
        &["evolve", "--model", "dt-classical", "--n", "5", "--t", "1"][..],
        &["sigma", "--model", "dt-classical", "--n", "4", "--route", "closed"][..],
        &["average", "--model", "ct-classical", "--n", "5", "--route", "resonance"][..],
        &["mixing", "curve", "--model", "dt-classical", "--n", "5", "--tgrid", "0:5:0.5"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["evolve", "--model", "no-such-model", "--n", "5", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_flag_is_accepted_and_ignored() {
    let a = stdout(&["average", "--model", "ct-quantum", "--n", "3", "--route", "closed"]);
    let b = stdout(&[
        "average", "--model", "ct-quantum", "--n", "3", "--route", "closed", "--seed", "42",
    ]);
    assert_eq!(a, b);
}
