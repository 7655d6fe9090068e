use std::process::Command;

use desitter_cli::output::{Format, Row, Table, Value};
use desitter_cli::run_with;
use serde_json::Value as Json;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("desitter").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Data rows of a CSV output, without comment lines and header.
fn csv_rows(s: &str) -> Vec<Vec<String>> {
    let body: String = s
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let mut r = csv::Reader::from_reader(body.as_bytes());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn csv_error_row_prints_nan_and_quotes() {
    let mut t = Table::new("f(t) = t", &["t", "re"]);
    t.push(Row::failed(vec![Value::Num(1.0), Value::Num(f64::NAN)], "bad, value"));
    let mut buf = Vec::new();
    t.write(Format::Csv, &mut buf).unwrap();
    assert_eq!(
        String::from_utf8(buf).unwrap(),
        "# citation: f(t) = t\nt,re,error\n1.0000000000000000e0,nan,\"bad, value\"\n"
    );
}

#[test]
fn csv_prints_seventeen_significant_digits() {
    let mut t = Table::new("x", &["v"]);
    t.push(Row::ok(vec![Value::Num(0.1)]));
    t.push(Row::ok(vec![Value::Num(-0.0)]));
    let mut buf = Vec::new();
    t.write(Format::Csv, &mut buf).unwrap();
    let s = String::from_utf8(buf).unwrap();
    let rows = csv_rows(&s);
    assert_eq!(rows[0][0], "1.0000000000000001e-1");
    assert_eq!(num(&rows[0][0]), 0.1);
    assert_eq!(rows[1][0], "0.0000000000000000e0");
}

#[test]
fn json_rows_carry_citation() {
    let mut t = Table::new("f(t) = t", &["t"]);
    t.push(Row::ok(vec![Value::Num(0.5)]));
    t.push(Row::failed(vec![Value::Num(f64::NAN)], "boom"));
    let mut buf = Vec::new();
    t.write(Format::Json, &mut buf).unwrap();
    let v: Json = serde_json::from_slice(&buf).unwrap();
    assert_eq!(v["rows"][0]["citation"], "f(t) = t");
    assert_eq!(v["rows"][0]["t"], 0.5);
    assert!(v["rows"][0]["error"].is_null());
    assert!(v["rows"][1]["t"].is_null());
    assert_eq!(v["rows"][1]["error"], "boom");
}

#[test]
fn eval2f1_matches_closed_form() {
    // 2F1(1, 1; 2; z) = −log(1−z)/z
    let (code, out, _) = run(&["eval2f1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5", "--verify"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# citation: 2F1(a, b; c; z)"));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    let expect = 2.0 * 2f64.ln();
    assert!((num(&rows[0][2]) - expect).abs() < 1e-14);
    assert_eq!(rows[0][4], "series");
    assert!(num(&rows[0][5]) < 1e-12);
}

#[test]
fn eval2f1_reports_continuation_region() {
    let (code, out, _) = run(&[
        "eval2f1",
        "--a",
        "0.5",
        "--b",
        "1",
        "--c",
        "1.5",
        "--z=-3+0.5i",
        "--verify",
    ]);
    assert_eq!(code, 0);
    let rows = csv_rows(&out);
    assert_ne!(rows[0][4], "series");
    assert!(num(&rows[0][5]) < 1e-12);
}

#[test]
fn eval2f1_on_cut_is_domain_error() {
    let (code, out, err) = run(&["eval2f1", "--a", "0.5", "--b", "1", "--c", "1.5", "--z", "2"]);
    assert_eq!(code, 3);
    let rows = csv_rows(&out);
    assert_eq!(&rows[0][2..4], ["nan", "nan"]);
    assert!(rows[0][5].contains("cut"));
    assert!(err.contains("domain error"));
}

#[test]
fn spherical_d3_closed_form() {
    // d = 3: φ_λ(a_t) = sinh(λt)/(λ sinh t).
    let (code, out, _) = run(&[
        "spherical",
        "--d",
        "3",
        "--lambda",
        "0.4",
        "--start",
        "0.5",
        "--stop",
        "2.5",
        "--count",
        "5",
        "--verify",
    ]);
    assert_eq!(code, 0, "{out}");
    for row in csv_rows(&out) {
        let t = num(&row[0]);
        let expect = (0.4 * t).sinh() / (0.4 * t.sinh());
        assert!((num(&row[1]) - expect).abs() < 1e-13);
        assert!(num(&row[3]) < 1e-10);
    }
}

#[test]
fn spherical_boundary_values_are_conjugate() {
    let args = |side| {
        run(&[
            "spherical",
            "--d",
            "4",
            "--lambda",
            "0.3",
            "--start",
            "0.5",
            "--stop",
            "2",
            "--count",
            "4",
            "--boundary",
            side,
        ])
    };
    let ((cp, plus, _), (cm, minus, _)) = (args("plus"), args("minus"));
    assert_eq!((cp, cm), (0, 0));
    for (p, m) in csv_rows(&plus).iter().zip(csv_rows(&minus).iter()) {
        assert!((num(&p[1]) - num(&m[1])).abs() < 1e-12);
        assert!((num(&p[2]) + num(&m[2])).abs() < 1e-12);
        assert!(num(&p[2]).abs() > 1e-3);
    }
}

#[test]
fn spherical_grid_errors_are_usage_errors() {
    let (code, _, err) = run(&[
        "spherical",
        "--d",
        "3",
        "--lambda",
        "0.4",
        "--start",
        "1",
        "--stop",
        "0",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("usage"));
    let (code, _, _) = run(&[
        "spherical",
        "--d",
        "3",
        "--lambda",
        "0.4",
        "--start",
        "0",
        "--stop",
        "1",
        "--scale",
        "log",
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["spherical", "--d", "3", "--lambda", "x", "--start", "0", "--stop", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn log_grid_is_geometric() {
    let (code, out, _) = run(&[
        "spherical",
        "--d",
        "2",
        "--lambda",
        "0.2",
        "--start",
        "0.01",
        "--stop",
        "1",
        "--count",
        "3",
        "--scale",
        "log",
    ]);
    assert_eq!(code, 0);
    let ts: Vec<f64> = csv_rows(&out).iter().map(|r| num(&r[0])).collect();
    assert!((ts[1] - 0.1).abs() < 1e-15);
}

#[test]
fn jump_is_zero_at_spacelike_points() {
    let (code, out, _) = run(&[
        "jump",
        "--d",
        "3",
        "--lambda",
        "0.7i",
        "--region",
        "spacelike",
        "--start",
        "0.2",
        "--stop",
        "2",
        "--count",
        "4",
        "--verify",
    ]);
    assert_eq!(code, 0, "{out}");
    for row in csv_rows(&out) {
        assert!(num(&row[1]) > -1.0);
        assert_eq!(num(&row[2]), 0.0);
        assert_eq!(num(&row[3]), 0.0);
    }
}

#[test]
fn jump_matches_eps_limit_in_future_and_past() {
    for region in ["future", "past"] {
        let (code, out, _) = run(&[
            "jump", "--d", "4", "--lambda", "0.3", "--region", region, "--start", "0.3", "--stop", "2", "--count", "4",
            "--verify", "--tol", "1e-6",
        ]);
        assert_eq!(code, 0, "{region}: {out}");
        for row in csv_rows(&out) {
            assert!(num(&row[1]) < -1.0);
            assert!(num(&row[4]) < 1e-6);
        }
    }
}

#[test]
fn verify_tolerance_failure_exits_four() {
    let (code, _, err) = run(&[
        "jump", "--d", "4", "--lambda", "0.3", "--start", "0.3", "--stop", "2", "--count", "3", "--verify", "--tol",
        "0",
    ]);
    assert_eq!(code, 4);
    assert!(err.contains("consistency"));
}

#[test]
fn huygens_scan_flags_even_dimensions() {
    let (code, out, _) = run(&["huygens-scan", "--d", "4,6", "--lambda", "0.5,1.5,0.3", "--verify"]);
    assert_eq!(code, 3, "(4, 1.5) is outside the admissible set");
    let rows = csv_rows(&out);
    let find = |d: &str, l: f64| rows.iter().find(|r| r[0] == d && num(&r[1]) == l).unwrap().clone();
    assert_eq!(find("4", 0.5)[3], "true");
    assert_eq!(find("6", 1.5)[3], "true");
    assert_eq!(find("6", 0.3)[3], "false");
    assert!(find("4", 1.5)[5].contains("outside"));
    assert!(num(&find("4", 0.5)[4]) < 1e-10);
    assert!(num(&find("6", 0.3)[4]) > 1e-3);
}

#[test]
fn matrix_spherical_header_and_oracle() {
    let (code, out, _) = run(&[
        "matrix-spherical",
        "--ell",
        "2",
        "--mu",
        "0",
        "--lambda=-2",
        "--start",
        "0",
        "--stop",
        "1",
        "--count",
        "3",
        "--verify",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("positive_definite=true label=relative_discrete"));
    let rows = csv_rows(&out);
    assert_eq!(rows[0].len(), 1 + 2 * 3 + 2);
    assert!(rows.iter().all(|r| num(&r[7]) < 1e-10));
    // t = 0 is the identity
    assert_eq!(num(&rows[0][1]), 1.0);
}

#[test]
fn matrix_spherical_ell1_against_quadrature() {
    let (code, out, _) = run(&[
        "matrix-spherical",
        "--ell",
        "1",
        "--mu=-1",
        "--lambda",
        "0.5i",
        "--start",
        "0.1",
        "--stop",
        "1.5",
        "--count",
        "4",
        "--verify",
        "--tol",
        "1e-9",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("label=unitary_principal"));
}

#[test]
fn matrix_spherical_invalid_parameters() {
    let (code, _, err) = run(&[
        "matrix-spherical",
        "--ell",
        "2",
        "--mu",
        "1",
        "--lambda",
        "0.5",
        "--start",
        "0",
        "--stop",
        "1",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("domain"));
}

#[test]
fn classify_defaults_to_json_with_witness() {
    let (code, out, _) = run(&["classify", "--x", "0.5,1.2,0.3", "--y", "0.2,-1,0.2", "--verify"]);
    assert_eq!(code, 3, "points are not on dS: {out}");
    let s = (1.0f64 + 0.25).sqrt();
    let (x, y) = (format!("0.5,{s},0"), "0,-1,0".to_string());
    let (code, out, _) = run(&["classify", "--x", &x, "--y", &y, "--verify"]);
    assert_eq!(code, 0, "{out}");
    let v: Json = serde_json::from_str(&out).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row["class"], "spacelike");
    assert_eq!(row["witness_separates"], true);
    assert_eq!(row["wedge_witness"].as_str().unwrap().split(';').count(), 3);
}

#[test]
fn classify_future_point() {
    let r: f64 = 0.8;
    let y = format!("{},{},0", r.sinh(), r.cosh());
    let (code, out, _) = run(&["classify", "--x", "0,1,0", "--y", &y, "--format", "csv"]);
    assert_eq!(code, 0);
    let rows = csv_rows(&out);
    assert_eq!(rows[0][0], "future");
    assert!((num(&rows[0][1]) + r.cosh()).abs() < 1e-15);
    assert_eq!(rows[0][2], "");
}

#[test]
fn d1_demo_two_atom_oracle() {
    let (code, out, _) = run(&[
        "d1-demo",
        "--m",
        "1.3",
        "--start=-2",
        "--stop",
        "2",
        "--count",
        "5",
        "--verify",
        "--tol",
        "1e-12",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("# orientation:"));
    for row in csv_rows(&out) {
        let x = num(&row[0]);
        assert!((num(&row[1]) - (1.3 * x).cos()).abs() < 1e-15);
        assert_eq!(num(&row[4]), -num(&row[6]));
    }
}

#[test]
fn d1_demo_asymmetric_measure_marks_rows() {
    let (code, out, _) = run(&[
        "d1-demo",
        "--atoms",
        "1:0.5,2:1",
        "--start",
        "0",
        "--stop",
        "1",
        "--count",
        "2",
    ]);
    assert_eq!(code, 3);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r[3] == "nan" && r[7].contains("symmetric")));
    let (code, _, _) = run(&["d1-demo", "--atoms", "1", "--start", "0", "--stop", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn kernel_rejects_wrong_dimension_and_off_manifold() {
    let (code, _, _) = run(&["kernel", "--d", "2", "--lambda", "0.3", "--z", "0.6i,0", "--w", "0,1,0"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["kernel", "--d", "2", "--lambda", "0.3", "--z", "2i,0,1", "--w", "0,1,0"]);
    assert_eq!(code, 3);
    let (code, out, _) = run(&[
        "kernel",
        "--d",
        "2",
        "--lambda",
        "0.3",
        "--z",
        "0.6i,0,0.8",
        "--w",
        "0,1,0",
        "--verify",
    ]);
    assert_eq!(code, 0);
    assert!(num(&csv_rows(&out)[0][2]) < 1e-12);
}

#[test]
fn verify_subcommand_prints_lines() {
    let (code, out, _) = run(&["verify", "--criterion", "1,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("criterion  1 ["));
    assert!(out.contains("2/2 criteria pass"));
    assert!(out.contains("orientation:"));
    let (code, _, _) = run(&["verify", "--criterion", "11"]);
    assert_eq!(code, 2);
}

#[test]
fn outputs_are_deterministic() {
    let args = [
        "jump", "--d", "5", "--lambda", "1.1", "--start", "0.1", "--stop", "2", "--count", "6", "--format", "json",
    ];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_desitter");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(
        status(&["eval2f1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5"]),
        Some(0)
    );
    assert_eq!(status(&["eval2f1", "--a", "1"]), Some(2));
    assert_eq!(
        status(&["eval2f1", "--a", "1", "--b", "1", "--c", "2", "--z", "3"]),
        Some(3)
    );
    assert_eq!(status(&["nonsense"]), Some(2));
}
