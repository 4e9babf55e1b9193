use std::process::{Command, Output};

use serde_json::Value;

fn pqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqc"))
        .args(args)
        .output()
        .expect("spawn pqc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn bound(o: &Output) -> f64 {
    json(o)["bound"].as_str().unwrap().parse().unwrap()
}

#[test]
fn ec_order_at_six() {
    let out = pqc(&["order", "--method", "ec", "--f", "6"]);
    let v = json(&out);
    assert_eq!(v["bound"], "0.5198943946817");
    assert_eq!(v["method"], "ec");
    assert_eq!(v["order"].as_array().unwrap().len(), 15);
    assert_eq!(v["cond_entropies"].as_array().unwrap().len(), 15);
}

#[test]
fn ldf_and_ebg_at_six() {
    for m in ["ldf", "ebg"] {
        let b = bound(&pqc(&["order", "--method", m, "--f", "6"]));
        assert!((b - 0.5197824997350).abs() < 1e-11, "{m}: {b}");
    }
}

#[test]
fn single_edge_is_trivial() {
    assert_eq!(
        json(&pqc(&["order", "--method", "ebg", "--f", "2"]))["bound"],
        "1.0000000000000"
    );
}

#[test]
fn exhaustive_at_five() {
    let b = bound(&pqc(&["search", "--method", "exhaustive", "--f", "5"]));
    assert!((b - 0.5321513151313).abs() < 1e-11);
}

#[test]
fn exhaustive_guard_exits_3() {
    let out = pqc(&["search", "--method", "exhaustive", "--f", "8"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn random_search_beats_e_ec_at_six() {
    let out = pqc(&[
        "search", "--method", "random", "--f", "6", "--budget", "2000", "--seed", "0",
    ]);
    let v = json(&out);
    assert_eq!(v["budget"], 2000);
    assert_eq!(v["fixed_colors"], 2);
    assert!(bound(&out) <= 0.5198121367672 + 1e-13);
}

#[test]
fn wide_table() {
    let out = pqc(&["table", "--f-range", "5..7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "f,ec,e-ec,ldf,ebg");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("5,0.5382035621102,0.5321513151313,"));
    assert!(lines[2].starts_with("6,0.5198943946817,0.5198121367672,"));
}

#[test]
fn single_cell_table() {
    let out = pqc(&["table", "--f-range", "5..5", "--methods", "ec"]);
    assert_eq!(stdout(&out), "f,ec\n5,0.5382035621102\n");
}

#[test]
fn long_table_to_file() {
    let path = std::env::temp_dir().join(format!("pqc-long-{}.csv", std::process::id()));
    let out = pqc(&[
        "table",
        "--f-range",
        "5..6",
        "--methods",
        "ec,ldf",
        "--long",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "f,method,bound,evaluations,wall_time_ms");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("5,ec,0.5382035621102,1,"));
}

#[test]
fn empty_method_list_is_a_usage_error() {
    assert_eq!(
        pqc(&["table", "--f-range", "5..6", "--methods", ""])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pqc(&["table", "--f-range", "7..5"]).status.code(), Some(2));
    assert_eq!(
        pqc(&["order", "--method", "nope", "--f", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn composite_field_is_rejected() {
    assert_eq!(
        pqc(&["order", "--method", "ec", "--f", "5", "--q", "4"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn json_round_trips_byte_for_byte() {
    let out = pqc(&["order", "--method", "ldf", "--f", "7"]);
    let text = stdout(&out);
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(format!("{}\n", serde_json::to_string(&v).unwrap()), text);
}

#[test]
fn no_timing_output_is_reproducible() {
    let args = [
        "search",
        "--method",
        "random",
        "--f",
        "6",
        "--budget",
        "300",
        "--seed",
        "9",
        "--no-timing",
    ];
    let a = pqc(&args);
    let b = pqc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["wall_time_ms"], 0);
}

#[test]
fn thread_count_does_not_change_results() {
    let args = [
        "search",
        "--method",
        "random",
        "--f",
        "6",
        "--budget",
        "300",
        "--no-timing",
    ];
    let one = Command::new(env!("CARGO_BIN_EXE_pqc"))
        .args(args)
        .env("PQC_THREADS", "1")
        .output()
        .unwrap();
    let four = pqc(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn raw_bound_is_hex() {
    let v = json(&pqc(&["order", "--method", "ec", "--f", "6", "--raw"]));
    let s = v["bound"].as_str().unwrap();
    assert!(s.starts_with("0x1.") && s.contains("p-1"), "{s}");
}

#[test]
fn verify_suites() {
    for (suite, f) in [
        ("coloring", "6"),
        ("remarks", "4"),
        ("entropy", "5"),
        ("graph", "6"),
    ] {
        let out = pqc(&["verify", "--suite", suite, "--f", f]);
        assert!(out.status.success(), "{suite}: {}", stdout(&out));
        assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));
    }
    let out = pqc(&["verify", "--suite", "coloring", "--f", "6"]);
    assert!(stdout(&out).contains("all 5 color sets valid matchings"));
}

#[test]
fn path_count_reference_mismatch_exits_1() {
    let out = pqc(&["verify", "--suite", "paths", "--f", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL path count: Delta_5 = 657, expected 275"));
}
