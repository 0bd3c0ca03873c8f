use std::io::Write;
use std::process::{Command, Output};

fn rwdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rwdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = rwdist(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Rows of a CSV series as numbers, header dropped.
fn rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

fn four_node_file() -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# four-node example\n4\n0 1\n0 2\n0 3\n1 2\n2 3").unwrap();
    f
}

#[test]
fn hitting_from_file() {
    let f = four_node_file();
    let path = f.path().to_str().unwrap();
    let csv = stdout(&[
        "hitting",
        "--graph",
        path,
        "--start",
        "0",
        "--target",
        "3",
        "--horizon",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(csv.lines().next(), Some("t,cdf,pmf"));
    assert_eq!(
        csv.lines().nth(1),
        Some("1,0.3333333333333333,0.3333333333333333")
    );
    let r = rows(&csv);
    assert_eq!(r.len(), 5);
    assert!((r[1][1] - 4.0 / 9.0).abs() < 1e-15);
    assert!((r[1][2] - 1.0 / 9.0).abs() < 1e-15);
}

#[test]
fn hitting_on_k2_is_certain() {
    let csv = stdout(&[
        "hitting",
        "--generate",
        "complete:2",
        "--start",
        "0",
        "--target",
        "1",
    ]);
    let r = rows(&csv);
    assert_eq!(r.len(), 139, "default horizon ceil(100 * 2 ln 2)");
    assert!(r.iter().all(|row| row[1] == 1.0));
}

#[test]
fn hitting_a_set_of_targets() {
    let f = four_node_file();
    let csv = stdout(&[
        "hitting",
        "--graph",
        f.path().to_str().unwrap(),
        "--start",
        "0",
        "--target",
        "1,3",
        "--horizon",
        "20",
    ]);
    for (t, row) in rows(&csv).iter().enumerate() {
        assert!((row[1] - (1.0 - 3f64.powi(-(t as i32 + 1)))).abs() < 1e-12);
    }
}

#[test]
fn start_equal_to_target_is_a_usage_error() {
    let out = rwdist(&[
        "hitting",
        "--generate",
        "complete:3",
        "--start",
        "1",
        "--target",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("start node 1"));
}

#[test]
fn commute_methods_agree() {
    let f = four_node_file();
    let path = f.path().to_str().unwrap();
    let run = |method| {
        rows(&stdout(&[
            "commute",
            "--graph",
            path,
            "--i",
            "0",
            "--j",
            "3",
            "--horizon",
            "40",
            "--method",
            method,
        ]))
    };
    let (chain, conv) = (run("chain"), run("convolution"));
    assert!((chain[1][1] - 1.0 / 6.0).abs() < 1e-15);
    assert!((conv[1][1] - 1.0 / 6.0).abs() < 1e-15);
    for (a, b) in chain.iter().zip(&conv) {
        assert!((a[1] - b[1]).abs() < 1e-10);
    }
}

#[test]
fn commute_on_k2_and_equal_endpoints() {
    let r = rows(&stdout(&[
        "commute",
        "--generate",
        "complete:2",
        "--i",
        "0",
        "--j",
        "1",
        "--horizon",
        "3",
    ]));
    assert_eq!(r[0][1], 0.0);
    assert_eq!(r[1][1], 1.0);
    let out = rwdist(&[
        "commute",
        "--generate",
        "complete:2",
        "--i",
        "1",
        "--j",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

fn rounded(csv: &str) -> String {
    rows(csv)
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| format!("{:.10}", (v * 1e10).round() / 1e10 + 0.0))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn closed_form_matches_exact_on_k10() {
    let closed = stdout(&[
        "cover",
        "--generate",
        "complete:10",
        "--start",
        "0",
        "--method",
        "closed",
    ]);
    let exact = stdout(&[
        "cover",
        "--generate",
        "complete:10",
        "--start",
        "0",
        "--method",
        "exact",
    ]);
    assert_eq!(rows(&closed).len(), 2303);
    assert_eq!(rounded(&closed), rounded(&exact));
}

#[test]
fn approx_reduces_to_exact_from_path_endpoint() {
    let approx = rows(&stdout(&[
        "cover",
        "--generate",
        "path:7",
        "--start",
        "0",
        "--method",
        "approx",
    ]));
    let exact = rows(&stdout(&[
        "cover",
        "--generate",
        "path:7",
        "--start",
        "0",
        "--method",
        "exact",
    ]));
    for (a, e) in approx.iter().zip(&exact) {
        assert!((a[1] - e[1]).abs() < 1e-12);
    }
}

#[test]
fn monte_carlo_has_band_columns_and_is_reproducible() {
    let args = [
        "cover",
        "--generate",
        "erdos_renyi:20:0.3",
        "--seed",
        "7",
        "--method",
        "mc",
        "--trials",
        "100000",
        "--horizon",
        "1000",
    ];
    let first = stdout(&args);
    assert_eq!(first.lines().next(), Some("t,cdf,pmf,band_low,band_high"));
    let eps = 0.005146997846583985;
    for row in rows(&first) {
        assert!(row[3] <= row[1] && row[1] <= row[4]);
        assert!((row[4] - row[3]) <= 2.0 * eps + 1e-15);
    }
    assert_eq!(first, stdout(&args));
}

#[test]
fn exact_refuses_large_graphs() {
    let out = rwdist(&[
        "compare",
        "--generate",
        "path:50",
        "--start",
        "25",
        "--method",
        "exact,approx",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("use the approx"));
    let out = rwdist(&["cover", "--generate", "cycle:10", "--cap", "30"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force-cap"));
    assert!(rwdist(&[
        "cover",
        "--generate",
        "cycle:10",
        "--cap",
        "30",
        "--force-cap",
        "--horizon",
        "5"
    ])
    .status
    .success());
}

#[test]
fn compare_path_middle_start() {
    let csv = stdout(&[
        "compare",
        "--generate",
        "path:50",
        "--start",
        "25",
        "--method",
        "closed,approx",
        "--horizon",
        "8000",
    ]);
    assert_eq!(csv.lines().next(), Some("t,closed-path,approx"));
    let summary = csv.lines().last().unwrap();
    assert!(summary.starts_with("# sup_error closed-path:approx="));
    let sup: f64 = summary.rsplit('=').next().unwrap().parse().unwrap();
    let r = rows(&csv);
    assert_eq!(r.len(), 8000);
    let max = r
        .iter()
        .map(|row| (row[1] - row[2]).abs())
        .fold(0.0, f64::max);
    assert_eq!(sup, max);
    assert!(sup > 0.0);
}

#[test]
fn compare_complete_graph_json() {
    let json = stdout(&[
        "compare",
        "--generate",
        "complete:50",
        "--method",
        "closed,approx",
        "--horizon",
        "400",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["metadata"]["methods"][0], "closed-complete");
    assert_eq!(doc["records"].as_array().unwrap().len(), 400);
    assert!(doc["records"][399]["cdf"]["approx"].as_f64().is_some());
    assert_eq!(doc["sup_error"][0]["a"], "closed-complete");
}

#[test]
fn compare_needs_two_methods() {
    let out = rwdist(&["compare", "--generate", "complete:5", "--method", "exact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let base = [
        "cover",
        "--generate",
        "cycle:8",
        "--start",
        "3",
        "--method",
        "exact",
        "--horizon",
        "300",
    ];
    let csv = rows(&stdout(&base));
    let json = stdout(&[&base[..], &["--format", "json"]].concat());
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), csv.len());
    for (row, rec) in csv.iter().zip(records) {
        assert_eq!(rec["t"].as_f64(), Some(row[0]));
        for (key, v) in [("cdf", row[1]), ("pmf", row[2])] {
            let j = rec[key].as_f64().unwrap();
            assert!(
                (j - v).abs() <= 1e-12 * j.abs().max(v.abs()),
                "{key}: {j} vs {v}"
            );
        }
    }
    let meta = &doc["metadata"];
    assert_eq!(meta["horizon"], 300);
    assert_eq!(meta["start"], 3);
    assert_eq!(meta["method"], "exact");
    assert_eq!(meta["graph_hash"].as_str().unwrap().len(), 64);
    assert!(meta.get("seed").is_none());
    assert_eq!(meta["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn stochastic_runs_record_seed_and_rng() {
    let json = stdout(&[
        "cover",
        "--generate",
        "erdos_renyi:12:0.4",
        "--seed",
        "3",
        "--method",
        "mc",
        "--trials",
        "2000",
        "--horizon",
        "50",
        "--format",
        "json",
    ]);
    let meta = &serde_json::from_str::<serde_json::Value>(&json).unwrap()["metadata"];
    assert_eq!(meta["seed"], 3);
    assert_eq!(meta["simulation"]["trials"], 2000);
    assert_eq!(
        meta["simulation"]["rng"],
        "chacha8/seed_from_u64/stream=trial"
    );
}

#[test]
fn all_pairs_output_is_raw_unless_clamped() {
    let base = [
        "cover",
        "--generate",
        "path:6",
        "--start",
        "0",
        "--method",
        "approx-all-pairs",
        "--horizon",
        "30",
    ];
    let raw = rows(&stdout(&base));
    let clamped = rows(&stdout(&[&base[..], &["--clamp"]].concat()));
    // Raw values at t = 5 overshoot the exact 1/16; the clamped series is still monotone.
    assert!(raw[4][1] > 0.25);
    assert!(clamped.windows(2).all(|w| w[1][1] >= w[0][1]));
    assert!(clamped.iter().all(|r| (0.0..=1.0).contains(&r[1])));
}

#[test]
fn explicit_order_is_validated() {
    let ok = rwdist(&[
        "cover",
        "--generate",
        "path:5",
        "--method",
        "approx",
        "--order",
        "explicit:4,3,2,1",
        "--horizon",
        "10",
    ]);
    assert!(ok.status.success());
    let bad = rwdist(&[
        "cover",
        "--generate",
        "path:5",
        "--method",
        "approx",
        "--order",
        "explicit:4,3",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn input_errors_have_distinct_codes() {
    let missing = rwdist(&["cover", "--graph", "/definitely/not/here.edges"]);
    assert_eq!(missing.status.code(), Some(4));

    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3\n0 1\n1 x").unwrap();
    let malformed = rwdist(&["cover", "--graph", f.path().to_str().unwrap()]);
    assert_eq!(malformed.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 3"));

    let both = rwdist(&["cover", "--graph", "x", "--generate", "path:4"]);
    assert_eq!(both.status.code(), Some(2));
    let neither = rwdist(&["cover", "--start", "0"]);
    assert_eq!(neither.status.code(), Some(2));
    let not_closed = rwdist(&[
        "cover",
        "--generate",
        "erdos_renyi:8:0.5",
        "--method",
        "closed",
    ]);
    assert_eq!(not_closed.status.code(), Some(2));
}
