//! End-to-end tests of the capbound binary: exit codes, output shapes and
//! determinism.

use std::process::{Command, Output};

fn capbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capbound"))
        .args(args)
        .env_remove("CAPBOUND_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn bound_happy_path_shows_display_value() {
    let out = capbound(&["bound", "--n", "4", "--q", "3", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0.923"), "missing display value in {text}");
    assert!(
        text.contains("6 + 3*(2.756)^n"),
        "missing bound form in {text}"
    );
}

#[test]
fn bound_parity_case_exits_2() {
    let out = capbound(&["bound", "--n", "4", "--q", "2", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(
        err.contains("parity") || err.contains("even"),
        "unhelpful message: {err}"
    );
}

#[test]
fn bound_out_of_range_exits_1() {
    let out = capbound(&["bound", "--n", "2", "--q", "3", "--m", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bound_json_is_deterministic_and_versioned() {
    let a = capbound(&[
        "bound", "--n", "3", "--q", "2", "--m", "4", "--format", "json",
    ]);
    let b = capbound(&[
        "bound", "--n", "3", "--q", "2", "--m", "4", "--format", "json",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(
        a.stdout, b.stdout,
        "identical invocations must be byte-identical"
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["bound_form"], "8 + 4*(1.755)^n");
    assert_eq!(parsed["mu_display"], 0.812);
}

#[test]
fn bound_csv_column_order() {
    let out = capbound(&[
        "bound", "--n", "4", "--q", "3", "--m", "3", "--format", "csv",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with(
        "n,q,m,x0,h_min,theorem_bound,mu_upper,alpha,asymptotic_base,lambda_value,parity_supported\n"
    ));
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("4,3,3,"));
    assert!(row.ends_with(",45,true"));
}

#[test]
fn table_defaults_render_full_grid() {
    let out = capbound(&["table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // spot cells from the exact engine, and unfilled parity cells
    assert!(text.contains("0.923"));
    assert!(text.contains("0.690"));
    assert!(text.contains("0.644"));
    let m3_row = text
        .lines()
        .find(|l| l.trim_start().starts_with("3 |"))
        .unwrap();
    assert!(
        m3_row.contains('-'),
        "q=2 cell of the m=3 row must be unfilled: {m3_row}"
    );
}

#[test]
fn table_asymptotic_style() {
    let out = capbound(&["table", "--style", "asymptotic"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for base in ["1.188", "1.504", "1.853", "2.213", "2.577", "2.944"] {
        assert!(text.contains(base), "missing base {base} in {text}");
    }
}

#[test]
fn table_empty_qs_is_usage_error() {
    let out = capbound(&["table", "--qs", ""]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_rejects_non_prime_power_q() {
    let out = capbound(&["table", "--qs", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_csv_has_unfilled_cells() {
    let out = capbound(&["table", "--ms", "3", "--qs", "2,3", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "m,q,parity_supported,x0,h_min,mu_raw,mu_display"
    );
    assert_eq!(lines.next().unwrap(), "3,2,false,,,,");
    assert!(lines.next().unwrap().starts_with("3,3,true,"));
}

#[test]
fn lambda_prints_full_decimal() {
    let out = capbound(&["lambda", "--alpha", "2", "--beta", "2", "--gamma", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "6\n");

    // vacuous sum cap: (beta+1)^alpha
    let out = capbound(&["lambda", "--alpha", "3", "--beta", "2", "--gamma", "99"]);
    assert_eq!(stdout(&out), "27\n");

    // large enough to overflow u64: 101^20
    let out = capbound(&[
        "lambda", "--alpha", "20", "--beta", "100", "--gamma", "2000",
    ]);
    assert_eq!(
        stdout(&out).trim(),
        "12201900399479668244827490915525641902001"
    );
}

#[test]
fn lambda_negative_flag_exits_1() {
    let out = capbound(&["lambda", "--alpha", "2", "--beta", "2", "--gamma", "-3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_exact_known_maxima() {
    for (n, q, m, expect) in [
        ("3", "3", "3", "9"),
        ("2", "3", "3", "4"),
        ("3", "2", "4", "4"),
    ] {
        let out = capbound(&[
            "search", "--n", n, "--q", q, "--m", m, "--exact", "--format", "json",
        ]);
        assert_eq!(out.status.code(), Some(0));
        let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(parsed["best_size"].to_string(), expect, "({n},{q},{m})");
        assert_eq!(parsed["exact"], true);
    }
}

#[test]
fn search_requires_exactly_one_mode() {
    let out = capbound(&["search", "--n", "2", "--q", "3", "--m", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = capbound(&[
        "search", "--n", "2", "--q", "3", "--m", "3", "--exact", "--greedy",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_budget_flag_truncates_but_exits_0() {
    let out = capbound(&[
        "search", "--n", "3", "--q", "3", "--m", "3", "--exact", "--budget", "50", "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["exact"], false);
}

#[test]
fn search_env_budget_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_capbound"))
        .args([
            "search", "--n", "3", "--q", "3", "--m", "3", "--exact", "--format", "json",
        ])
        .env("CAPBOUND_BUDGET", "50")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["exact"], false);
    assert_eq!(parsed["budget"], 50);
}

#[test]
fn search_space_too_large_exits_3() {
    let out = capbound(&["search", "--n", "5", "--q", "3", "--m", "3", "--exact"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn search_witness_file_round_trips() {
    let dir = std::env::temp_dir().join("capbound-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("witness.pts");
    let out = capbound(&[
        "search",
        "--n",
        "2",
        "--q",
        "3",
        "--m",
        "3",
        "--exact",
        "--witness-out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n=2 p=3 k=1\n"));
    assert_eq!(text.lines().count(), 5, "header plus the 4 witness points");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn search_greedy_is_deterministic_given_seed() {
    let args = [
        "search", "--n", "3", "--q", "3", "--m", "3", "--greedy", "--seed", "11", "--format",
        "json",
    ];
    let a = capbound(&args);
    let b = capbound(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_suites_pass_and_unknown_fails() {
    for suite in ["fields", "lambda", "analysis"] {
        let out = capbound(&["verify", "--suite", suite]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "suite {suite}: {}",
            stderr(&out)
        );
        assert!(stdout(&out).contains("PASS"));
    }
    let out = capbound(&["verify", "--suite", "nosuch"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_json_lines_are_verdicts() {
    let out = capbound(&["verify", "--suite", "analysis", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let parsed: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(parsed["schema"], 1);
        assert_eq!(parsed["result"], "pass");
    }
}

#[test]
fn verify_csv_has_header_and_rows() {
    let out = capbound(&["verify", "--suite", "lambda", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "suite,check,result,detail");
    for line in lines {
        assert!(line.starts_with("lambda,"), "unexpected row {line}");
        assert!(line.contains(",pass,"), "unexpected result in {line}");
    }
}

#[test]
fn verify_tiny_budget_fails_with_exit_1() {
    // a budget below the sweep sizes makes the exhaustive claims unprovable
    let out = capbound(&["verify", "--suite", "char2", "--budget", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn search_csv_single_row() {
    let out = capbound(&["search", "--n", "2", "--q", "3", "--m", "3", "--exact", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,q,m,mode,best_size,exact,nodes_visited,budget,seed,restarts"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("2,3,3,exact,4,true,"));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("capbound-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bound.json");
    let out = capbound(&[
        "bound",
        "--n",
        "4",
        "--q",
        "3",
        "--m",
        "3",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["mu_display"], 0.923);
    std::fs::remove_file(&path).unwrap();
}
