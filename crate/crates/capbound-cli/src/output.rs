//! Serializable views and renderers for the CLI: JSON (schema-versioned),
//! CSV with fixed column orders, and human-oriented text.

use std::fmt::Write as _;

use capbound::suites::SuiteReport;
use capbound::{round_down_3dp, round_up_3dp, AsymptoticRow, BoundReport, SearchResult, TableCell};
use serde::Serialize;

/// Rounds to 12 significant decimal digits; all JSON floats pass through
/// this so identical invocations stay byte-identical.
pub fn sig12(x: f64) -> f64 {
    format!("{x:.11e}")
        .parse()
        .expect("scientific notation round-trips")
}

#[derive(Serialize)]
struct BoundJson {
    schema: u32,
    report: &'static str,
    n: u32,
    q: u32,
    m: u32,
    x0: f64,
    h_min: f64,
    theorem_bound: f64,
    mu_upper: f64,
    mu_display: f64,
    alpha: f64,
    asymptotic_base: f64,
    lambda_value: String,
    beta: f64,
    parity_supported: bool,
    bound_form: String,
}

pub fn bound_json(r: &BoundReport) -> String {
    let j = BoundJson {
        schema: 1,
        report: "bound",
        n: r.n,
        q: r.q,
        m: r.m,
        x0: sig12(r.x0),
        h_min: sig12(r.h_min),
        theorem_bound: sig12(r.theorem_bound),
        mu_upper: sig12(r.mu_upper),
        mu_display: round_up_3dp(r.mu_upper),
        alpha: sig12(r.alpha),
        asymptotic_base: sig12(r.asymptotic_base),
        lambda_value: r.lambda_value.to_string(),
        beta: sig12(r.beta),
        parity_supported: r.parity_supported,
        bound_form: r.display_form(),
    };
    serde_json::to_string_pretty(&j).expect("plain data serializes")
}

pub fn bound_csv(r: &BoundReport) -> String {
    let mut out = String::from(
        "n,q,m,x0,h_min,theorem_bound,mu_upper,alpha,asymptotic_base,lambda_value,parity_supported\n",
    );
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{},{},{},{}",
        r.n,
        r.q,
        r.m,
        sig12(r.x0),
        sig12(r.h_min),
        sig12(r.theorem_bound),
        sig12(r.mu_upper),
        sig12(r.alpha),
        sig12(r.asymptotic_base),
        r.lambda_value,
        r.parity_supported
    );
    out
}

pub fn bound_text(r: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "bound report for (n={}, q={}, m={})", r.n, r.q, r.m);
    let _ = writeln!(out, "  x0               {}", sig12(r.x0));
    let _ = writeln!(out, "  h_min            {}", sig12(r.h_min));
    let _ = writeln!(out, "  bound form       {}", r.display_form());
    let _ = writeln!(out, "  bound at n={:<5} {}", r.n, sig12(r.theorem_bound));
    let _ = writeln!(
        out,
        "  mu_upper         {}  (display {:.3})",
        sig12(r.mu_upper),
        round_up_3dp(r.mu_upper)
    );
    let _ = writeln!(out, "  alpha            {}", sig12(r.alpha));
    let _ = writeln!(out, "  asymptotic_base  {}", sig12(r.asymptotic_base));
    let _ = writeln!(out, "  lambda_value     {}", r.lambda_value);
    let _ = writeln!(out, "  beta             {}", sig12(r.beta));
    out
}

#[derive(Serialize)]
struct MuCellJson {
    m: u32,
    q: u32,
    parity_supported: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    x0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu_raw: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu_display: Option<f64>,
}

#[derive(Serialize)]
struct MuTableJson {
    schema: u32,
    report: &'static str,
    style: &'static str,
    cells: Vec<MuCellJson>,
}

pub fn mu_table_json(cells: &[TableCell]) -> String {
    let j = MuTableJson {
        schema: 1,
        report: "table",
        style: "exact",
        cells: cells
            .iter()
            .map(|c| MuCellJson {
                m: c.m,
                q: c.q,
                parity_supported: c.parity_supported,
                x0: c.x0.map(sig12),
                h_min: c.h_min.map(sig12),
                mu_raw: c.mu_raw.map(sig12),
                mu_display: c.mu_display,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("plain data serializes")
}

pub fn mu_table_csv(cells: &[TableCell]) -> String {
    let mut out = String::from("m,q,parity_supported,x0,h_min,mu_raw,mu_display\n");
    for c in cells {
        let opt = |v: Option<f64>| v.map(|x| sig12(x).to_string()).unwrap_or_default();
        let disp = c.mu_display.map(|x| format!("{x:.3}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            c.m,
            c.q,
            c.parity_supported,
            opt(c.x0),
            opt(c.h_min),
            opt(c.mu_raw),
            disp
        );
    }
    out
}

pub fn mu_table_text(cells: &[TableCell], ms: &[u32], qs: &[u32]) -> String {
    let mut out =
        String::from("upper bounds on the growth exponent mu_m(q), rounded up at 3 decimals\n");
    let _ = write!(out, "{:>4} |", "m\\q");
    for q in qs {
        let _ = write!(out, "{q:>7}");
    }
    out.push('\n');
    let _ = writeln!(out, "-----+{}", "-".repeat(7 * qs.len()));
    for m in ms {
        let _ = write!(out, "{m:>4} |");
        for q in qs {
            let cell = cells
                .iter()
                .find(|c| c.m == *m && c.q == *q)
                .expect("full grid");
            match cell.mu_display {
                Some(v) => {
                    let _ = write!(out, "{v:>7.3}");
                }
                None => {
                    let _ = write!(out, "{:>7}", "-");
                }
            }
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct AsymptoticRowJson {
    m: u32,
    alpha: f64,
    base: f64,
    base_display: f64,
}

#[derive(Serialize)]
struct AsymptoticTableJson {
    schema: u32,
    report: &'static str,
    style: &'static str,
    rows: Vec<AsymptoticRowJson>,
}

pub fn asymptotic_table_json(rows: &[AsymptoticRow]) -> String {
    let j = AsymptoticTableJson {
        schema: 1,
        report: "table",
        style: "asymptotic",
        rows: rows
            .iter()
            .map(|r| AsymptoticRowJson {
                m: r.m,
                alpha: sig12(r.alpha),
                base: sig12(r.base),
                base_display: round_down_3dp(r.base),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("plain data serializes")
}

pub fn asymptotic_table_csv(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from("m,alpha,base,base_display\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{:.3}",
            r.m,
            sig12(r.alpha),
            sig12(r.base),
            round_down_3dp(r.base)
        );
    }
    out
}

pub fn asymptotic_table_text(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from("large-q growth exponent bounds: mu_m(q) <= 1 - log_q(base)\n");
    for r in rows {
        let _ = writeln!(
            out,
            "  m={:<2} alpha={:<16} base={:<16} bound: mu_{}(q) <= 1 - log_q({:.3})",
            r.m,
            sig12(r.alpha),
            sig12(r.base),
            r.m,
            round_down_3dp(r.base)
        );
    }
    out
}

#[derive(Serialize)]
struct RngJson {
    algorithm: String,
    seed: u64,
    restarts: u32,
}

#[derive(Serialize)]
struct WitnessJson {
    n: u32,
    p: u32,
    k: u32,
    points: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct SearchJson {
    schema: u32,
    report: &'static str,
    n: u32,
    q: u32,
    m: u32,
    mode: &'static str,
    best_size: usize,
    exact: bool,
    nodes_visited: u64,
    budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rng: Option<RngJson>,
    witness: WitnessJson,
}

fn witness_points(r: &SearchResult) -> Vec<Vec<u32>> {
    r.witness
        .points()
        .iter()
        .map(|p| p.coords().iter().map(|c| c.index()).collect())
        .collect()
}

pub fn search_json(r: &SearchResult, mode: &'static str) -> String {
    let f = r.witness.field();
    let j = SearchJson {
        schema: 1,
        report: "search",
        n: r.n,
        q: r.q,
        m: r.m,
        mode,
        best_size: r.best_size,
        exact: r.exact,
        nodes_visited: r.nodes_visited,
        budget: r.budget,
        rng: r.rng.as_ref().map(|c| RngJson {
            algorithm: c.algorithm.to_string(),
            seed: c.seed,
            restarts: c.restarts,
        }),
        witness: WitnessJson {
            n: r.n,
            p: f.p(),
            k: f.k(),
            points: witness_points(r),
        },
    };
    serde_json::to_string_pretty(&j).expect("plain data serializes")
}

pub fn search_csv(r: &SearchResult, mode: &'static str) -> String {
    let mut out = String::from("n,q,m,mode,best_size,exact,nodes_visited,budget,seed,restarts\n");
    let (seed, restarts) = match &r.rng {
        Some(c) => (c.seed.to_string(), c.restarts.to_string()),
        None => (String::new(), String::new()),
    };
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{},{seed},{restarts}",
        r.n, r.q, r.m, mode, r.best_size, r.exact, r.nodes_visited, r.budget
    );
    out
}

pub fn search_text(r: &SearchResult, mode: &'static str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "search report for (n={}, q={}, m={})", r.n, r.q, r.m);
    let _ = writeln!(out, "  mode           {mode}");
    let _ = writeln!(out, "  best_size      {}", r.best_size);
    let _ = writeln!(out, "  exact          {}", r.exact);
    let _ = writeln!(out, "  nodes_visited  {}", r.nodes_visited);
    if r.budget > 0 {
        let _ = writeln!(out, "  budget         {}", r.budget);
    }
    if let Some(c) = &r.rng {
        let _ = writeln!(
            out,
            "  rng            {} seed={} restarts={}",
            c.algorithm, c.seed, c.restarts
        );
    }
    let _ = writeln!(out, "  witness:");
    for line in crate::pointset_io::write_pointset(&r.witness).lines() {
        let _ = writeln!(out, "    {line}");
    }
    out
}

#[derive(Serialize)]
struct LambdaJson {
    schema: u32,
    report: &'static str,
    alpha: u64,
    beta: u64,
    gamma: u64,
    count: String,
}

pub fn lambda_json(alpha: u64, beta: u64, gamma: u64, count: &str) -> String {
    let j = LambdaJson {
        schema: 1,
        report: "lambda",
        alpha,
        beta,
        gamma,
        count: count.into(),
    };
    serde_json::to_string_pretty(&j).expect("plain data serializes")
}

pub fn lambda_csv(alpha: u64, beta: u64, gamma: u64, count: &str) -> String {
    format!("alpha,beta,gamma,count\n{alpha},{beta},{gamma},{count}\n")
}

#[derive(Serialize)]
pub struct VerifyCheckJson<'a> {
    schema: u32,
    report: &'static str,
    suite: &'a str,
    check: &'a str,
    result: &'static str,
    detail: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a [usize]>,
}

pub fn verify_check_json(suite: &str, check: &capbound::suites::SuiteCheck) -> String {
    let j = VerifyCheckJson {
        schema: 1,
        report: "verify",
        suite,
        check: &check.name,
        result: if check.pass { "pass" } else { "fail" },
        detail: &check.detail,
        counterexample: check.counterexample.as_deref(),
    };
    serde_json::to_string(&j).expect("plain data serializes")
}

pub enum VerifyStyle {
    Text,
    Json,
    Csv,
}

/// One line per check. Text mode additionally echoes failures as JSON
/// verdicts so they stay machine-readable.
pub fn verify_output(reports: &[SuiteReport], style: VerifyStyle) -> String {
    let mut out = String::new();
    if matches!(style, VerifyStyle::Csv) {
        out.push_str("suite,check,result,detail\n");
    }
    for report in reports {
        for check in &report.checks {
            match style {
                VerifyStyle::Json => {
                    let _ = writeln!(out, "{}", verify_check_json(report.suite, check));
                }
                VerifyStyle::Csv => {
                    let result = if check.pass { "pass" } else { "fail" };
                    let _ = writeln!(
                        out,
                        "{},{},{result},{}",
                        report.suite,
                        csv_quote(&check.name),
                        csv_quote(&check.detail)
                    );
                }
                VerifyStyle::Text => {
                    let status = if check.pass { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        out,
                        "[{}] {}: {status} ({})",
                        report.suite, check.name, check.detail
                    );
                    if !check.pass {
                        let _ = writeln!(out, "{}", verify_check_json(report.suite, check));
                    }
                }
            }
        }
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports
        .iter()
        .map(|r| r.checks.iter().filter(|c| !c.pass).count())
        .sum();
    if matches!(style, VerifyStyle::Text) {
        let _ = writeln!(out, "{}/{total} checks passed", total - failed);
    }
    out
}

fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
