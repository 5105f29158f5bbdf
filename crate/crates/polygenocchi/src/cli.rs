//! Command-line surface over the library: coefficient evaluation, registry
//! tables, polynomial expansion, verification suites, and specialization
//! checks.
//!
//! Every number printed is an exact rational in `p/q` text, and every run is
//! deterministic: identical flags (and seed) produce byte-identical output.
//! Exit codes are scripting-stable: 0 success, 1 verification failure,
//! 2 usage error, 3 domain error (a parameter pack whose denominator
//! constant vanishes, lambda = u).

use crate::error::{Error, Result};
use crate::families::{family_series, ghat, ghat_poly, reduce_check, FamilyId, FamilyParams, GParams};
use crate::report::VerifyReport;
use crate::ring::Rat;
use crate::theorems::{poly_expand, run_suite};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::str::FromStr;

/// Environment variable holding the default series truncation for commands
/// that take `--n-max`; an explicit flag always wins.
pub const ORDER_ENV: &str = "GPG_DEFAULT_ORDER";

const DEFAULT_ORDER: usize = 10;

fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s)
}

fn default_order() -> Result<usize> {
    match std::env::var(ORDER_ENV) {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            Error::Precondition(format!(
                "{ORDER_ENV} must be a nonnegative integer, got {s:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORDER),
        Err(std::env::VarError::NotUnicode(_)) => Err(Error::Precondition(format!(
            "{ORDER_ENV} is not valid unicode"
        ))),
    }
}

#[derive(Parser)]
#[command(
    name = "polygenocchi",
    version,
    about = "Exact coefficients, tables, and identity certification for the degenerate \
             Hermite-based Apostol-Frobenius poly-Genocchi family"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one coefficient of the master family at a point
    Eval(EvalArgs),
    /// Tabulate a registry family as CSV or JSON
    Table(TableArgs),
    /// Expand one master coefficient as a polynomial in x, y, z
    Poly(PolyArgs),
    /// Run a verification suite and emit its report
    Verify(VerifyArgs),
    /// Check one specialization item of the master family
    Reduce(ReduceArgs),
}

/// Master-family parameters. Defaults give the classical pack whose origin
/// values are the Genocchi numbers.
#[derive(Args, Clone)]
struct MasterFlags {
    /// Polyexponential weight
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k: i64,
    /// Power on the quotient factor
    #[arg(long, default_value_t = 1)]
    alpha: u32,
    /// Apostol parameter
    #[arg(long, default_value = "1", value_parser = parse_rat, allow_hyphen_values = true)]
    lambda: Rat,
    /// Degeneracy modulus (0 recovers classical exponentials)
    #[arg(long, default_value = "0", value_parser = parse_rat, allow_hyphen_values = true)]
    rho: Rat,
    /// Frobenius parameter
    #[arg(long, default_value = "-1", value_parser = parse_rat, allow_hyphen_values = true)]
    u: Rat,
    /// ln a, as an exact rational
    #[arg(long = "log-a", default_value = "0", value_parser = parse_rat, allow_hyphen_values = true)]
    log_a: Rat,
    /// ln b, as an exact rational
    #[arg(long = "log-b", default_value = "1", value_parser = parse_rat, allow_hyphen_values = true)]
    log_b: Rat,
    /// Shorthand: "--b e" sets ln b = 1
    #[arg(long, value_parser = ["e"], conflicts_with = "log_b")]
    b: Option<String>,
}

impl MasterFlags {
    fn to_params(&self) -> GParams {
        GParams {
            k: self.k,
            alpha: self.alpha,
            lambda: self.lambda.clone(),
            rho: self.rho.clone(),
            u: self.u.clone(),
            log_a: self.log_a.clone(),
            log_b: if self.b.is_some() {
                Rat::one()
            } else {
                self.log_b.clone()
            },
        }
    }
}

#[derive(Args, Clone)]
struct PointFlags {
    /// First argument of the three-variable factor
    #[arg(long, default_value = "0", value_parser = parse_rat, allow_hyphen_values = true)]
    x: Rat,
    /// Second argument (weight t^2)
    #[arg(long, default_value = "0", value_parser = parse_rat, allow_hyphen_values = true)]
    y: Rat,
    /// Third argument (weight t^3)
    #[arg(long, default_value = "0", value_parser = parse_rat, allow_hyphen_values = true)]
    z: Rat,
}

#[derive(Args)]
struct EvalArgs {
    /// Coefficient index
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    master: MasterFlags,
    #[command(flatten)]
    point: PointFlags,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Registry family name (see README for the list)
    #[arg(long)]
    family: String,
    /// Last row index; default comes from GPG_DEFAULT_ORDER or 10
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Apostol parameter
    #[arg(long, default_value = "1", value_parser = parse_rat, allow_hyphen_values = true)]
    lambda: Rat,
    /// Frobenius parameter
    #[arg(long, default_value = "-1", value_parser = parse_rat, allow_hyphen_values = true)]
    u: Rat,
    /// Polylogarithm / polyexponential weight
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k: i64,
    /// Power for the order-parameterized families
    #[arg(long, default_value_t = 1)]
    order: u32,
    /// Index for the r-shifted family
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// ln a, as an exact rational
    #[arg(long = "log-a", default_value = "0", value_parser = parse_rat, allow_hyphen_values = true)]
    log_a: Rat,
    /// ln b, as an exact rational
    #[arg(long = "log-b", default_value = "1", value_parser = parse_rat, allow_hyphen_values = true)]
    log_b: Rat,
    /// Shorthand: "--b e" sets ln b = 1
    #[arg(long, value_parser = ["e"], conflicts_with = "log_b")]
    b: Option<String>,
    /// ln c, as an exact rational
    #[arg(long = "log-c", default_value = "1", value_parser = parse_rat, allow_hyphen_values = true)]
    log_c: Rat,
    /// Degeneracy parameter of the degenerate families
    #[arg(long = "lambda-deg", default_value = "0", value_parser = parse_rat, allow_hyphen_values = true)]
    lambda_deg: Rat,
    #[command(flatten)]
    point: PointFlags,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PolyArgs {
    /// Coefficient index to expand
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    master: MasterFlags,
    /// Cross-check the expansion against the polynomial-ring series
    #[arg(long)]
    oracle: bool,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all"
    #[arg(long)]
    suite: String,
    /// Coefficient range; default comes from GPG_DEFAULT_ORDER or 10
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// Number of randomized parameter draws
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Seed for the randomized draws
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// Specialization item, 1 through 6
    #[arg(long)]
    item: u8,
    /// Coefficient range; default comes from GPG_DEFAULT_ORDER or 10
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    #[command(flatten)]
    master: MasterFlags,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct MasterParamsOut {
    k: i64,
    alpha: u32,
    lambda: Rat,
    rho: Rat,
    u: Rat,
    log_a: Rat,
    log_b: Rat,
    x: Rat,
    y: Rat,
    z: Rat,
}

fn master_params_out(p: &GParams, point: &PointFlags) -> MasterParamsOut {
    MasterParamsOut {
        k: p.k,
        alpha: p.alpha,
        lambda: p.lambda.clone(),
        rho: p.rho.clone(),
        u: p.u.clone(),
        log_a: p.log_a.clone(),
        log_b: p.log_b.clone(),
        x: point.x.clone(),
        y: point.y.clone(),
        z: point.z.clone(),
    }
}

#[derive(Serialize)]
struct EvalResults {
    n: usize,
    value: Rat,
}

#[derive(Serialize)]
struct EvalEnvelope {
    command: &'static str,
    params: MasterParamsOut,
    results: EvalResults,
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    value: Rat,
}

#[derive(Serialize)]
struct TableParamsOut {
    family: String,
    n_max: usize,
    lambda: Rat,
    u: Rat,
    k: i64,
    order: u32,
    r: u32,
    log_a: Rat,
    log_b: Rat,
    log_c: Rat,
    lambda_deg: Rat,
    x: Rat,
    y: Rat,
    z: Rat,
}

#[derive(Serialize)]
struct TableEnvelope {
    command: &'static str,
    params: TableParamsOut,
    results: Vec<TableRow>,
}

#[derive(Serialize)]
struct MonomialOut {
    monomial: [u32; 3],
    coeff: Rat,
}

#[derive(Serialize)]
struct PolyParamsOut {
    n: usize,
    k: i64,
    alpha: u32,
    lambda: Rat,
    rho: Rat,
    u: Rat,
    log_a: Rat,
    log_b: Rat,
}

#[derive(Serialize)]
struct PolyEnvelope {
    command: &'static str,
    params: PolyParamsOut,
    results: Vec<MonomialOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_match: Option<bool>,
}

#[derive(Serialize)]
struct VerifyParamsOut {
    suite: String,
    n_max: usize,
    trials: usize,
    seed: u64,
}

#[derive(Serialize)]
struct VerifyEnvelope {
    command: &'static str,
    params: VerifyParamsOut,
    report: VerifyReport,
}

#[derive(Serialize)]
struct ReduceParamsOut {
    item: u8,
    n_max: usize,
    k: i64,
    alpha: u32,
    lambda: Rat,
    rho: Rat,
    u: Rat,
    log_a: Rat,
    log_b: Rat,
}

#[derive(Serialize)]
struct ReduceEnvelope {
    command: &'static str,
    params: ReduceParamsOut,
    report: VerifyReport,
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output types always serialize");
    s.push('\n');
    s
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Error::Precondition(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_eval(args: EvalArgs) -> Result<u8> {
    let p = args.master.to_params();
    let value = ghat(args.n, &p, &args.point.x, &args.point.y, &args.point.z)?;
    let envelope = EvalEnvelope {
        command: "eval",
        params: master_params_out(&p, &args.point),
        results: EvalResults { n: args.n, value },
    };
    emit(&args.out, &to_json(&envelope))?;
    Ok(0)
}

fn cmd_table(args: TableArgs) -> Result<u8> {
    let id: FamilyId = args.family.parse()?;
    let n_max = match args.n_max {
        Some(v) => v,
        None => default_order()?,
    };
    let log_b = if args.b.is_some() {
        Rat::one()
    } else {
        args.log_b.clone()
    };
    let fp = FamilyParams {
        lambda: args.lambda.clone(),
        u: args.u.clone(),
        k: args.k,
        order: args.order,
        r: args.r,
        log_a: args.log_a.clone(),
        log_b: log_b.clone(),
        log_c: args.log_c.clone(),
        deg: args.lambda_deg.clone(),
        x: args.point.x.clone(),
        y: args.point.y.clone(),
        z: args.point.z.clone(),
    };
    let series = family_series(id, &fp, n_max)?;
    let rows: Vec<TableRow> = (0..=n_max)
        .map(|n| TableRow {
            n,
            value: series.egf(n),
        })
        .collect();
    let text = match args.format {
        OutputFormat::Csv => {
            let mut s = String::from("n,value\n");
            for row in &rows {
                s.push_str(&format!("{},{}\n", row.n, row.value));
            }
            s
        }
        OutputFormat::Json => to_json(&TableEnvelope {
            command: "table",
            params: TableParamsOut {
                family: id.to_string(),
                n_max,
                lambda: fp.lambda.clone(),
                u: fp.u.clone(),
                k: fp.k,
                order: fp.order,
                r: fp.r,
                log_a: fp.log_a.clone(),
                log_b,
                log_c: fp.log_c.clone(),
                lambda_deg: fp.deg.clone(),
                x: fp.x.clone(),
                y: fp.y.clone(),
                z: fp.z.clone(),
            },
            results: rows,
        }),
    };
    emit(&args.out, &text)?;
    Ok(0)
}

fn cmd_poly(args: PolyArgs) -> Result<u8> {
    let p = args.master.to_params();
    let poly = poly_expand(args.n, &p)?;
    let results: Vec<MonomialOut> = poly
        .sorted_terms()
        .into_iter()
        .map(|(expt, coeff)| MonomialOut {
            monomial: expt,
            coeff,
        })
        .collect();
    let oracle_match = if args.oracle {
        Some(poly == ghat_poly(args.n, &p)?)
    } else {
        None
    };
    let envelope = PolyEnvelope {
        command: "poly",
        params: PolyParamsOut {
            n: args.n,
            k: p.k,
            alpha: p.alpha,
            lambda: p.lambda.clone(),
            rho: p.rho.clone(),
            u: p.u.clone(),
            log_a: p.log_a.clone(),
            log_b: p.log_b.clone(),
        },
        results,
        oracle_match,
    };
    emit(&args.out, &to_json(&envelope))?;
    Ok(if oracle_match == Some(false) { 1 } else { 0 })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    if args.trials == 0 {
        return Err(Error::Precondition("--trials must be at least 1".into()));
    }
    let n_max = match args.n_max {
        Some(v) => v,
        None => default_order()?,
    };
    let report = run_suite(&args.suite, n_max, args.trials, args.seed)?;
    let passed = report.passed;
    let envelope = VerifyEnvelope {
        command: "verify",
        params: VerifyParamsOut {
            suite: args.suite.clone(),
            n_max,
            trials: args.trials,
            seed: args.seed,
        },
        report,
    };
    emit(&args.out, &to_json(&envelope))?;
    Ok(if passed { 0 } else { 1 })
}

fn cmd_reduce(args: ReduceArgs) -> Result<u8> {
    let n_max = match args.n_max {
        Some(v) => v,
        None => default_order()?,
    };
    let p = args.master.to_params();
    let report = reduce_check(args.item, &p, n_max)?;
    let passed = report.passed;
    let envelope = ReduceEnvelope {
        command: "reduce",
        params: ReduceParamsOut {
            item: args.item,
            n_max,
            k: p.k,
            alpha: p.alpha,
            lambda: p.lambda.clone(),
            rho: p.rho.clone(),
            u: p.u.clone(),
            log_a: p.log_a.clone(),
            log_b: p.log_b.clone(),
        },
        report,
    };
    emit(&args.out, &to_json(&envelope))?;
    Ok(if passed { 0 } else { 1 })
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Table(args) => cmd_table(args),
        Command::Poly(args) => cmd_poly(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Reduce(args) => cmd_reduce(args),
    }
}

/// Parse and run. Returns the process exit code: 0 success, 1 verification
/// failure, 2 usage error, 3 domain error.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NonInvertibleConstantTerm | Error::PoleAtOne => 3,
                _ => 2,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn run_cli(args: &[&str]) -> u8 {
        let mut full = vec!["polygenocchi"];
        full.extend_from_slice(args);
        run(full)
    }

    fn out_path(name: &str) -> PathBuf {
        std::env::temp_dir().join(format!("polygenocchi_cli_test_{name}"))
    }

    fn run_to_file(name: &str, args: &[&str]) -> (u8, String) {
        let path = out_path(name);
        let path_s = path.to_str().unwrap().to_string();
        let mut full: Vec<&str> = args.to_vec();
        full.push("--out");
        full.push(&path_s);
        let code = run_cli(&full);
        let text = std::fs::read_to_string(&path).unwrap_or_default();
        let _ = std::fs::remove_file(&path);
        (code, text)
    }

    #[test]
    fn eval_emits_envelope_with_exact_value() {
        let (code, text) = run_to_file("eval_g2", &["eval", "--n", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["command"], "eval");
        assert_eq!(v["results"]["n"], 2);
        assert_eq!(v["results"]["value"], "-1");
        assert_eq!(v["params"]["u"], "-1");
    }

    #[test]
    fn eval_zero_prefix_and_zero_numerator() {
        let (code, text) = run_to_file("eval_a2", &["eval", "--n", "0", "--alpha", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["results"]["value"], "0");
        let (code, text) = run_to_file(
            "eval_u1",
            &["eval", "--n", "5", "--u", "1", "--lambda", "2"],
        );
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["results"]["value"], "0");
    }

    #[test]
    fn eval_domain_and_usage_exit_codes() {
        assert_eq!(run_cli(&["eval", "--n", "1", "--lambda", "1", "--u", "1"]), 3);
        assert_eq!(run_cli(&["eval", "--n", "1", "--lambda", "zebra"]), 2);
        assert_eq!(run_cli(&["eval"]), 2);
        assert_eq!(run_cli(&["nosuchcommand"]), 2);
        assert_eq!(run_cli(&["--help"]), 0);
    }

    #[test]
    fn b_shorthand_matches_log_b_one() {
        let (c1, t1) = run_to_file("b_sugar", &["eval", "--n", "4", "--b", "e"]);
        let (c2, t2) = run_to_file("b_plain", &["eval", "--n", "4", "--log-b", "1"]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(t1, t2);
        assert_eq!(run_cli(&["eval", "--n", "1", "--b", "pi"]), 2);
        assert_eq!(run_cli(&["eval", "--n", "1", "--b", "e", "--log-b", "2"]), 2);
    }

    #[test]
    fn table_csv_default_is_the_classical_column() {
        let (code, text) = run_to_file("table_gen", &["table", "--family", "genocchi", "--n-max", "4"]);
        assert_eq!(code, 0);
        assert_eq!(text, "n,value\n0,0\n1,1\n2,-1\n3,0\n4,1\n");
    }

    #[test]
    fn table_json_hermite_values() {
        let (code, text) = run_to_file(
            "table_h3",
            &[
                "table", "--family", "hermite3", "--n-max", "3", "--format", "json", "--x", "1",
                "--y", "1", "--z", "1",
            ],
        );
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["command"], "table");
        assert_eq!(v["params"]["family"], "hermite3");
        let values: Vec<&str> = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["value"].as_str().unwrap())
            .collect();
        assert_eq!(values, ["1", "1", "3", "13"]);
    }

    #[test]
    fn table_rejects_unknown_family() {
        assert_eq!(run_cli(&["table", "--family", "nosuch", "--n-max", "2"]), 2);
    }

    #[test]
    fn poly_sorts_monomials_and_matches_oracle() {
        let (code, text) = run_to_file("poly3", &["poly", "--n", "3", "--oracle"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["oracle_match"], true);
        let monos: Vec<Vec<u64>> = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| {
                r["monomial"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|e| e.as_u64().unwrap())
                    .collect()
            })
            .collect();
        let degree_then_lex: Vec<(u64, Vec<u64>)> = monos
            .iter()
            .map(|m| (m.iter().sum::<u64>(), m.clone()))
            .collect();
        let mut sorted = degree_then_lex.clone();
        sorted.sort();
        assert_eq!(degree_then_lex, sorted);
    }

    #[test]
    fn poly_below_alpha_is_empty() {
        let (code, text) = run_to_file("poly_empty", &["poly", "--n", "1", "--alpha", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert!(v["results"].as_array().unwrap().is_empty());
        assert!(v.get("oracle_match").is_none());
    }

    #[test]
    fn verify_exit_codes_and_report_shape() {
        let (code, text) = run_to_file(
            "verify_anchor",
            &["verify", "--suite", "anchor", "--n-max", "8", "--seed", "42"],
        );
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["command"], "verify");
        assert_eq!(v["report"]["suite"], "anchor");
        assert_eq!(v["report"]["passed"], true);
        assert_eq!(run_cli(&["verify", "--suite", "nosuch"]), 2);
        assert_eq!(
            run_cli(&["verify", "--suite", "anchor", "--n-max", "8", "--trials", "0"]),
            2
        );
    }

    #[test]
    fn verify_output_is_byte_identical_across_runs() {
        let args = &["verify", "--suite", "whitney", "--n-max", "8", "--trials", "4", "--seed", "42"];
        let (c1, t1) = run_to_file("verify_rep_a", args);
        let (c2, t2) = run_to_file("verify_rep_b", args);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(t1, t2);
    }

    #[test]
    fn reduce_items_and_exit_codes() {
        let (code, text) = run_to_file(
            "reduce3",
            &["reduce", "--item", "3", "--n-max", "8", "--lambda", "2/3", "--rho", "1/2"],
        );
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["command"], "reduce");
        assert_eq!(v["report"]["passed"], true);
        assert_eq!(run_cli(&["reduce", "--item", "9", "--n-max", "4"]), 2);
        assert_eq!(
            run_cli(&["reduce", "--item", "1", "--lambda", "1", "--u", "1"]),
            3
        );
    }

    #[test]
    fn order_env_supplies_the_default_range() {
        std::env::set_var(ORDER_ENV, "3");
        let (code, text) = run_to_file("env_table", &["table", "--family", "genocchi"]);
        std::env::remove_var(ORDER_ENV);
        assert_eq!(code, 0);
        assert_eq!(text, "n,value\n0,0\n1,1\n2,-1\n3,0\n");
        std::env::set_var(ORDER_ENV, "x");
        let code = run_cli(&["table", "--family", "genocchi"]);
        std::env::remove_var(ORDER_ENV);
        assert_eq!(code, 2);
    }

    #[test]
    fn printed_rationals_round_trip() {
        let (code, text) = run_to_file(
            "round_trip",
            &["eval", "--n", "6", "--rho", "1/3", "--lambda", "2/7", "--x", "-5/4"],
        );
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        let printed = v["results"]["value"].as_str().unwrap();
        let reparsed: Rat = printed.parse().unwrap();
        assert_eq!(reparsed.to_string(), printed);
    }
}
