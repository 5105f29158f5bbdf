//! Acceptance gate: one test per release criterion, each printing a single
//! `criterion NN (<name>): PASS|FAIL` line. Every check is exact; no
//! tolerances anywhere.

use polygenocchi::families::{family_value, FamilyId, FamilyParams};
use polygenocchi::ring::Rat;
use polygenocchi::theorems::run_suite;
use std::time::Instant;

const SEED: u64 = 42;

fn criterion(num: u32, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {num:02} ({name}): {verdict}");
    assert!(ok, "criterion {num:02} ({name}) failed: {detail}");
}

fn suite_passes(name: &str, n: usize, trials: usize) -> (bool, String) {
    match run_suite(name, n, trials, SEED) {
        Ok(report) => {
            let failing: Vec<String> = report
                .cases
                .iter()
                .filter(|c| !c.equal)
                .map(|c| format!("n={} params={}", c.n, c.params))
                .collect();
            (report.passed, failing.join("; "))
        }
        Err(e) => (false, format!("suite error: {e}")),
    }
}

#[test]
fn criterion_01_zero_prefix() {
    let start = Instant::now();
    let (ok, detail) = suite_passes("zero_prefix", 12, 20);
    let fast = start.elapsed().as_secs() < 10;
    criterion(
        1,
        "zero-prefix",
        ok && fast,
        &format!("{detail} elapsed={:?}", start.elapsed()),
    );
}

#[test]
fn criterion_02_inverse_pair() {
    let (ok, detail) = suite_passes("inverse_pair", 16, 8);
    criterion(2, "inverse-pair", ok, &detail);
}

#[test]
fn criterion_03_polyexponential() {
    let (ok, detail) = suite_passes("polyexp", 16, 8);
    criterion(3, "polyexponential", ok, &detail);
}

#[test]
fn criterion_04_weight_coefficients() {
    let (ok, detail) = suite_passes("bcoef", 10, 6);
    criterion(4, "weight-coefficients", ok, &detail);
}

#[test]
fn criterion_05_eulerian() {
    let (ok, detail) = suite_passes("eulerian", 12, 8);
    criterion(5, "eulerian", ok, &detail);
}

#[test]
fn criterion_06_whitney() {
    let (ok, detail) = suite_passes("whitney", 8, 20);
    criterion(6, "whitney", ok, &detail);
}

#[test]
fn criterion_07_stirling() {
    let (ok, detail) = suite_passes("stirling", 10, 8);
    criterion(7, "stirling", ok, &detail);
}

#[test]
fn criterion_08_explicit_formulas() {
    let start = Instant::now();
    let report = run_suite("explicit", 10, 20, SEED);
    let (ok, detail) = match report {
        Ok(r) => {
            let ledger_ok = r.deviations.iter().any(|d| d.theorem.contains("thm-2.2"))
                && r.deviations.iter().any(|d| d.theorem.contains("thm-2.3"));
            (
                r.passed && ledger_ok,
                format!("passed={} deviations={}", r.passed, r.deviations.len()),
            )
        }
        Err(e) => (false, format!("suite error: {e}")),
    };
    let fast = start.elapsed().as_secs() < 60;
    criterion(
        8,
        "explicit-formulas",
        ok && fast,
        &format!("{detail} elapsed={:?}", start.elapsed()),
    );
}

#[test]
fn criterion_09_addition() {
    let (ok, detail) = suite_passes("addition", 10, 20);
    criterion(9, "addition", ok, &detail);
}

#[test]
fn criterion_10_polynomial_form() {
    let (ok, detail) = suite_passes("polyform", 8, 10);
    criterion(10, "polynomial-form", ok, &detail);
}

#[test]
fn criterion_11_reductions() {
    let (ok, detail) = suite_passes("reductions", 10, 8);
    criterion(11, "reductions", ok, &detail);
}

/// Exact fraction on i128, reduced at every step. Deliberately independent of
/// the crate's rational and series types.
#[derive(Clone, Copy, PartialEq)]
struct Frac(i128, i128);

impl Frac {
    fn new(n: i128, d: i128) -> Frac {
        assert!(d != 0);
        let g = gcd(n.abs(), d.abs()).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac(s * n / g, s * d / g)
    }
    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 - o.0 * self.1, self.1 * o.1)
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }
    fn div(self, o: Frac) -> Frac {
        assert!(o.0 != 0);
        Frac::new(self.0 * o.1, self.1 * o.0)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Schoolbook long division of 2t by e^t + 1 in ordinary coefficients:
/// q[m] = (num[m] - sum_{j=1..m} den[j] q[m-j]) / den[0]. The m-th value of
/// the quotient times m! is the m-th classical number.
fn classical_numbers_by_long_division(n_max: usize) -> Vec<Frac> {
    let mut fact = vec![1i128; n_max + 1];
    for m in 1..=n_max {
        fact[m] = fact[m - 1] * m as i128;
    }
    let mut den = vec![Frac::new(2, 1)];
    den.extend((1..=n_max).map(|j| Frac::new(1, fact[j])));
    let mut num = vec![Frac::new(0, 1); n_max + 1];
    if n_max >= 1 {
        num[1] = Frac::new(2, 1);
    }
    let mut q = vec![Frac::new(0, 1); n_max + 1];
    for m in 0..=n_max {
        let mut acc = num[m];
        for j in 1..=m {
            acc = acc.sub(den[j].mul(q[m - j]));
        }
        q[m] = acc.div(den[0]);
    }
    (0..=n_max).map(|m| q[m].mul(Frac::new(fact[m], 1))).collect()
}

#[test]
fn criterion_12_classical_anchor() {
    let oracle = classical_numbers_by_long_division(8);
    let expected: [i128; 8] = [1, -1, 0, 1, 0, -3, 0, 17];
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=8usize {
        let o = oracle[n];
        if o != Frac::new(expected[n - 1], 1) {
            ok = false;
            detail.push_str(&format!("oracle[{n}]={}/{} ", o.0, o.1));
        }
        let fam = family_value(FamilyId::Genocchi, n, &FamilyParams::default())
            .expect("classical column evaluates");
        if fam != Rat::from_int(expected[n - 1] as i64) {
            ok = false;
            detail.push_str(&format!("family[{n}]={fam} "));
        }
    }
    criterion(12, "classical-anchor", ok, &detail);
}

#[test]
fn criterion_13_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_polygenocchi");
    let run = |args: &[&str]| {
        std::process::Command::new(bin)
            .args(args)
            .env_remove("GPG_DEFAULT_ORDER")
            .output()
            .expect("binary runs")
    };

    let all = ["verify", "--suite", "all", "--seed", "42"];
    let first = run(&all);
    let second = run(&all);
    let mut ok = first.status.code() == Some(0)
        && second.status.code() == Some(0)
        && first.stdout == second.stdout
        && !first.stdout.is_empty();
    let mut detail = format!(
        "all: codes {:?}/{:?}, identical={}",
        first.status.code(),
        second.status.code(),
        first.stdout == second.stdout
    );

    let usage = run(&["verify", "--suite", "nosuch"]);
    if usage.status.code() != Some(2) {
        ok = false;
        detail.push_str(&format!(" unknown-suite code={:?}", usage.status.code()));
    }
    let domain = run(&["eval", "--n", "1", "--lambda", "1", "--u", "1"]);
    if domain.status.code() != Some(3) {
        ok = false;
        detail.push_str(&format!(" pole code={:?}", domain.status.code()));
    }

    let eval = run(&[
        "eval", "--n", "7", "--rho", "1/3", "--lambda", "2/7", "--u", "-3/2", "--x", "-5/4",
    ]);
    let round_trip = (|| -> Option<bool> {
        let v: serde_json::Value = serde_json::from_slice(&eval.stdout).ok()?;
        let printed = v["results"]["value"].as_str()?;
        let reparsed: Rat = printed.parse().ok()?;
        Some(reparsed.to_string() == printed)
    })();
    if eval.status.code() != Some(0) || round_trip != Some(true) {
        ok = false;
        detail.push_str(&format!(
            " round-trip code={:?} ok={:?}",
            eval.status.code(),
            round_trip
        ));
    }
    criterion(13, "cli-contract", ok, &detail);
}
