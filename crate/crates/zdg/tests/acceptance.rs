//! The thirteen acceptance criteria, each run at its stated range and time
//! limit. Every criterion prints one PASS/FAIL line; the run fails only if
//! a criterion fails for a reason other than a recorded discrepancy.

use serde_json::{json, Value};
use std::process::Command;
use std::time::{Duration, Instant};
use zdg::dn::{build_dn_graph, squarefree_edge_count};
use zdg::graph::{domination_stats, Budget};
use zdg::numthy::{factorize, is_prime};
use zdg::product::{build_product_graph, product_report, ProductDims};
use zdg::verify::{run_claim, Param, RunOptions, Status, VerificationOutcome};

struct Line {
    id: u32,
    pass: bool,
    /// A failure that matches a recorded discrepancy and is asserted as such.
    expected_failure: bool,
    detail: String,
}

fn claim(id: &str, from: Option<u64>, to: Option<u64>) -> VerificationOutcome {
    let opts = RunOptions { from, to, ..Default::default() };
    run_claim(id, opts).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn exhaustive(id: &str) -> VerificationOutcome {
    run_claim(id, RunOptions { exhaustive: true, ..Default::default() }).unwrap()
}

/// Runs `ids` over [from, to], requiring every one to pass.
fn sweep(ids: &[&str], from: u64, to: u64, expect: u64) -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for id in ids {
        let o = claim(id, Some(from), Some(to));
        ok &= o.status == Status::Pass;
        if o.status != Status::Pass {
            parts.push(format!("{id} {}", o.to_json_line()));
        } else {
            parts.push(format!("{id} {}", o.instances_checked));
        }
        if expect > 0 {
            ok &= o.instances_checked == expect;
        }
    }
    (ok, parts.join(", "))
}

fn timed(limit_secs: u64, f: impl FnOnce() -> (bool, String)) -> (bool, String) {
    let t = Instant::now();
    let (ok, detail) = f();
    let took = t.elapsed();
    let in_time = took <= Duration::from_secs(limit_secs);
    (
        ok && in_time,
        format!("{detail}; {:.2}s of {limit_secs}s", took.as_secs_f64()),
    )
}

/// Ordered tuples with 2 or 3 moduli in [2, 16] whose product graph has at
/// most 60 vertices, counted directly from |R| - |units| - 1.
fn product_sample() -> Vec<Vec<u64>> {
    let phi = |n: u64| (1..=n).filter(|&k| num_gcd(k, n) == 1).count() as u64;
    let mut out = Vec::new();
    for a in 2..=16u64 {
        for b in 2..=16u64 {
            out.push(vec![a, b]);
            for c in 2..=16u64 {
                out.push(vec![a, b, c]);
            }
        }
    }
    out.retain(|d| {
        let whole: u64 = d.iter().product();
        let units: u64 = d.iter().map(|&x| phi(x)).product();
        whole - units - 1 <= 60
    });
    out
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn criterion_9() -> Line {
    let t = Instant::now();
    let sample = product_sample();
    let mut detail = Vec::new();
    let mut exact = true;
    for id in ["prod.thm3.3", "prod.thm3.16", "prod.thm3.8", "prod.thm1.12", "prod.note3.4"] {
        let o = claim(id, None, None);
        exact &= o.status == Status::Pass;
        detail.push(format!("{id} {:?} {}", o.status, o.instances_checked));
    }
    let o = claim("prod.thm1.12", None, None);
    exact &= o.instances_checked == sample.len() as u64;

    // Domination sandwich, checked directly: the lower bound everywhere,
    // the upper bound wherever no modulus is prime.
    let sandwich = exhaustive("prod.thm3.19");
    let failing: Vec<&Param> = sandwich.counterexamples.as_ref().unwrap().iter().collect();
    let all_have_prime_slot = failing.iter().all(|p| match p {
        Param::Dims(d) => d.dims().iter().any(|&x| is_prime(x)),
        Param::N(_) => false,
    });
    let mut lower_ok = true;
    let mut upper_ok_without_primes = true;
    for dims in &sample {
        let d = ProductDims::new(dims.clone()).unwrap();
        let (lo, hi) = product_report(&d).unwrap().domination_bounds;
        let g = build_product_graph(&d, None).unwrap();
        let gamma = domination_stats(&g, &mut Budget::unlimited()).unwrap().gamma as u64;
        lower_ok &= lo <= gamma;
        if !dims.iter().any(|&x| is_prime(x)) {
            upper_ok_without_primes &= gamma <= hi;
        }
    }
    detail.push(format!(
        "prod.thm3.19 upper bound fails on {} of {} tuples, all with a prime modulus: {all_have_prime_slot}; lower bound holds: {lower_ok}",
        failing.len(),
        sandwich.instances_checked
    ));
    let took = t.elapsed();
    let in_time = took <= Duration::from_secs(300);
    detail.push(format!("{:.2}s of 300s", took.as_secs_f64()));
    let literal = exact && sandwich.status == Status::Pass;
    Line {
        id: 9,
        pass: literal && in_time,
        expected_failure: !literal
            && exact
            && in_time
            && all_have_prime_slot
            && lower_ok
            && upper_ok_without_primes
            && !failing.is_empty(),
        detail: detail.join("; "),
    }
}

fn criterion_11() -> (bool, String) {
    let ids = [
        "dn.itemii", "dn.itemiii", "dn.itemiv", "dn.itemv", "dn.itemvi", "dn.itemvii", "dn.itemviii",
        "dn.itemix", "dn.itemx", "dn.itemxi", "dn.itemxii", "dn.itemxiv", "dn.degree",
    ];
    // Non-prime-power n <= 2000 whose divisor graph has at most 120 vertices.
    let expect = (2..=2000u64)
        .filter(|&n| {
            let f = factorize(n).unwrap();
            let all: u64 = f.exponents().map(|e| e as u64 + 1).product();
            let interior: u64 = f.exponents().map(|e| e as u64).product();
            f.omega() >= 2 && all - interior - 1 <= 120
        })
        .count() as u64;
    let (mut ok, mut detail) = sweep(&ids, 2, 2000, expect);
    for r in 2..=5u32 {
        let n: u64 = [2u64, 3, 5, 7, 11][..r as usize].iter().product();
        let edges = build_dn_graph(n, None).unwrap().edge_count() as u64;
        ok &= edges == squarefree_edge_count(r);
        detail.push_str(&format!(", r={r} edges {edges}"));
    }
    let xiii = claim("dn.itemxiii", None, None);
    ok &= xiii.status == Status::Pass;
    (ok, detail)
}

fn criterion_12() -> (bool, String) {
    let xiii = claim("dn.xiii.paper-form", None, None);
    let cert = xiii.certificate.clone();
    let xiii_ok = xiii.status == Status::Counterexample
        && cert.as_ref().is_some_and(|c| {
            c.parameter == Param::N(6) && c.predicted == json!(-1) && c.observed == json!(1)
        });
    // Replay the certificate through the oracle alone.
    let replay = build_dn_graph(6, None).unwrap().edge_count();
    let xv = claim("dn.xv.paper-form", None, None);
    let notes = xv.note.clone().unwrap_or(Value::Null);
    let notes = notes.as_array().cloned().unwrap_or_default();
    let slack_ok = !notes.is_empty()
        && notes.iter().all(|v| v["slack"].as_u64() == v["r"].as_u64().map(|r| r - 1));
    let rs: std::collections::BTreeSet<u64> = notes.iter().filter_map(|v| v["r"].as_u64()).collect();
    let ok = xiii_ok && replay == 1 && xv.status == Status::Pass && slack_ok && rs == [3, 4].into();
    (
        ok,
        format!(
            "xiii {}; xv {:?} over {} n with r in {rs:?}, slack r-1 everywhere: {slack_ok}",
            xiii.to_json_line(),
            xv.status,
            notes.len()
        ),
    )
}

fn criterion_13() -> (bool, String) {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_zdg"))
            .arg("verify")
            .output()
            .expect("binary runs")
    };
    let a = run();
    let b = run();
    let lines = String::from_utf8_lossy(&a.stdout).lines().count();
    let ok = a.stdout == b.stdout && a.status.code() == b.status.code() && lines >= 25;
    (
        ok,
        format!("{lines} claim lines, {} bytes, identical: {}", a.stdout.len(), a.stdout == b.stdout),
    )
}

fn line(id: u32, (pass, detail): (bool, String)) -> Line {
    Line { id, pass, expected_failure: false, detail }
}

fn main() {
    let mut lines = Vec::new();
    lines.push(line(1, timed(5, || sweep(&["zn.thm2.3"], 2, 500, 499))));
    lines.push(line(2, timed(60, || sweep(&["zn.thm2.14"], 2, 300, 299))));
    lines.push(line(3, timed(30, || sweep(&["zn.thm2.16"], 2, 400, 399))));
    lines.push(line(4, timed(120, || sweep(&["zn.smith", "zn.thm1.8"], 2, 400, 399))));
    lines.push(line(5, timed(60, || sweep(&["zn.thm2.21"], 2, 150, 149))));
    lines.push(line(6, timed(30, || sweep(&["zn.thm2.15"], 2, 1000, 0))));
    lines.push(line(7, timed(60, || sweep(&["zn.lemma2.18", "zn.thm2.19"], 2, 300, 299))));
    lines.push(line(8, timed(60, || {
        let o = claim("prod.thm3.20", None, None);
        (o.status == Status::Pass && o.instances_checked == 6, o.to_json_line())
    })));
    lines.push(criterion_9());
    lines.push(line(10, timed(300, || {
        let (a, da) = sweep(&["zn.thm1.1", "zn.thm1.2", "zn.lemma2.0", "zn.lemma2.7", "zn.lemma2.8"], 2, 500, 0);
        let (b, db) = sweep(&["prod.thm1.1a", "prod.thm1.2a"], 2, 16, product_sample().len() as u64);
        (a && b, format!("{da}, {db}"))
    })));
    lines.push(line(11, timed(300, criterion_11)));
    lines.push(line(12, timed(300, criterion_12)));
    lines.push(line(13, timed(600, criterion_13)));

    for l in &lines {
        let verdict = if l.pass { "PASS" } else { "FAIL" };
        let note = if l.expected_failure { " (recorded discrepancy)" } else { "" };
        println!("criterion {:>2}: {verdict}{note} | {}", l.id, l.detail);
    }
    let unexpected: Vec<u32> = lines.iter().filter(|l| !l.pass && !l.expected_failure).map(|l| l.id).collect();
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("acceptance: {passed} of {} criteria pass", lines.len());
    if !unexpected.is_empty() {
        eprintln!("criteria failed: {unexpected:?}");
        std::process::exit(1);
    }
}
