//! Acceptance gate: ten criteria, each at its stated tolerance and wall-clock
//! budget. Prints one PASS/FAIL line per criterion, then fails if any failed.
//!
//! Run with `cargo test -p sphereconv-harness --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use sphereconv_harness::checks::{self, Assertion};
use sphereconv_harness::suites::DISCONTINUITY_EPS;

const SEED: u64 = 1;

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> sphereconv::Result<Vec<Assertion>>,
}

fn bridge() -> sphereconv::Result<Vec<Assertion>> {
    // bodies on S^2 and S^3
    Ok(vec![
        checks::bridge_identity(SEED, 200, 100, 3)?,
        checks::bridge_identity(SEED, 200, 100, 4)?,
    ])
}

fn madd() -> sphereconv::Result<Vec<Assertion>> {
    checks::madd_support_law(SEED, 100, 100)
}

fn u_covariance() -> sphereconv::Result<Vec<Assertion>> {
    let mut out = checks::u_covariance(SEED, 200, 1e-8, 3)?;
    out.extend(checks::u_covariance(SEED, 200, 1e-8, 4)?);
    Ok(out)
}

fn dichotomy() -> sphereconv::Result<Vec<Assertion>> {
    checks::dichotomy(SEED, 200, 100, 1e-8, 3)
}

fn e_set() -> sphereconv::Result<Vec<Assertion>> {
    checks::e_set_identity(SEED, 100, 512)
}

fn discontinuity() -> sphereconv::Result<Vec<Assertion>> {
    checks::discontinuity(&DISCONTINUITY_EPS)
}

fn segment() -> sphereconv::Result<Vec<Assertion>> {
    Ok(vec![checks::segment_support(SEED, 100, 3)?, checks::segment_support(SEED, 100, 4)?])
}

fn polar() -> sphereconv::Result<Vec<Assertion>> {
    checks::polar(SEED, 10, 512)
}

fn star() -> sphereconv::Result<Vec<Assertion>> {
    let mut out = checks::star_bridge_identity(SEED, 20, 50)?;
    out.extend(checks::star(SEED, 200, 50, 4)?);
    Ok(out)
}

fn metrics() -> sphereconv::Result<Vec<Assertion>> {
    checks::metrics(SEED, 100, 4096)
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "bridge identity on S^2 and S^3", budget: Duration::from_secs(10), run: bridge },
    Criterion { id: 2, title: "M-addition support law", budget: Duration::from_secs(10), run: madd },
    Criterion { id: 3, title: "u-projection covariance of transported ops", budget: Duration::from_secs(30), run: u_covariance },
    Criterion { id: 4, title: "full projection covariance dichotomy", budget: Duration::from_secs(60), run: dichotomy },
    Criterion { id: 5, title: "E-set identity and test vectors", budget: Duration::from_secs(5), run: e_set },
    Criterion { id: 6, title: "discontinuity of conv on improper limits", budget: Duration::from_secs(1), run: discontinuity },
    Criterion { id: 7, title: "segment support values", budget: Duration::from_secs(1), run: segment },
    Criterion { id: 8, title: "polar relations", budget: Duration::from_secs(10), run: polar },
    Criterion { id: 9, title: "star bridge and section covariance", budget: Duration::from_secs(10), run: star },
    Criterion { id: 10, title: "metric consistency", budget: Duration::from_secs(20), run: metrics },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match &result {
            Ok(asserts) => {
                let bad: Vec<String> = asserts
                    .iter()
                    .filter(|a| !a.passed)
                    .map(|a| format!("{}: {:e} {} {:e}", a.name, a.value, serde_json::to_value(a.relation).unwrap(), a.threshold))
                    .collect();
                (bad.is_empty() && !asserts.is_empty(), bad.join("; "))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= c.budget;
        let pass = ok && in_time;
        println!(
            "criterion {:>2} {} {} ({:.2}s of {}s){}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            if detail.is_empty() { String::new() } else { format!(" [{detail}]") },
        );
        if let Ok(asserts) = &result {
            for a in asserts {
                println!("    {} {} = {:.3e} (limit {:e}) {}", if a.passed { "ok  " } else { "FAIL" }, a.name, a.value, a.threshold, a.detail);
            }
        }
        if !in_time {
            println!("    over budget");
        }
        if !pass {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
