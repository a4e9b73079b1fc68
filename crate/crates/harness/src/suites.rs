//! Named suites. A suite is a fixed list of checks sized by a [`RunConfig`].

use serde::Serialize;

use crate::checks::{self, error_assertion, Assertion};
use crate::config::RunConfig;

pub const SUITES: [&str; 8] = [
    "bridge",
    "madd",
    "covariance",
    "dichotomy",
    "metrics",
    "star",
    "polar",
    "discontinuity",
];

pub const DISCONTINUITY_EPS: [f64; 4] = [0.2, 0.1, 0.05, 0.01];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub samples: usize,
    pub tol: f64,
    pub ambient_dim: usize,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
}

fn collect(name: &str, anchor: &str, r: sphereconv::Result<Vec<Assertion>>) -> Vec<Assertion> {
    r.unwrap_or_else(|e| vec![error_assertion(name, anchor, &e)])
}

/// Runs a registered suite; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &RunConfig) -> Option<SuiteReport> {
    let seed = cfg.seed;
    let assertions = match name {
        "bridge" => {
            let mut out = Vec::new();
            for dim in [cfg.ambient_dim, cfg.ambient_dim + 1] {
                out.extend(collect(
                    "bridge_identity",
                    checks::ANCHOR_BRIDGE,
                    checks::bridge_identity(seed, cfg.trials, 100, dim).map(|a| vec![a]),
                ));
            }
            out.extend(collect(
                "segment_support",
                checks::ANCHOR_SEGMENT,
                checks::segment_support(seed, cfg.trials.min(100).max(1), cfg.ambient_dim).map(|a| vec![a]),
            ));
            out.extend(collect(
                "star_bridge",
                checks::ANCHOR_STAR_BRIDGE,
                checks::star_bridge_identity(seed, cfg.trials.min(20).max(1), 50),
            ));
            out
        }
        "madd" => {
            let mut out = collect("madd", checks::ANCHOR_MADD, checks::madd_support_law(seed, cfg.trials.min(100), 100));
            out.extend(collect(
                "e_set",
                checks::ANCHOR_E_SET,
                checks::e_set_identity(seed, cfg.trials.min(100), cfg.samples),
            ));
            out
        }
        "covariance" => collect(
            "u_covariance",
            checks::ANCHOR_U_COV,
            checks::u_covariance(seed, cfg.trials, cfg.tol, cfg.ambient_dim),
        ),
        "dichotomy" => collect(
            "dichotomy",
            checks::ANCHOR_DICHOTOMY,
            checks::dichotomy(seed, cfg.trials, cfg.trials.min(100), cfg.tol, cfg.ambient_dim),
        ),
        "metrics" => collect("metrics", checks::ANCHOR_HAUSDORFF, checks::metrics(seed, cfg.trials.min(100), 4096)),
        "star" => collect(
            "star",
            checks::ANCHOR_SECTION,
            checks::star(seed, cfg.trials, cfg.trials.min(50), cfg.ambient_dim + 1),
        ),
        "polar" => collect("polar", checks::ANCHOR_POLAR_SUM, checks::polar(seed, 10, cfg.samples)),
        "discontinuity" => collect(
            "discontinuity",
            checks::ANCHOR_DISCONT,
            checks::discontinuity(&DISCONTINUITY_EPS),
        ),
        _ => return None,
    };
    Some(SuiteReport {
        suite: name.into(),
        seed,
        trials: cfg.trials,
        samples: cfg.samples,
        tol: cfg.tol,
        ambient_dim: cfg.ambient_dim,
        passed: assertions.iter().all(|a| a.passed),
        assertions,
    })
}
