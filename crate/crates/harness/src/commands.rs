//! Command bodies. Each returns the JSON payload to write and whether every
//! assertion in it held.

use std::f64::consts::FRAC_PI_3;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use sphereconv::euclid::{lp_m_set, m_add, project as euclid_project, hausdorff, QuadrantPolytope};
use sphereconv::linalg::{direction_grid, Vector};
use sphereconv::random::{random_euclid_polytope, random_sphere_body, trial_rng};
use sphereconv::sphere::{contains, conv_union, delta_s, gamma_u, sph_project};
use sphereconv::sphere_ops::{apply as sphere_apply, discontinuity_demo, transport_chart, ChartPolicy};
use sphereconv::star::{lp_radial_sum, radial_sum, section};
use sphereconv::{BodyRecord, ConvexPolytope, RadialMap, SphereOpSpec as Spec, SubspaceBasis, Subsphere};

use crate::config::RunConfig;
use crate::suites::{run_suite, DISCONTINUITY_EPS, SUITES};

/// Outcome of a command: payload plus assertion status.
pub struct Outcome {
    pub payload: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Self { payload, passed: true }
    }
}

pub fn read_record(path: &Path) -> Result<BodyRecord> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    BodyRecord::from_json(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn parse_vectors(s: &str) -> Result<Vec<Vector>> {
    let rows: Vec<Vec<f64>> = serde_json::from_str(s).context("expected a JSON list of vectors")?;
    Ok(rows.iter().map(|r| Vector::from_column_slice(r)).collect())
}

fn parse_vector(s: &str) -> Result<Vector> {
    let row: Vec<f64> = serde_json::from_str(s).context("expected a JSON vector")?;
    Ok(Vector::from_column_slice(&row))
}

fn record_value(r: &BodyRecord) -> Value {
    serde_json::to_value(r).expect("records serialize")
}

/// `gen euclid|sphere|star`.
pub fn gen(cfg: &RunConfig, kind: &str, shape: &str, m: usize, theta_max: Option<f64>, radius: f64) -> Result<Outcome> {
    let dim = cfg.ambient_dim;
    let mut rng = trial_rng(cfg.seed, 0);
    let record = match kind {
        "euclid" => {
            let body = match shape {
                "cube" => ConvexPolytope::unit_cube(dim),
                "cross" => ConvexPolytope::cross_polytope(dim),
                "random" => random_euclid_polytope(&mut rng, dim, m, radius)?,
                other => bail!("unknown euclid shape '{other}' (cube, cross, random)"),
            };
            BodyRecord::from_euclid(&body)
        }
        "sphere" => {
            if dim < 3 {
                bail!("ambient dimension must be >= 3");
            }
            let body = random_sphere_body(&mut rng, dim, m, theta_max.unwrap_or(FRAC_PI_3))?;
            BodyRecord::from_sphere(&body)
        }
        "star" => {
            let map = match shape {
                "ball" | "random" => RadialMap::ball(dim, radius),
                other => bail!("unknown star shape '{other}' (ball)"),
            };
            BodyRecord::from_radial(&map.sampled(direction_grid(dim, cfg.samples))?)?
        }
        other => bail!("unknown kind '{other}' (euclid, sphere, star)"),
    };
    Ok(Outcome::ok(record_value(&record)))
}

fn sphere_spec(op: &str, policy: ChartPolicy, tol: f64) -> Result<Spec> {
    Ok(match op {
        "trivial_k" => Spec::TrivialK,
        "trivial_negk" => Spec::TrivialNegK,
        "trivial_l" => Spec::TrivialL,
        "trivial_negl" => Spec::TrivialNegL,
        "conv_union" => Spec::ConvUnion,
        "neg_conv_union" => Spec::NegConvUnion,
        "transport-minkowski" => Spec::transport_minkowski(policy),
        "transport-hull" => Spec::transport_hull(policy),
        other => match other.strip_prefix("transport-l") {
            Some(p) => Spec::transport_lp(p.parse().context("bad p")?, tol, policy)?,
            None => bail!("unknown sphere operation '{other}'"),
        },
    })
}

fn euclid_m(op: &str, tol: f64) -> Result<QuadrantPolytope> {
    Ok(match op {
        "minkowski" => QuadrantPolytope::minkowski(),
        "hull" => QuadrantPolytope::hull(),
        other => match other.strip_prefix('l') {
            Some(p) => lp_m_set(p.parse().context("bad p")?, tol)?,
            None => bail!("unknown euclid operation '{other}'"),
        },
    })
}

/// `apply OP FILE FILE`.
pub fn apply(cfg: &RunConfig, op: &str, files: &[impl AsRef<Path>], center: Option<&str>) -> Result<Outcome> {
    if files.len() != 2 {
        bail!("apply takes exactly two body files");
    }
    let a = read_record(files[0].as_ref())?;
    let b = read_record(files[1].as_ref())?;
    if a.space() != b.space() {
        bail!("bodies live in different spaces ({} and {})", a.space(), b.space());
    }
    let payload = match a.space() {
        "sphere" => {
            let (k, l) = (a.to_sphere()?, b.to_sphere()?);
            let policy = match center {
                Some(c) => ChartPolicy::Fixed(parse_vector(c)?),
                None => ChartPolicy::PairCenter,
            };
            let spec = sphere_spec(op, policy, cfg.tol)?;
            let chart_center = match spec.policy() {
                Some(p) => Some(transport_chart(p, &k, &l)?.center().iter().copied().collect::<Vec<f64>>()),
                None => None,
            };
            let r = sphere_apply(&spec, &k, &l)?;
            let contained = conv_union(&k, &l)
                .map(|h| r.generators().iter().all(|g| contains(&h, g)))
                .unwrap_or(false);
            json!({
                "result": record_value(&BodyRecord::from_sphere(&r)),
                "provenance": {"op": spec.label(), "chart_center": chart_center, "seed": cfg.seed},
                "contained_in_conv_union": contained,
            })
        }
        "euclid" => {
            let (k, l) = (a.to_euclid()?, b.to_euclid()?);
            let r = m_add(&euclid_m(op, cfg.tol)?, &k, &l)?;
            json!({
                "result": record_value(&BodyRecord::from_euclid(&r)),
                "provenance": {"op": op, "chart_center": null, "seed": cfg.seed},
            })
        }
        "radial" => {
            let (k, l) = (a.to_radial()?, b.to_radial()?);
            let r = match op {
                "radial_sum" => radial_sum(&k, &l)?,
                other => match other.strip_prefix("radial-l") {
                    Some(p) => lp_radial_sum(p.parse().context("bad p")?, &k, &l)?,
                    None => bail!("unknown radial operation '{other}'"),
                },
            };
            json!({
                "result": record_value(&BodyRecord::from_radial(&r)?),
                "provenance": {"op": op, "chart_center": null, "seed": cfg.seed},
            })
        }
        other => bail!("cannot apply operations to '{other}' records"),
    };
    Ok(Outcome::ok(payload))
}

/// `project FILE --span JSON`: spherical projection, Euclidean projection
/// (in subspace coordinates), or section of a radial map.
pub fn project(file: &Path, span: &str) -> Result<Outcome> {
    let rec = read_record(file)?;
    let vs = parse_vectors(span)?;
    let out = match rec.space() {
        "sphere" => BodyRecord::from_sphere(&sph_project(&rec.to_sphere()?, &Subsphere::spanned_by(&vs)?)?),
        "euclid" => {
            let k = rec.to_euclid()?;
            BodyRecord::from_euclid(&euclid_project(&k, &SubspaceBasis::spanned_by(k.dim(), &vs)?)?)
        }
        "radial" => {
            let r = rec.to_radial()?;
            let v = SubspaceBasis::spanned_by(r.dim(), &vs)?;
            let grid = direction_grid(v.dim(), r.samples().map_or(512, |(g, _)| g.len()));
            BodyRecord::from_radial(&section(&r, &v)?.sampled(grid)?)?
        }
        other => bail!("cannot project '{other}' records"),
    };
    Ok(Outcome::ok(record_value(&out)))
}

/// `metric hausdorff|delta_s|gamma A B`.
pub fn metric(cfg: &RunConfig, kind: &str, a: &Path, b: &Path, u: Option<&str>) -> Result<Outcome> {
    let (ra, rb) = (read_record(a)?, read_record(b)?);
    let value = match kind {
        "hausdorff" => hausdorff(&ra.to_euclid()?, &rb.to_euclid()?)?,
        "delta_s" => delta_s(&ra.to_sphere()?, &rb.to_sphere()?, cfg.samples)?,
        "gamma" => {
            let (k, l) = (ra.to_sphere()?, rb.to_sphere()?);
            let u = match u {
                Some(s) => parse_vector(s)?,
                None => conv_union(&k, &l)?.center().clone(),
            };
            gamma_u(&u, &k, &l, cfg.samples)?
        }
        other => bail!("unknown metric '{other}' (hausdorff, delta_s, gamma)"),
    };
    Ok(Outcome::ok(json!({"metric": kind, "value": value, "samples": cfg.samples})))
}

/// `check SUITE`.
pub fn check(cfg: &RunConfig, suite: &str) -> Result<Outcome> {
    let report = run_suite(suite, cfg).ok_or_else(|| anyhow!("unknown suite '{suite}' (one of {})", SUITES.join(", ")))?;
    Ok(Outcome {
        passed: report.passed,
        payload: serde_json::to_value(&report)?,
    })
}

/// `demo discontinuity [--eps ...]`.
pub fn demo(name: &str, eps: &[f64]) -> Result<Outcome> {
    match name {
        "discontinuity" => {
            let eps = if eps.is_empty() { DISCONTINUITY_EPS.to_vec() } else { eps.to_vec() };
            Ok(Outcome::ok(serde_json::to_value(discontinuity_demo(&eps)?)?))
        }
        other => bail!("unknown demo '{other}' (discontinuity)"),
    }
}
