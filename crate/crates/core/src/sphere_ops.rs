//! Binary operations on proper spherical bodies: the trivial operations, the
//! convex hull of the union, and Euclidean operations transported through a
//! gnomonic chart. Also the E-set functional and the covariance and
//! discontinuity drivers.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, GeomError, Result};
use crate::euclid::{lp_m_set, m4_op, m_add, ConvexPolytope, QuadrantPolytope, SupportFun4};
use crate::gnomonic::{map_body, map_body_inv, HemisphereChart};
use crate::linalg::{basis_vector, check_unit, direction_grid, gram_schmidt, random_unit, Vector};
use crate::random::{random_cap_body, random_cap_point, random_subsphere_through, trial_rng};
use crate::records::BodyRecord;
use crate::sphere::{
    conv_union, delta_s, equator_directions, gamma_over, hemisphere_center_with_margin, make_body, neg,
    point_distance, properness_margin, segment, sph_project, sph_support, SpherePolytope, Subsphere,
    MARGIN_TOL,
};

/// Where the chart of a transported operation is centered.
#[derive(Clone, Debug, PartialEq)]
pub enum ChartPolicy {
    /// Margin-maximizing hemisphere center of the union of generators.
    PairCenter,
    Fixed(Vector),
}

impl ChartPolicy {
    pub fn label(&self) -> String {
        match self {
            ChartPolicy::PairCenter => "pair_center".into(),
            ChartPolicy::Fixed(u) => format!("fixed{:?}", u.as_slice()),
        }
    }
}

#[derive(Clone)]
pub enum SphereOpSpec {
    TrivialK,
    TrivialNegK,
    TrivialL,
    TrivialNegL,
    ConvUnion,
    NegConvUnion,
    Transport {
        name: String,
        m: QuadrantPolytope,
        policy: ChartPolicy,
    },
    Transport4 {
        mbar: SupportFun4,
        policy: ChartPolicy,
    },
}

impl fmt::Debug for SphereOpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Vertex count of the L2 combining set used by the covariance drivers. Any
/// polygon gives an exactly transported operation, so a coarse one suffices.
pub const COVARIANCE_LP_TOL: f64 = 1e-4;

impl SphereOpSpec {
    pub fn trivial_specs() -> [SphereOpSpec; 4] {
        [
            SphereOpSpec::TrivialK,
            SphereOpSpec::TrivialNegK,
            SphereOpSpec::TrivialL,
            SphereOpSpec::TrivialNegL,
        ]
    }

    pub fn transport(name: impl Into<String>, m: QuadrantPolytope, policy: ChartPolicy) -> Self {
        SphereOpSpec::Transport {
            name: name.into(),
            m,
            policy,
        }
    }

    pub fn transport_minkowski(policy: ChartPolicy) -> Self {
        Self::transport("minkowski", QuadrantPolytope::minkowski(), policy)
    }

    pub fn transport_hull(policy: ChartPolicy) -> Self {
        Self::transport("hull", QuadrantPolytope::hull(), policy)
    }

    pub fn transport_lp(p: f64, tol: f64, policy: ChartPolicy) -> Result<Self> {
        Ok(Self::transport(format!("l{p}"), lp_m_set(p, tol)?, policy))
    }

    pub fn label(&self) -> String {
        match self {
            SphereOpSpec::TrivialK => "trivial_k".into(),
            SphereOpSpec::TrivialNegK => "trivial_negk".into(),
            SphereOpSpec::TrivialL => "trivial_l".into(),
            SphereOpSpec::TrivialNegL => "trivial_negl".into(),
            SphereOpSpec::ConvUnion => "conv_union".into(),
            SphereOpSpec::NegConvUnion => "neg_conv_union".into(),
            SphereOpSpec::Transport { name, policy, .. } => {
                format!("transport({name}, {})", policy.label())
            }
            SphereOpSpec::Transport4 { mbar, policy } => {
                format!("transport4({}, {})", mbar.label(), policy.label())
            }
        }
    }

    /// Same operation with the chart policy replaced (no-op for
    /// non-transported kinds).
    pub fn with_policy(&self, policy: ChartPolicy) -> Self {
        match self {
            SphereOpSpec::Transport { name, m, .. } => SphereOpSpec::Transport {
                name: name.clone(),
                m: m.clone(),
                policy,
            },
            SphereOpSpec::Transport4 { mbar, .. } => SphereOpSpec::Transport4 {
                mbar: mbar.clone(),
                policy,
            },
            other => other.clone(),
        }
    }

    pub fn policy(&self) -> Option<&ChartPolicy> {
        match self {
            SphereOpSpec::Transport { policy, .. } | SphereOpSpec::Transport4 { policy, .. } => Some(policy),
            _ => None,
        }
    }
}

/// Chart used by a transported operation on the pair `(K, L)`.
pub fn transport_chart(policy: &ChartPolicy, k: &SpherePolytope, l: &SpherePolytope) -> Result<HemisphereChart> {
    check_dim(k.ambient_dim(), l.ambient_dim())?;
    match policy {
        ChartPolicy::PairCenter => {
            let pts: Vec<Vector> = k.generators().iter().chain(l.generators()).cloned().collect();
            match hemisphere_center_with_margin(&pts) {
                Some((c, margin)) if margin > MARGIN_TOL => HemisphereChart::new(&c),
                _ => Err(GeomError::ImproperPair),
            }
        }
        ChartPolicy::Fixed(u) => {
            check_dim(k.ambient_dim(), u.len())?;
            HemisphereChart::new(u)
        }
    }
}

/// Grid size for converting a functional support back to a polytope.
pub const TRANSPORT4_GRID: usize = 1024;

/// Touching points `grad h(x)` of a support function on a direction grid,
/// by central differences (h is positively homogeneous of degree one).
fn touching_points<F: Fn(&Vector) -> Result<f64>>(h: F, dim: usize, count: usize) -> Result<Vec<Vector>> {
    let step = 1e-6;
    direction_grid(dim, count)
        .iter()
        .map(|x| {
            let mut g = Vector::zeros(dim);
            for i in 0..dim {
                let mut xp = x.clone();
                let mut xm = x.clone();
                xp[i] += step;
                xm[i] -= step;
                g[i] = (h(&xp)? - h(&xm)?) / (2.0 * step);
            }
            Ok(g)
        })
        .collect()
}

pub fn apply(spec: &SphereOpSpec, k: &SpherePolytope, l: &SpherePolytope) -> Result<SpherePolytope> {
    check_dim(k.ambient_dim(), l.ambient_dim())?;
    match spec {
        SphereOpSpec::TrivialK => Ok(k.clone()),
        SphereOpSpec::TrivialNegK => Ok(neg(k)),
        SphereOpSpec::TrivialL => Ok(l.clone()),
        SphereOpSpec::TrivialNegL => Ok(neg(l)),
        SphereOpSpec::ConvUnion => conv_union(k, l),
        SphereOpSpec::NegConvUnion => conv_union(k, l).map(|c| neg(&c)),
        SphereOpSpec::Transport { m, policy, .. } => {
            let chart = transport_chart(policy, k, l)?;
            let (kb, lb) = chart_pair(&chart, k, l)?;
            map_body_inv(&chart, &m_add(m, &kb, &lb)?)
        }
        SphereOpSpec::Transport4 { mbar, policy } => {
            let chart = transport_chart(policy, k, l)?;
            let (kb, lb) = chart_pair(&chart, k, l)?;
            let pts = touching_points(|x| m4_op(mbar, &kb, &lb, x), chart.plane_dim(), TRANSPORT4_GRID)?;
            map_body_inv(&chart, &ConvexPolytope::new(pts)?)
        }
    }
}

fn chart_pair(chart: &HemisphereChart, k: &SpherePolytope, l: &SpherePolytope) -> Result<(ConvexPolytope, ConvexPolytope)> {
    let wrap = |e: GeomError| match e {
        GeomError::OutOfChart { .. } => GeomError::ImproperPair,
        other => other,
    };
    Ok((map_body(chart, k).map_err(wrap)?, map_body(chart, l).map_err(wrap)?))
}

/// Support functional of the E-set: `max(b, d)` on `a + b >= 0, c + d >= 0`.
pub fn h_e(a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    // widths of actual bodies can come out as -1 ulp
    let slack = |x: f64, y: f64| 4.0 * f64::EPSILON * (x.abs() + y.abs());
    if a + b < -slack(a, b) || c + d < -slack(c, d) {
        return Err(GeomError::Domain);
    }
    Ok(b.max(d))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvEReport {
    pub dirs: usize,
    pub max_dev: f64,
}

/// Compares `tan h_u(conv(K u L), v)` with `h_E` of the four chart supports.
pub fn conv_via_e(u: &Vector, k: &SpherePolytope, l: &SpherePolytope, dirs: usize) -> Result<ConvEReport> {
    check_unit(u)?;
    let chart = HemisphereChart::new(u)?;
    let (kb, lb) = (map_body(&chart, k)?, map_body(&chart, l)?);
    let hull = conv_union(k, l)?;
    let directions = equator_directions(u, dirs)?;
    let mut max_dev: f64 = 0.0;
    for v in &directions {
        let x = chart.coords(v);
        let lhs = sph_support(u, &hull, v)?.tan();
        let rhs = h_e(
            kb.support_unchecked(&-&x),
            kb.support_unchecked(&x),
            lb.support_unchecked(&-&x),
            lb.support_unchecked(&x),
        )?;
        max_dev = max_dev.max((lhs - rhs).abs());
    }
    Ok(ConvEReport {
        dirs: directions.len(),
        max_dev,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum CovMode {
    /// Subspheres through the fixed `u`; transported specs use the chart at `u`.
    URestricted(Vector),
    /// Arbitrary subspheres through a common hemisphere center of the pair.
    Full { ambient_dim: usize },
}

impl CovMode {
    pub fn label(&self) -> String {
        match self {
            CovMode::URestricted(u) => format!("u_restricted{:?}", u.as_slice()),
            CovMode::Full { ambient_dim } => format!("full(ambient_dim={ambient_dim})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub trial: usize,
    pub bodies: [BodyRecord; 2],
    pub subsphere: Vec<Vec<f64>>,
    pub lhs: BodyRecord,
    pub rhs: BodyRecord,
    pub dev: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CovarianceReport {
    pub spec: String,
    pub mode: String,
    pub trials: usize,
    pub max_dev: f64,
    pub violations: usize,
    /// Trials where one side could not be evaluated; also counted as violations.
    pub failures: usize,
    pub witness: Option<Witness>,
    pub tol: f64,
    pub seed: u64,
}

/// Directions per measurement of the deviation between the two sides.
pub const COVARIANCE_DIRS: usize = 512;
/// Cap radius of bodies drawn in u-restricted mode.
pub const U_CAP: f64 = std::f64::consts::FRAC_PI_3;
/// Cap radius of bodies drawn in full mode.
pub const FULL_CAP: f64 = FRAC_PI_4;
/// Maximal angle between the pair's cap center and the subsphere's point.
pub const FULL_OFFSET: f64 = std::f64::consts::PI / 12.0;

/// Unit directions of `S cap w^perp` on a quasi-uniform grid.
fn subsphere_directions(s: &Subsphere, w: &Vector, count: usize) -> Vec<Vector> {
    let in_plane: Vec<Vector> = s.basis().iter().map(|b| b - w * w.dot(b)).collect();
    let basis = gram_schmidt(in_plane.iter(), 1e-8);
    if basis.is_empty() {
        return Vec::new();
    }
    direction_grid(basis.len(), count)
        .iter()
        .map(|c| {
            let mut v = Vector::zeros(w.len());
            for (b, ci) in basis.iter().zip(c.iter()) {
                v.axpy(*ci, b, 1.0);
            }
            v
        })
        .collect()
}

/// Angular deviation between two bodies of the subsphere `S`: `gamma` at a
/// point of `S` whose hemisphere holds both (`w`, then `-w`, then their
/// common center), and the sampled Hausdorff distance otherwise.
pub fn body_deviation(a: &SpherePolytope, b: &SpherePolytope, s: &Subsphere, w: &Vector) -> Result<f64> {
    let mut candidates = vec![w.clone(), -w];
    if let Ok(c) = conv_union(a, b) {
        candidates.push(c.center().clone());
    }
    for c in candidates {
        let inside = |k: &SpherePolytope| k.generators().iter().all(|g| c.dot(g) > 1e-9);
        if !(inside(a) && inside(b) && s.contains_point(&c, 1e-10)) {
            continue;
        }
        let dirs = subsphere_directions(s, &c, COVARIANCE_DIRS);
        if dirs.is_empty() {
            // S is the pair {c, -c}: both bodies are points of it
            let p = &b.generators()[0];
            return Ok(point_distance(p, a, &[]));
        }
        return gamma_over(&c, a, b, &dirs);
    }
    delta_s(a, b, 256)
}

struct Trial {
    k: SpherePolytope,
    l: SpherePolytope,
    s: Subsphere,
    w: Vector,
}

fn draw_trial(mode: &CovMode, seed: u64, trial: usize) -> Result<Trial> {
    let mut rng = trial_rng(seed, trial as u64);
    match mode {
        CovMode::URestricted(u) => {
            let n = u.len();
            let k = random_cap_body(&mut rng, u, 5, U_CAP)?;
            let l = random_cap_body(&mut rng, u, 5, U_CAP)?;
            let s = random_subsphere_through(&mut rng, u, 1..=n - 1)?;
            Ok(Trial { k, l, s, w: u.clone() })
        }
        CovMode::Full { ambient_dim } => {
            let n = *ambient_dim;
            let c = random_unit(&mut rng, n);
            let k = random_cap_body(&mut rng, &c, 5, FULL_CAP)?;
            let l = random_cap_body(&mut rng, &c, 5, FULL_CAP)?;
            let w = random_cap_point(&mut rng, &c, FULL_OFFSET);
            let s = random_subsphere_through(&mut rng, &w, 2..=n - 1)?;
            Ok(Trial { k, l, s, w })
        }
    }
}

/// Both sides `(K|S) * (L|S)` and `(K * L)|S` of a trial.
fn both_sides(spec: &SphereOpSpec, t: &Trial) -> Result<(SpherePolytope, SpherePolytope)> {
    let lhs = apply(spec, &sph_project(&t.k, &t.s)?, &sph_project(&t.l, &t.s)?)?;
    let rhs = sph_project(&apply(spec, &t.k, &t.l)?, &t.s)?;
    Ok((lhs, rhs))
}

/// Randomized check of `(K|S) * (L|S) = (K * L)|S`.
pub fn proj_covariance_check(
    spec: &SphereOpSpec,
    mode: &CovMode,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<CovarianceReport> {
    if trials == 0 {
        return Err(GeomError::InvalidParam("trials must be >= 1".into()));
    }
    let spec = match mode {
        CovMode::URestricted(u) => {
            check_unit(u)?;
            if u.len() < 3 {
                return Err(GeomError::InvalidParam("need ambient dimension >= 3".into()));
            }
            spec.with_policy(ChartPolicy::Fixed(u.clone()))
        }
        CovMode::Full { ambient_dim } => {
            if *ambient_dim < 3 {
                return Err(GeomError::InvalidParam("need ambient dimension >= 3".into()));
            }
            spec.clone()
        }
    };
    let mut report = CovarianceReport {
        spec: spec.label(),
        mode: mode.label(),
        trials,
        max_dev: 0.0,
        violations: 0,
        failures: 0,
        witness: None,
        tol,
        seed,
    };
    for trial in 0..trials {
        let t = draw_trial(mode, seed, trial)?;
        let (lhs, rhs) = match both_sides(&spec, &t) {
            Ok(pair) => pair,
            Err(_) => {
                report.failures += 1;
                report.violations += 1;
                continue;
            }
        };
        let dev = body_deviation(&lhs, &rhs, &t.s, &t.w)?;
        if dev > tol {
            report.violations += 1;
            let bigger = report.witness.as_ref().map_or(true, |w| dev > w.dev);
            if bigger {
                report.witness = Some(Witness {
                    trial,
                    bodies: [BodyRecord::from_sphere(&t.k), BodyRecord::from_sphere(&t.l)],
                    subsphere: t.s.basis().iter().map(|b| b.iter().copied().collect()).collect(),
                    lhs: BodyRecord::from_sphere(&lhs),
                    rhs: BodyRecord::from_sphere(&rhs),
                    dev,
                });
            }
        }
        report.max_dev = report.max_dev.max(dev);
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscontinuityRow {
    pub eps: f64,
    pub max_angle: f64,
    pub expected_angle: f64,
    pub margin: f64,
    /// Sampled `delta_s(L_eps, L_0)`.
    pub delta_to_limit: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscontinuityReport {
    pub rows: Vec<DiscontinuityRow>,
    pub margins_decreasing: bool,
}

/// Builds `K = I(-pi/2, 0)` and `L_eps = I(0, pi/2 - eps)` along one great
/// circle and records how far `conv(K u L_eps)` is from being improper.
pub fn discontinuity_demo(eps_list: &[f64]) -> Result<DiscontinuityReport> {
    let u = basis_vector(3, 2);
    let v = basis_vector(3, 0);
    let k = make_body(vec![-&v, u.clone()])?;
    let l0 = make_body(vec![u.clone(), v.clone()])?;
    let mut rows = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        if !(eps > 0.0 && eps <= FRAC_PI_4) {
            return Err(GeomError::InvalidParam(format!("eps {eps} not in (0, pi/4]")));
        }
        let l = segment(&u, &v, 0.0, FRAC_PI_2 - eps)?;
        let hull = conv_union(&k, &l)?;
        rows.push(DiscontinuityRow {
            eps,
            max_angle: hull.max_generator_angle(),
            expected_angle: std::f64::consts::PI - eps,
            margin: properness_margin(hull.generators()),
            delta_to_limit: delta_s(&l, &l0, 256)?,
        });
    }
    let mut order: Vec<&DiscontinuityRow> = rows.iter().collect();
    order.sort_by(|a, b| b.eps.total_cmp(&a.eps));
    let margins_decreasing = order.windows(2).all(|w| w[1].margin < w[0].margin);
    Ok(DiscontinuityReport {
        rows,
        margins_decreasing,
    })
}
