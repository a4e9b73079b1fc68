//! Star sets: Euclidean radial functions, spherical radial functions about a
//! base point `u`, the gnomonic bridge `rho(g_u(L), v) = tan rho_u(L, v)`,
//! polar relations, and section covariance of pointwise operations.
//!
//! Star sets are functional: a radial map is a closure on unit directions,
//! optionally backed by a sample table.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use rand::Rng;
use serde::Serialize;

use crate::dd::dual_cone_rays;
use crate::error::{check_dim, GeomError, Result};
use crate::euclid::{min_support_certificate, polar_radial, ConvexPolytope, SubspaceBasis, INTERIOR_TOL};
use crate::gnomonic::{map_body, HemisphereChart};
use crate::linalg::{check_unit, gram_schmidt, normalize, random_unit, Vector};
use crate::random::{random_subsphere_through, trial_rng};
use crate::sphere::{contains, equator_directions, sph_polar, sph_support, SpherePolytope, Subsphere};

type RadialFn = Arc<dyn Fn(&Vector) -> f64 + Send + Sync>;

/// Radial function of a star set in R^n, evaluated on unit directions.
#[derive(Clone)]
pub struct RadialMap {
    dim: usize,
    eval: RadialFn,
    samples: Option<(Vec<Vector>, Vec<f64>)>,
}

impl fmt::Debug for RadialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialMap")
            .field("dim", &self.dim)
            .field("sampled", &self.samples.is_some())
            .finish()
    }
}

impl RadialMap {
    pub fn from_fn<F>(dim: usize, f: F) -> Self
    where
        F: Fn(&Vector) -> f64 + Send + Sync + 'static,
    {
        Self {
            dim,
            eval: Arc::new(f),
            samples: None,
        }
    }

    /// Table-backed map; off-grid directions take the value of the nearest
    /// grid direction.
    pub fn from_samples(grid: Vec<Vector>, values: Vec<f64>) -> Result<Self> {
        let first = grid.first().ok_or(GeomError::Empty)?;
        let dim = first.len();
        if grid.len() != values.len() {
            return Err(GeomError::InvalidParam(format!(
                "{} directions but {} values",
                grid.len(),
                values.len()
            )));
        }
        for (g, v) in grid.iter().zip(&values) {
            check_dim(dim, g.len())?;
            check_unit(g)?;
            if !(*v >= 0.0) {
                return Err(GeomError::InvalidParam(format!("negative radial value {v}")));
            }
        }
        let table = (grid.clone(), values.clone());
        let eval = move |x: &Vector| {
            let (g, v) = &table;
            let k = (0..g.len())
                .max_by(|&a, &b| g[a].dot(x).total_cmp(&g[b].dot(x)))
                .unwrap();
            v[k]
        };
        Ok(Self {
            dim,
            eval: Arc::new(eval),
            samples: Some((grid, values)),
        })
    }

    pub fn ball(dim: usize, r: f64) -> Self {
        Self::from_fn(dim, move |_| r)
    }

    /// The star set `{0}`.
    pub fn zero(dim: usize) -> Self {
        Self::ball(dim, 0.0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn samples(&self) -> Option<(&[Vector], &[f64])> {
        self.samples.as_ref().map(|(g, v)| (g.as_slice(), v.as_slice()))
    }

    /// `rho(L, x) = rho(L, x/|x|) / |x|`. Inputs within a few ulps of unit
    /// length are taken as directions unchanged.
    pub fn radial(&self, x: &Vector) -> Result<f64> {
        check_dim(self.dim, x.len())?;
        let n = x.norm();
        if !(n > 0.0) {
            return Err(GeomError::InvalidParam("radial function at the zero vector".into()));
        }
        if (n - 1.0).abs() <= 4.0 * f64::EPSILON {
            return Ok((self.eval)(x));
        }
        Ok((self.eval)(&(x / n)) / n)
    }

    /// Tabulates the map on `grid`.
    pub fn sampled(&self, grid: Vec<Vector>) -> Result<Self> {
        let values = grid.iter().map(|g| self.radial(g)).collect::<Result<Vec<_>>>()?;
        Self::from_samples(grid, values)
    }
}

pub fn radial(l: &RadialMap, x: &Vector) -> Result<f64> {
    l.radial(x)
}

pub fn radial_sum(k: &RadialMap, l: &RadialMap) -> Result<RadialMap> {
    lp_radial_sum(1.0, k, l)
}

/// `rho(K +_p L)^p = rho(K)^p + rho(L)^p`.
pub fn lp_radial_sum(p: f64, k: &RadialMap, l: &RadialMap) -> Result<RadialMap> {
    check_dim(k.dim, l.dim)?;
    if !(p > 0.0) || !p.is_finite() {
        return Err(GeomError::InvalidParam(format!("p must be > 0 (got {p})")));
    }
    let (fk, fl) = (k.eval.clone(), l.eval.clone());
    let combine = move |a: f64, b: f64| {
        if p == 1.0 {
            a + b
        } else {
            (a.powf(p) + b.powf(p)).powf(1.0 / p)
        }
    };
    let mut out = RadialMap::from_fn(k.dim, move |v| combine(fk(v), fl(v)));
    if let (Some((gk, vk)), Some((gl, vl))) = (&k.samples, &l.samples) {
        if gk == gl {
            let values = vk.iter().zip(vl).map(|(a, b)| combine(*a, *b)).collect();
            out.samples = Some((gk.clone(), values));
        }
    }
    Ok(out)
}

/// Restriction to the subspace `V`, in V-coordinates.
pub fn section(l: &RadialMap, v: &SubspaceBasis) -> Result<RadialMap> {
    check_dim(l.dim, v.ambient_dim())?;
    let (f, basis) = (l.eval.clone(), v.clone());
    Ok(RadialMap::from_fn(v.dim(), move |c| f(&basis.embed(c))))
}

/// Image under the rotation `R`: `x -> rho(L, R^T x)`.
pub fn rotate(l: &RadialMap, r: &DMatrix<f64>) -> Result<RadialMap> {
    check_dim(l.dim, r.nrows())?;
    check_dim(l.dim, r.ncols())?;
    let orth = (r.transpose() * r - DMatrix::identity(l.dim, l.dim)).amax();
    let det = r.determinant();
    if orth > 1e-12 || (det - 1.0).abs() > 1e-12 {
        return Err(GeomError::InvalidParam(format!(
            "not a rotation (orthogonality defect {orth:e}, det {det})"
        )));
    }
    let (f, rt) = (l.eval.clone(), r.transpose());
    Ok(RadialMap::from_fn(l.dim, move |x| f(&(&rt * x))))
}

/// Vertices of the polar body `K* = {x : x.y <= 1 on K}` (origin interior).
pub fn polar_body(k: &ConvexPolytope) -> Result<ConvexPolytope> {
    let value = min_support_certificate(k);
    if !(value >= INTERIOR_TOL) {
        return Err(GeomError::OriginNotInterior { value });
    }
    // cone {(y, t) : v.y <= t, t >= 0}; its rays (y, t) give vertices y/t
    let d = k.dim();
    let mut rows: Vec<Vector> = k
        .vertices()
        .iter()
        .map(|v| Vector::from_iterator(d + 1, v.iter().copied().chain(std::iter::once(-1.0))))
        .collect();
    let mut last = Vector::zeros(d + 1);
    last[d] = -1.0;
    rows.push(last);
    let rays = dual_cone_rays(&rows)?;
    let verts = rays
        .iter()
        .filter(|r| r[d] > 1e-12)
        .map(|r| r.rows(0, d) / r[d])
        .collect();
    ConvexPolytope::new(verts)
}

/// Exact radial function of a polytope with the origin in its interior:
/// `rho(K, v) = 1 / h(K*, v)`.
pub fn polytope_radial(k: &ConvexPolytope) -> Result<RadialMap> {
    let polar = polar_body(k)?;
    Ok(RadialMap::from_fn(k.dim(), move |v| 1.0 / polar.support_unchecked(v)))
}

/// Spherical radial function `rho_u(L, v)` of a proper star set about `u`,
/// defined on directions `v` of `S_u`.
#[derive(Clone)]
pub struct SphStarMap {
    u: Vector,
    eval: RadialFn,
}

impl fmt::Debug for SphStarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SphStarMap").field("u", &self.u.as_slice()).finish()
    }
}

impl SphStarMap {
    pub fn from_fn<F>(u: &Vector, f: F) -> Result<Self>
    where
        F: Fn(&Vector) -> f64 + Send + Sync + 'static,
    {
        check_unit(u)?;
        Ok(Self {
            u: u.clone(),
            eval: Arc::new(f),
        })
    }

    /// The star set `{u}`.
    pub fn point(u: &Vector) -> Result<Self> {
        Self::from_fn(u, |_| 0.0)
    }

    /// Spherical cap of angular radius `alpha` about `u`.
    pub fn cap(u: &Vector, alpha: f64) -> Result<Self> {
        if !(0.0..FRAC_PI_2).contains(&alpha) {
            return Err(GeomError::RadialRange { value: alpha });
        }
        Self::from_fn(u, move |_| alpha)
    }

    /// Star map of a convex body about an interior point `u`, through the
    /// exact radial function of its chart image.
    pub fn from_body(u: &Vector, k: &SpherePolytope) -> Result<Self> {
        let chart = HemisphereChart::new(u)?;
        let img = map_body(&chart, k)?;
        let rho = polytope_radial(&img)?;
        Self::from_fn(u, move |v| rho.radial(&chart.coords(v)).map_or(0.0, f64::atan))
    }

    pub fn u(&self) -> &Vector {
        &self.u
    }

    pub fn ambient_dim(&self) -> usize {
        self.u.len()
    }

    /// `rho_u(L, v)`, checked to lie in `[0, pi/2)`.
    pub fn value(&self, v: &Vector) -> Result<f64> {
        check_dim(self.u.len(), v.len())?;
        if self.u.dot(v).abs() > 1e-12 {
            return Err(GeomError::Precondition(format!(
                "direction not orthogonal to u (u.v = {:e})",
                self.u.dot(v)
            )));
        }
        let value = (self.eval)(v);
        if !(0.0..FRAC_PI_2).contains(&value) {
            return Err(GeomError::RadialRange { value });
        }
        Ok(value)
    }

    /// The boundary point `u cos rho + v sin rho`.
    pub fn boundary_point(&self, v: &Vector) -> Result<Vector> {
        let r = self.value(v)?;
        Ok(&self.u * r.cos() + v * r.sin())
    }

    /// Evaluates on every direction, failing on the first out-of-range value.
    pub fn validate(&self, dirs: &[Vector]) -> Result<()> {
        dirs.iter().try_for_each(|v| self.value(v).map(|_| ()))
    }
}

pub fn sph_radial(s: &SphStarMap, v: &Vector) -> Result<f64> {
    s.value(v)
}

/// Intersection with a great subsphere through `u`: directions outside `S`
/// keep only the base point.
pub fn section_u(l: &SphStarMap, s: &Subsphere) -> Result<SphStarMap> {
    check_dim(l.ambient_dim(), s.ambient_dim())?;
    if !s.contains_point(&l.u, 1e-10) {
        return Err(GeomError::Precondition("subsphere does not contain u".into()));
    }
    let (f, sub) = (l.eval.clone(), s.clone());
    SphStarMap::from_fn(&l.u, move |v| if sub.contains_point(v, 1e-10) { f(v) } else { 0.0 })
}

/// `rho(g_u(L), x) = tan rho_u(L, x)`, as a radial map in chart coordinates.
pub fn star_bridge(chart: &HemisphereChart, s: &SphStarMap) -> Result<RadialMap> {
    if (chart.center() - &s.u).norm() > 1e-12 {
        return Err(GeomError::Precondition("chart center differs from star base point".into()));
    }
    let (f, ch) = (s.eval.clone(), chart.clone());
    Ok(RadialMap::from_fn(chart.plane_dim(), move |c| f(&ch.embed(c)).tan()))
}

/// Inverse bridge: `rho_u(v) = arctan rho(L, coords(v))`.
pub fn star_bridge_inv(chart: &HemisphereChart, r: &RadialMap) -> Result<SphStarMap> {
    check_dim(chart.plane_dim(), r.dim())?;
    let (f, ch) = (r.eval.clone(), chart.clone());
    SphStarMap::from_fn(chart.center(), move |v| {
        let c = ch.coords(v);
        match normalize(&c) {
            Some(d) => (f(&d) / c.norm()).atan(),
            None => 0.0,
        }
    })
}

/// A function of the four radial values
/// `(rho(K,-v), rho(K,v), rho(L,-v), rho(L,v))`.
#[derive(Clone)]
pub struct StarFn {
    label: String,
    f: Arc<dyn Fn([f64; 4]) -> f64 + Send + Sync>,
}

impl fmt::Debug for StarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarFn({})", self.label)
    }
}

impl StarFn {
    pub fn new<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn([f64; 4]) -> f64 + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            f: Arc::new(f),
        }
    }

    /// `f = second argument`: returns K.
    pub fn left() -> Self {
        Self::new("left", |a| a[1])
    }

    /// `f = 0`: the singleton {u}.
    pub fn zero() -> Self {
        Self::new("zero", |_| 0.0)
    }

    /// L_p radial sum transported through the chart.
    pub fn lp_transported(p: f64) -> Result<Self> {
        if !(p > 0.0) {
            return Err(GeomError::InvalidParam(format!("p must be > 0 (got {p})")));
        }
        Ok(Self::new(format!("lp_radial({p})"), move |a| {
            (a[1].tan().powf(p) + a[3].tan().powf(p)).powf(1.0 / p).atan()
        }))
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// A binary operation on spherical star sets with a common base point.
pub trait StarBinaryOp {
    fn label(&self) -> String;
    fn combine(&self, k: &SphStarMap, l: &SphStarMap) -> Result<SphStarMap>;
}

/// Pointwise operation `rho(K*L, v) = f(rho(K,-v), rho(K,v), rho(L,-v), rho(L,v))`.
pub fn f_op(f: &StarFn, k: &SphStarMap, l: &SphStarMap) -> Result<SphStarMap> {
    if (&k.u - &l.u).norm() > 1e-12 {
        return Err(GeomError::Precondition("star maps have different base points".into()));
    }
    let (fk, fl, g) = (k.eval.clone(), l.eval.clone(), f.f.clone());
    SphStarMap::from_fn(&k.u, move |v| {
        let nv = -v;
        g([fk(&nv), fk(v), fl(&nv), fl(v)])
    })
}

impl StarBinaryOp for StarFn {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn combine(&self, k: &SphStarMap, l: &SphStarMap) -> Result<SphStarMap> {
        f_op(self, k, l)
    }
}

/// Falsification control: at every direction adds the reach of `L` along a
/// fixed external direction, so the result depends on data outside any
/// section.
#[derive(Clone, Debug)]
pub struct ExternalProbeOp {
    pub probe: Vector,
}

impl StarBinaryOp for ExternalProbeOp {
    fn label(&self) -> String {
        format!("external_probe{:?}", self.probe.as_slice())
    }

    fn combine(&self, k: &SphStarMap, l: &SphStarMap) -> Result<SphStarMap> {
        let u = k.u.clone();
        let w = &self.probe - &u * u.dot(&self.probe);
        let w = normalize(&w).ok_or_else(|| GeomError::InvalidParam("probe parallel to u".into()))?;
        let (fk, fl) = (k.eval.clone(), l.eval.clone());
        SphStarMap::from_fn(&u, move |v| (fk(v).tan() + fl(&w).tan()).atan())
    }
}

/// Outcome of a section-covariance run.
#[derive(Clone, Debug, Serialize)]
pub struct SectionReport {
    pub op: String,
    pub trials: usize,
    pub max_dev: f64,
    pub violations: usize,
    pub tol: f64,
    pub seed: u64,
}

/// Random smooth star map about `u`:
/// `rho(v) = arctan(c + sum_k a_k |w_k . v|^{p_k})`.
pub fn random_star_map<R: Rng + ?Sized>(rng: &mut R, u: &Vector) -> Result<SphStarMap> {
    let dim = u.len();
    let c = rng.gen_range(0.1..1.0);
    let terms: Vec<(f64, Vector, f64)> = (0..3)
        .map(|_| (rng.gen_range(0.0..1.5), random_unit(rng, dim), rng.gen_range(1.0..3.0)))
        .collect();
    SphStarMap::from_fn(u, move |v| {
        let s: f64 = terms.iter().map(|(a, w, p)| a * w.dot(v).abs().powf(*p)).sum();
        (c + s).atan()
    })
}

/// Random unit directions in `S cap S_u`.
pub fn section_directions<R: Rng + ?Sized>(rng: &mut R, s: &Subsphere, u: &Vector, count: usize) -> Vec<Vector> {
    let in_plane: Vec<Vector> = s.basis().iter().map(|b| b - u * u.dot(b)).collect();
    let basis = gram_schmidt(in_plane.iter(), 1e-8);
    if basis.is_empty() {
        return Vec::new();
    }
    (0..count)
        .filter_map(|_| {
            let c = random_unit(rng, basis.len());
            let mut v = Vector::zeros(u.len());
            for (b, ci) in basis.iter().zip(c.iter()) {
                v.axpy(*ci, b, 1.0);
            }
            normalize(&v)
        })
        .collect()
}

/// Compares `(K cap S) * (L cap S)` with `(K * L) cap S` on directions of
/// `S cap S_u` for random star maps and random subspheres through `u`.
pub fn section_covariance_check(
    op: &dyn StarBinaryOp,
    ambient_dim: usize,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<SectionReport> {
    if trials == 0 {
        return Err(GeomError::InvalidParam("trials must be >= 1".into()));
    }
    if ambient_dim < 3 {
        return Err(GeomError::InvalidParam("need ambient dimension >= 3".into()));
    }
    let mut max_dev: f64 = 0.0;
    let mut violations = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let u = random_unit(&mut rng, ambient_dim);
        let k = random_star_map(&mut rng, &u)?;
        let l = random_star_map(&mut rng, &u)?;
        let s = random_subsphere_through(&mut rng, &u, 2..=ambient_dim - 1)?;
        let lhs = op.combine(&section_u(&k, &s)?, &section_u(&l, &s)?)?;
        let rhs = section_u(&op.combine(&k, &l)?, &s)?;
        let mut dev: f64 = 0.0;
        for v in section_directions(&mut rng, &s, &u, 64) {
            dev = dev.max((lhs.value(&v)? - rhs.value(&v)?).abs());
        }
        if dev > tol {
            violations += 1;
        }
        max_dev = max_dev.max(dev);
    }
    Ok(SectionReport {
        op: op.label(),
        trials,
        max_dev,
        violations,
        tol,
        seed,
    })
}

/// Deviations measured by [`polar_relations_check`].
#[derive(Clone, Debug, Serialize)]
pub struct PolarReport {
    /// `max_v |h_u(K,v) + rho_{-u}(K°,v) - pi/2|`.
    pub support_radial_dev: f64,
    /// `max_v |rho(g_u(K)*, v) - rho(g_{-u}(K°), v)|`.
    pub polar_image_dev: f64,
    pub dirs: usize,
}

/// Checks `g_u(K)* = g_{-u}(K°)` and `h_u(K,.) + rho_{-u}(K°,.) = pi/2` on
/// quasi-uniform directions of `S_u`.
pub fn polar_relations_check(chart: &HemisphereChart, k: &SpherePolytope, dirs: usize) -> Result<PolarReport> {
    let u = chart.center();
    let img = map_body(chart, k)?;
    if !(min_support_certificate(&img) >= INTERIOR_TOL) {
        return Err(GeomError::Precondition("u is not an interior point of K".into()));
    }
    let polar = sph_polar(k)?;
    let neg_chart = HemisphereChart::new(&-u)?;
    let polar_img = map_body(&neg_chart, &polar)?;
    let rho_polar = polytope_radial(&polar_img)?;
    let via_support = polar_radial(&img)?;
    let mut support_radial_dev: f64 = 0.0;
    let mut polar_image_dev: f64 = 0.0;
    let directions = equator_directions(u, dirs)?;
    for v in &directions {
        let h = sph_support(u, k, v)?;
        let r_polar = rho_polar.radial(&neg_chart.coords(v))?;
        support_radial_dev = support_radial_dev.max((h + r_polar.atan() - FRAC_PI_2).abs());
        let r_support = via_support.radial(&chart.coords(v))?;
        polar_image_dev = polar_image_dev.max((r_support - r_polar).abs());
    }
    Ok(PolarReport {
        support_radial_dev,
        polar_image_dev,
        dirs: directions.len(),
    })
}

/// Ring of `m` generators at angular radius `alpha` about `u` in the
/// great 2-sphere spanned by `u` and the first two chart axes.
pub fn cap_ring(u: &Vector, alpha: f64, m: usize) -> Result<SpherePolytope> {
    let chart = HemisphereChart::new(u)?;
    if chart.plane_dim() < 2 {
        return Err(GeomError::InvalidParam("cap ring needs ambient dimension >= 3".into()));
    }
    let (a, b) = (chart.plane_basis()[0].clone(), chart.plane_basis()[1].clone());
    let pts = (0..m)
        .map(|j| {
            let t = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
            u * alpha.cos() + (&a * t.cos() + &b * t.sin()) * alpha.sin()
        })
        .collect();
    crate::sphere::make_body(pts)
}

/// `max_v |rho_{-u}(K°, v) - (pi/2 - alpha)|` for the cap ring, over
/// directions in its great 2-sphere.
pub fn cap_ring_polar_deviation(u: &Vector, alpha: f64, m: usize, dirs: usize) -> Result<f64> {
    let k = cap_ring(u, alpha, m)?;
    let chart = HemisphereChart::new(u)?;
    let (a, b) = (chart.plane_basis()[0].clone(), chart.plane_basis()[1].clone());
    // the ring spans a 3-dimensional subspace; the polar is computed there
    let sub = Subsphere::spanned_by(&[u.clone(), a.clone(), b.clone()])?;
    let local = |x: &Vector| Vector::from_iterator(3, sub.basis().iter().map(|q| q.dot(x)));
    let k3 = crate::sphere::make_body(k.generators().iter().map(&local).collect())?;
    let u3 = local(u);
    let polar = sph_polar(&k3)?;
    let neg = HemisphereChart::new(&-&u3)?;
    let rho = polytope_radial(&map_body(&neg, &polar)?)?;
    let mut worst: f64 = 0.0;
    for j in 0..dirs {
        let t = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / dirs as f64;
        let v = local(&(&a * t.cos() + &b * t.sin()));
        let r = rho.radial(&neg.coords(&v))?.atan();
        worst = worst.max((r - (FRAC_PI_2 - alpha)).abs());
    }
    Ok(worst)
}

/// Upper bound for [`cap_ring_polar_deviation`]: the gnomonic image is a
/// regular m-gon inscribed in the circle of radius `tan alpha`.
pub fn cap_ring_bound(alpha: f64, m: usize) -> f64 {
    alpha - (alpha.tan() * (std::f64::consts::PI / m as f64).cos()).atan()
}

/// Spherical radial function by bisection on membership (test oracle and
/// fallback for non-interior base points).
pub fn radial_by_bisection(u: &Vector, k: &SpherePolytope, v: &Vector) -> f64 {
    if !contains(k, u) {
        return f64::NAN;
    }
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if contains(k, &(u * mid.cos() + v * mid.sin())) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}
