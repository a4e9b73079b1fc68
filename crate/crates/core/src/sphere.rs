//! Proper spherical convex bodies as finitely generated spherical polytopes.
//!
//! A body is the intersection of `S^n` with the convex cone spanned by its
//! generators, all of which lie in a common open hemisphere. Each body keeps
//! a certified hemisphere center (the margin-maximizing one) and its
//! generators' gnomonic images in the chart at that center, which is where
//! membership and extremality are decided.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dd::dual_cone_rays;
use crate::error::{check_dim, GeomError, Result};
use crate::euclid::CANON_TOL;
use crate::gnomonic::HemisphereChart;
use crate::hull::{extreme_indices, sort_lex};
use crate::linalg::{check_unit, columns, direction_grid, gram_schmidt, normalize, Vector, UNIT_TOL};
use crate::nnls::nnls;
use crate::wolfe::{min_norm, nearest_point};

/// Minimal `center.g` for a certified hemisphere center.
pub const MARGIN_TOL: f64 = 1e-9;

/// Residual allowed by the cone-membership test (chart units).
pub const CONTAINS_TOL: f64 = 1e-9;

/// A proper spherical convex body.
#[derive(Clone, Debug)]
pub struct SpherePolytope {
    generators: Vec<Vector>,
    center: Vector,
    margin: f64,
    chart: HemisphereChart,
    chart_points: Vec<Vector>,
}

impl PartialEq for SpherePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.center == other.center
    }
}

impl SpherePolytope {
    pub fn ambient_dim(&self) -> usize {
        self.center.len()
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    /// Certified hemisphere center.
    pub fn center(&self) -> &Vector {
        &self.center
    }

    /// `min_g center.g`.
    pub fn margin(&self) -> f64 {
        self.margin
    }

    /// Body with a caller-chosen center; fails unless every generator has
    /// `center.g > MARGIN_TOL`.
    pub fn with_center(&self, center: &Vector) -> Result<Self> {
        check_dim(self.ambient_dim(), center.len())?;
        check_unit(center)?;
        let margin = min_dot(center, &self.generators);
        if !(margin > MARGIN_TOL) {
            return Err(GeomError::Precondition(format!(
                "center does not certify the body (margin {margin:e})"
            )));
        }
        let chart = HemisphereChart::new(center)?;
        let chart_points = self
            .generators
            .iter()
            .map(|g| chart.gproj(g))
            .collect::<Result<_>>()?;
        Ok(Self {
            generators: self.generators.clone(),
            center: center.clone(),
            margin,
            chart,
            chart_points,
        })
    }

    pub fn contains(&self, x: &Vector) -> bool {
        contains(self, x)
    }

    /// Two-sided generator containment.
    pub fn body_eq(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    /// Largest angle between two generators.
    pub fn max_generator_angle(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                worst = worst.max(sph_dist_unchecked(a, b));
            }
        }
        worst
    }
}

fn min_dot(u: &Vector, pts: &[Vector]) -> f64 {
    pts.iter().map(|g| u.dot(g)).fold(f64::INFINITY, f64::min)
}

// 2 atan2(|u - v|, |u + v|) instead of acos(u.v): acos loses half the digits
// near coincident points
fn sph_dist_unchecked(u: &Vector, v: &Vector) -> f64 {
    2.0 * (u - v).norm().atan2((u + v).norm())
}

/// Great-circle distance (the angle `arccos(u.v)`) in `[0, pi]`.
pub fn sph_dist(u: &Vector, v: &Vector) -> Result<f64> {
    check_dim(u.len(), v.len())?;
    check_unit(u)?;
    check_unit(v)?;
    Ok(sph_dist_unchecked(u, v))
}

/// Margin-maximizing hemisphere center: the normalized min-norm point of
/// `conv(points)`. `None` when the best margin is below `MARGIN_TOL`.
pub fn hemisphere_center(points: &[Vector]) -> Option<Vector> {
    hemisphere_center_with_margin(points).map(|(c, _)| c)
}

/// Center together with its margin `min_g c.g`.
pub fn hemisphere_center_with_margin(points: &[Vector]) -> Option<(Vector, f64)> {
    if points.is_empty() {
        return None;
    }
    let (y, _) = min_norm(points);
    let c = normalize(&y)?;
    let margin = min_dot(&c, points);
    (margin > MARGIN_TOL).then_some((c, margin))
}

/// Best margin `max_c min_g c.g` over unit `c`, or 0 if no open hemisphere
/// contains the points.
pub fn properness_margin(points: &[Vector]) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let (y, _) = min_norm(points);
    match normalize(&y) {
        Some(c) => min_dot(&c, points).max(0.0),
        None => 0.0,
    }
}

/// Normalizes the points, certifies a hemisphere center and keeps the
/// extreme generators.
pub fn make_body(points: Vec<Vector>) -> Result<SpherePolytope> {
    let first = points.first().ok_or(GeomError::Empty)?;
    let dim = first.len();
    let mut unit = Vec::with_capacity(points.len());
    for p in &points {
        check_dim(dim, p.len())?;
        // renormalizing a unit vector can move its last bits
        if (p.norm() - 1.0).abs() <= 4.0 * f64::EPSILON {
            unit.push(p.clone());
            continue;
        }
        let u = normalize(p).ok_or_else(|| GeomError::InvalidParam("zero generator".into()))?;
        unit.push(u);
    }
    let (center, _) = hemisphere_center_with_margin(&unit).ok_or(GeomError::Improper)?;
    build(unit, center)
}

fn build(unit: Vec<Vector>, center: Vector) -> Result<SpherePolytope> {
    let chart = HemisphereChart::new(&center)?;
    let chart_all = unit
        .iter()
        .map(|g| chart.gproj(g))
        .collect::<Result<Vec<_>>>()?;
    let scale = chart_all.iter().map(|p| p.amax()).fold(1.0, f64::max);
    let keep = extreme_indices(&chart_all, CANON_TOL * scale);
    let mut generators: Vec<Vector> = keep.iter().map(|&i| unit[i].clone()).collect();
    sort_lex(&mut generators);
    let chart_points = generators
        .iter()
        .map(|g| chart.gproj(g))
        .collect::<Result<Vec<_>>>()?;
    let margin = min_dot(&center, &generators);
    Ok(SpherePolytope {
        generators,
        center,
        margin,
        chart,
        chart_points,
    })
}

/// Membership in the cone spanned by the generators, decided in the chart at
/// the body's center.
pub fn contains(k: &SpherePolytope, x: &Vector) -> bool {
    if x.len() != k.ambient_dim() {
        return false;
    }
    let Ok(p) = k.chart.gproj(x) else {
        return false;
    };
    nearest_point(&k.chart_points, &p).distance <= CONTAINS_TOL
}

/// A great subsphere `S = V cap S^n`, stored as an orthonormal basis of `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct Subsphere {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subsphere {
    pub fn new(ambient_dim: usize, basis: Vec<Vector>) -> Result<Self> {
        if basis.is_empty() || basis.len() > ambient_dim {
            return Err(GeomError::InvalidBasis(format!(
                "subsphere needs 1..={ambient_dim} basis vectors, got {}",
                basis.len()
            )));
        }
        for (i, b) in basis.iter().enumerate() {
            check_dim(ambient_dim, b.len())?;
            if (b.norm() - 1.0).abs() > UNIT_TOL {
                return Err(GeomError::InvalidBasis(format!("vector {i} not unit")));
            }
            if basis[..i].iter().any(|c| c.dot(b).abs() > UNIT_TOL) {
                return Err(GeomError::InvalidBasis(format!("vector {i} not orthogonal")));
            }
        }
        Ok(Self { ambient_dim, basis })
    }

    pub fn spanned_by(vectors: &[Vector]) -> Result<Self> {
        let first = vectors.first().ok_or(GeomError::Empty)?;
        let dim = first.len();
        for v in vectors {
            check_dim(dim, v.len())?;
        }
        Self::new(dim, gram_schmidt(vectors.iter(), 1e-10))
    }

    pub fn whole(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|k| crate::linalg::basis_vector(ambient_dim, k))
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the linear subspace `V` (k + 1 for a k-sphere).
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Orthogonal projection onto `V`.
    pub fn project(&self, x: &Vector) -> Vector {
        let mut p = Vector::zeros(self.ambient_dim);
        for b in &self.basis {
            p.axpy(b.dot(x), b, 1.0);
        }
        p
    }

    pub fn contains_point(&self, x: &Vector, tol: f64) -> bool {
        (x - self.project(x)).norm() <= tol
    }
}

/// Spherical projection `K|S = (rad(K)|V) cap S^n`.
pub fn sph_project(k: &SpherePolytope, s: &Subsphere) -> Result<SpherePolytope> {
    check_dim(k.ambient_dim(), s.ambient_dim())?;
    let mut pts = Vec::with_capacity(k.generators.len());
    for g in &k.generators {
        let p = s.project(g);
        if p.norm() <= 1e-12 {
            return Err(GeomError::Precondition(
                "generator projects to the origin".into(),
            ));
        }
        pts.push(p);
    }
    make_body(pts).map_err(|e| match e {
        GeomError::Improper => GeomError::Precondition("projected set is improper".into()),
        other => other,
    })
}

/// Spherical support `h_u(K, v) = max_g arctan((v.g)/(u.g))`.
pub fn sph_support(u: &Vector, k: &SpherePolytope, v: &Vector) -> Result<f64> {
    check_dim(k.ambient_dim(), u.len())?;
    check_dim(k.ambient_dim(), v.len())?;
    if u.dot(v).abs() > 1e-12 {
        return Err(GeomError::Precondition(format!(
            "direction not orthogonal to u (u.v = {:e})",
            u.dot(v)
        )));
    }
    let mut best = f64::NEG_INFINITY;
    for g in &k.generators {
        let ug = u.dot(g);
        if !(ug > 0.0) {
            return Err(GeomError::Precondition(format!(
                "body not in the open hemisphere of u (u.g = {ug:e})"
            )));
        }
        best = best.max(v.dot(g).atan2(ug));
    }
    Ok(best)
}

/// Geodesic segment `{u cos t + w sin t : t in [alpha, beta]}`.
pub fn segment(u: &Vector, w: &Vector, alpha: f64, beta: f64) -> Result<SpherePolytope> {
    check_dim(u.len(), w.len())?;
    check_unit(u)?;
    check_unit(w)?;
    if u.dot(w).abs() > 1e-12 {
        return Err(GeomError::Precondition("u and w not orthogonal".into()));
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    if !(-half_pi < alpha && alpha <= beta && beta < half_pi) {
        return Err(GeomError::InvalidParam(format!(
            "need -pi/2 < alpha <= beta < pi/2 (alpha {alpha}, beta {beta})"
        )));
    }
    let at = |t: f64| u * t.cos() + w * t.sin();
    if alpha == beta {
        make_body(vec![at(alpha)])
    } else {
        make_body(vec![at(alpha), at(beta)])
    }
}

/// Spherical convex hull of the union.
pub fn conv_union(k: &SpherePolytope, l: &SpherePolytope) -> Result<SpherePolytope> {
    check_dim(k.ambient_dim(), l.ambient_dim())?;
    let pts: Vec<Vector> = k.generators.iter().chain(&l.generators).cloned().collect();
    make_body(pts).map_err(|e| match e {
        GeomError::Improper => GeomError::ImproperPair,
        other => other,
    })
}

/// Antipodal image `-K`.
pub fn neg(k: &SpherePolytope) -> SpherePolytope {
    let mut generators: Vec<Vector> = k.generators.iter().map(|g| -g).collect();
    sort_lex(&mut generators);
    let center = -&k.center;
    let chart = HemisphereChart::new(&center).expect("unit center");
    let chart_points = generators
        .iter()
        .map(|g| chart.gproj(g).expect("negated body stays in chart"))
        .collect();
    SpherePolytope {
        generators,
        center,
        margin: k.margin,
        chart,
        chart_points,
    }
}

/// Spherical distance from a unit `x` to `K`.
///
/// Uses the projection `p` of `x` onto the cone `rad(K)`; when `p` vanishes
/// (angle at least pi/2) the distance is the minimum over sampled points.
pub fn point_distance(x: &Vector, k: &SpherePolytope, fallback: &[Vector]) -> f64 {
    let a = columns(&k.generators, k.ambient_dim());
    let mu = nnls(&a, x);
    let p = &a * mu;
    let n = p.norm();
    if n > 1e-12 {
        sph_dist_unchecked(x, &(p / n))
    } else {
        fallback
            .iter()
            .chain(&k.generators)
            .map(|y| sph_dist_unchecked(x, y))
            .fold(f64::INFINITY, f64::min)
    }
}

/// Deterministic sample of `count` points of `K`: generators, points on the
/// geodesics between generator pairs, and normalized random convex
/// combinations of small generator subsets.
pub fn sample_points(k: &SpherePolytope, count: usize) -> Vec<Vector> {
    let g = &k.generators;
    let mut out: Vec<Vector> = g.clone();
    if g.len() < 2 || count <= out.len() {
        return out;
    }
    let budget = count - out.len();
    let pairs = g.len() * (g.len() - 1) / 2;
    let per_pair = (budget / 2 / pairs).max(1);
    'pairs: for i in 0..g.len() {
        for j in i + 1..g.len() {
            for s in 1..=per_pair {
                if out.len() >= g.len() + budget / 2 {
                    break 'pairs;
                }
                let t = s as f64 / (per_pair + 1) as f64;
                if let Some(p) = normalize(&(&g[i] * (1.0 - t) + &g[j] * t)) {
                    out.push(p);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(count as u64 ^ 0xd157);
    let max_face = k.ambient_dim().min(g.len());
    while out.len() < count {
        let size = rng.gen_range(2..=max_face.max(2));
        let mut p = Vector::zeros(k.ambient_dim());
        for _ in 0..size {
            let w: f64 = -rng.gen_range(f64::MIN_POSITIVE..1.0f64).ln();
            p.axpy(w, &g[rng.gen_range(0..g.len())], 1.0);
        }
        if let Some(p) = normalize(&p) {
            out.push(p);
        }
    }
    out
}

/// Sampled spherical Hausdorff distance (a lower bound of the true value,
/// converging as `samples` grows).
pub fn delta_s(k: &SpherePolytope, l: &SpherePolytope, samples: usize) -> Result<f64> {
    check_dim(k.ambient_dim(), l.ambient_dim())?;
    if samples == 0 {
        return Err(GeomError::InvalidParam("samples must be >= 1".into()));
    }
    let sk = sample_points(k, samples);
    let sl = sample_points(l, samples);
    let directed = |from: &[Vector], to: &SpherePolytope, to_samples: &[Vector]| {
        from.iter()
            .map(|x| point_distance(x, to, to_samples))
            .fold(0.0, f64::max)
    };
    Ok(directed(&sk, l, &sl).max(directed(&sl, k, &sk)))
}

/// `max_v |h_u(K,v) - h_u(L,v)|` over the given directions in `S_u`.
pub fn gamma_over(u: &Vector, k: &SpherePolytope, l: &SpherePolytope, dirs: &[Vector]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for v in dirs {
        let d = (sph_support(u, k, v)? - sph_support(u, l, v)?).abs();
        worst = worst.max(d);
    }
    Ok(worst)
}

/// Quasi-uniform directions of `S_u`, in ambient coordinates.
pub fn equator_directions(u: &Vector, samples: usize) -> Result<Vec<Vector>> {
    let chart = HemisphereChart::new(u)?;
    Ok(direction_grid(chart.plane_dim(), samples)
        .iter()
        .map(|c| chart.embed(c))
        .collect())
}

/// Sampled `gamma_u` metric.
pub fn gamma_u(u: &Vector, k: &SpherePolytope, l: &SpherePolytope, samples: usize) -> Result<f64> {
    check_dim(k.ambient_dim(), u.len())?;
    check_dim(l.ambient_dim(), u.len())?;
    check_unit(u)?;
    if samples == 0 {
        return Err(GeomError::InvalidParam("samples must be >= 1".into()));
    }
    let dirs = equator_directions(u, samples)?;
    gamma_over(u, k, l, &dirs)
}

/// Largest ambient dimension handled by the exact polar.
pub const POLAR_MAX_AMBIENT: usize = 4;

/// Spherical polar `K° = {v : v.w <= 0 for all w in K}` via the dual cone.
pub fn sph_polar(k: &SpherePolytope) -> Result<SpherePolytope> {
    let dim = k.ambient_dim();
    if dim > POLAR_MAX_AMBIENT {
        return Err(GeomError::UnsupportedDim(dim));
    }
    let rank = gram_schmidt(k.generators.iter(), 1e-9).len();
    if rank < dim {
        return Err(GeomError::Degenerate(format!(
            "generators span a {rank}-dimensional subspace of R^{dim}"
        )));
    }
    let rays = dual_cone_rays(&k.generators)?;
    let body = make_body(rays)?;
    let preferred = -&k.center;
    Ok(body.with_center(&preferred).unwrap_or(body))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn e(dim: usize, k: usize) -> Vector {
        crate::linalg::basis_vector(dim, k)
    }

    #[test]
    fn sph_dist_examples() {
        let u = e(3, 0);
        assert_eq!(sph_dist(&u, &u).unwrap(), 0.0);
        assert!((sph_dist(&u, &-&u).unwrap() - PI).abs() < 1e-15);
        assert!((sph_dist(&u, &e(3, 1)).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!(sph_dist(&vector(&[2.0, 0.0, 0.0]), &u).is_err());
    }

    #[test]
    fn hemisphere_center_examples() {
        let e1 = e(3, 0);
        assert_eq!(hemisphere_center(&[e1.clone()]).unwrap(), e1);
        assert!(hemisphere_center(&[e1.clone(), -&e1]).is_none());
    }

    #[test]
    fn hemisphere_center_on_cap_beats_grid() {
        // points on the circle of angular radius pi/4 about e3
        let a = FRAC_PI_4;
        let pts: Vec<Vector> = (0..7)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / 7.0;
                vector(&[a.sin() * t.cos(), a.sin() * t.sin(), a.cos()])
            })
            .collect();
        let c = hemisphere_center(&pts).unwrap();
        let got = min_dot(&c, &pts);
        assert!(got >= a.cos() - 1e-9);
        // brute force over a grid of candidate centers cannot do better
        let best_grid = direction_grid(3, 20000)
            .iter()
            .map(|z| min_dot(z, &pts))
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(got >= best_grid - 1e-12);
    }

    #[test]
    fn make_body_examples() {
        let p = normalize(&vector(&[1.0, 2.0, 3.0])).unwrap();
        let single = make_body(vec![p.clone()]).unwrap();
        assert_eq!(single.generators(), &[p.clone()]);
        assert!(matches!(make_body(vec![p.clone(), -&p]), Err(GeomError::Improper)));
        let tri = make_body(vec![
            vector(&[1.0, 0.2, 0.1]),
            vector(&[0.1, 1.0, 0.3]),
            vector(&[0.2, 0.1, 1.0]),
        ])
        .unwrap();
        assert_eq!(tri.generators().len(), 3);
        // the midpoint of two generators is not extreme
        let g = tri.generators();
        let mid = normalize(&(&g[0] + &g[1])).unwrap();
        let again = make_body(vec![g[0].clone(), g[1].clone(), g[2].clone(), mid]).unwrap();
        assert_eq!(again.generators().len(), 3);
    }

    #[test]
    fn contains_examples() {
        let k = make_body(vec![
            vector(&[1.0, 0.1, 0.2]),
            vector(&[0.0, 1.0, 0.5]),
            vector(&[0.3, 0.2, 1.0]),
        ])
        .unwrap();
        for g in k.generators() {
            assert!(contains(&k, g));
        }
        assert!(!contains(&k, &-k.center()));
        let g = k.generators();
        assert!(contains(&k, &normalize(&(&g[0] + &g[1])).unwrap()));
        assert!(!contains(&k, &vector(&[-1.0, 0.0, 0.0])));
    }

    #[test]
    fn sph_project_examples() {
        let u = e(3, 2);
        let w = normalize(&vector(&[0.3, 0.4, 1.0])).unwrap();
        // body already inside S
        let circle = Subsphere::spanned_by(&[u.clone(), e(3, 0)]).unwrap();
        let k = segment(&u, &e(3, 0), -0.2, 0.5).unwrap();
        assert!(sph_project(&k, &circle).unwrap().body_eq(&k));
        // single ray
        let single = make_body(vec![w.clone()]).unwrap();
        let p = sph_project(&single, &circle).unwrap();
        let expected = normalize(&circle.project(&w)).unwrap();
        assert!((p.generators()[0].clone() - expected).norm() < 1e-15);
        // 0-sphere {u, -u}
        let zero = Subsphere::spanned_by(&[u.clone()]).unwrap();
        let tri = make_body(vec![w.clone(), vector(&[-0.2, 0.1, 1.0]), vector(&[0.0, -0.3, 1.0])]).unwrap();
        let p = sph_project(&tri, &zero).unwrap();
        assert_eq!(p.generators().len(), 1);
        assert!((p.generators()[0].clone() - &u).norm() < 1e-15);
        // a subsphere orthogonal to the body
        let off = Subsphere::spanned_by(&[e(3, 0), e(3, 1)]).unwrap();
        let up = make_body(vec![u.clone()]).unwrap();
        assert!(matches!(sph_project(&up, &off), Err(GeomError::Precondition(_))));
    }

    #[test]
    fn sph_support_examples() {
        let u = e(3, 2);
        let v = e(3, 0);
        let single = make_body(vec![u.clone()]).unwrap();
        assert_eq!(sph_support(&u, &single, &v).unwrap(), 0.0);
        let beta: f64 = 0.7;
        let w = make_body(vec![&u * beta.cos() + &v * beta.sin()]).unwrap();
        assert!((sph_support(&u, &w, &v).unwrap() - beta).abs() < 1e-15);
        assert!(sph_support(&u, &w, &u).is_err());
        let below = make_body(vec![-&u]).unwrap();
        assert!(sph_support(&u, &below, &v).is_err());
    }

    #[test]
    fn segment_examples() {
        let u = e(3, 2);
        let w = e(3, 1);
        let s = segment(&u, &w, 0.0, 0.0).unwrap();
        assert_eq!(s.generators(), &[u.clone()]);
        assert!(segment(&u, &w, 0.5, 0.2).is_err());
        assert!(segment(&u, &w, -FRAC_PI_2, 0.2).is_err());
        assert!(segment(&u, &u, 0.0, 0.1).is_err());
    }

    #[test]
    fn conv_union_examples() {
        let k = make_body(vec![vector(&[1.0, 0.2, 0.1]), vector(&[0.1, 1.0, 0.3])]).unwrap();
        let l = make_body(vec![vector(&[0.2, 0.1, 1.0])]).unwrap();
        assert!(conv_union(&k, &k).unwrap().body_eq(&k));
        assert_eq!(conv_union(&k, &l).unwrap().generators(), conv_union(&l, &k).unwrap().generators());
        let v = normalize(&vector(&[1.0, 1.0, 0.0])).unwrap();
        let w = normalize(&vector(&[0.0, 1.0, 1.0])).unwrap();
        let seg = conv_union(&make_body(vec![v.clone()]).unwrap(), &make_body(vec![w.clone()]).unwrap()).unwrap();
        assert_eq!(seg.generators().len(), 2);
        assert!(seg.contains(&normalize(&(&v + &w)).unwrap()));
        let anti = make_body(vec![-&v]).unwrap();
        assert!(matches!(
            conv_union(&make_body(vec![v]).unwrap(), &anti),
            Err(GeomError::ImproperPair)
        ));
    }

    #[test]
    fn neg_examples() {
        let k = make_body(vec![vector(&[1.0, 0.2, 0.1]), vector(&[0.1, 1.0, 0.3])]).unwrap();
        assert_eq!(neg(&neg(&k)), k);
        let u = e(3, 0);
        assert_eq!(neg(&make_body(vec![u.clone()]).unwrap()).generators(), &[-&u]);
        assert_eq!(neg(&k).center(), &-k.center());
    }

    #[test]
    fn delta_s_examples() {
        let k = make_body(vec![vector(&[1.0, 0.2, 0.1]), vector(&[0.1, 1.0, 0.3]), vector(&[0.2, 0.3, 1.0])]).unwrap();
        assert!(delta_s(&k, &k, 256).unwrap() < 1e-7);
        let v = normalize(&vector(&[1.0, 0.5, 0.0])).unwrap();
        let w = normalize(&vector(&[0.0, 0.5, 1.0])).unwrap();
        let d = delta_s(&make_body(vec![v.clone()]).unwrap(), &make_body(vec![w.clone()]).unwrap(), 8).unwrap();
        assert!((d - sph_dist(&v, &w).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn point_distance_beyond_right_angle_uses_fallback() {
        let k = make_body(vec![e(3, 2)]).unwrap();
        let x = -e(3, 2);
        assert!((point_distance(&x, &k, &[]) - PI).abs() < 1e-12);
    }

    #[test]
    fn gamma_u_examples() {
        let u = e(3, 2);
        let k = make_body(vec![vector(&[0.1, 0.2, 1.0]), vector(&[-0.3, 0.1, 1.0])]).unwrap();
        assert_eq!(gamma_u(&u, &k, &k, 64).unwrap(), 0.0);
        let w = normalize(&vector(&[0.4, -0.3, 1.0])).unwrap();
        let single_u = make_body(vec![u.clone()]).unwrap();
        let single_w = make_body(vec![w.clone()]).unwrap();
        let g = gamma_u(&u, &single_u, &single_w, 4096).unwrap();
        assert!((g - sph_dist(&u, &w).unwrap()).abs() < 1e-3);
        assert_eq!(
            gamma_u(&u, &k, &single_w, 100).unwrap(),
            gamma_u(&u, &single_w, &k, 100).unwrap()
        );
    }

    #[test]
    fn polar_of_orthant_is_negative_orthant() {
        let k = make_body(vec![e(3, 0), e(3, 1), e(3, 2)]).unwrap();
        let p = sph_polar(&k).unwrap();
        let expected = make_body(vec![-e(3, 0), -e(3, 1), -e(3, 2)]).unwrap();
        assert!(p.body_eq(&expected));
        assert_eq!(p.center(), &-k.center());
    }

    #[test]
    fn polar_is_involution_and_contains_minus_center() {
        let u = e(3, 2);
        let k = make_body(vec![
            normalize(&(&u + e(3, 0) * 0.3)).unwrap(),
            normalize(&(&u + e(3, 1) * 0.3)).unwrap(),
            normalize(&(&u - e(3, 0) * 0.2 - e(3, 1) * 0.25)).unwrap(),
        ])
        .unwrap();
        let p = sph_polar(&k).unwrap();
        assert!(p.contains(&-&u));
        assert!(p.generators().iter().all(|g| g.dot(&u) < 0.0));
        let pp = sph_polar(&p).unwrap();
        assert!(pp.body_eq(&k));
    }

    #[test]
    fn polar_errors() {
        let flat = make_body(vec![e(3, 0), e(3, 1)]).unwrap();
        assert!(matches!(sph_polar(&flat), Err(GeomError::Degenerate(_))));
        let big = make_body((0..5).map(|k| &e(5, k) + &e(5, 0) * 0.5).collect()).unwrap();
        assert!(matches!(sph_polar(&big), Err(GeomError::UnsupportedDim(5))));
    }
}
