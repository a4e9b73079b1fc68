//! Compact convex bodies in R^n as vertex lists, and the binary operations on
//! them: Minkowski sum, M-addition, projection, linear images, Hausdorff
//! distance.
//!
//! Support values are exact (a max over vertices). Every constructor
//! canonicalizes to extreme points, so two bodies compare by vertex
//! containment rather than by list equality.

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::error::{check_dim, GeomError, Result};
use crate::hull::extreme_points;
use crate::linalg::{direction_grid, normalize, orthogonal_complement, Vector, UNIT_TOL};
use crate::star::RadialMap;
use crate::wolfe::nearest_point;

/// Relative tolerance used when dropping non-extreme vertices.
pub const CANON_TOL: f64 = 1e-10;

/// Slack for body equality (two-sided vertex containment).
pub const BODY_EQ_TOL: f64 = 1e-9;

fn canon_tol(points: &[Vector]) -> f64 {
    let scale = points.iter().map(|p| p.amax()).fold(1.0, f64::max);
    CANON_TOL * scale
}

/// A convex polytope given by its extreme points.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolytope {
    dim: usize,
    vertices: Vec<Vector>,
}

impl ConvexPolytope {
    /// Convex hull of `points`, reduced to extreme points.
    pub fn new(points: Vec<Vector>) -> Result<Self> {
        let first = points.first().ok_or(GeomError::Empty)?;
        let dim = first.len();
        for p in &points {
            check_dim(dim, p.len())?;
            if p.iter().any(|c| !c.is_finite()) {
                return Err(GeomError::InvalidParam("non-finite coordinate".into()));
            }
        }
        let tol = canon_tol(&points);
        Ok(Self {
            dim,
            vertices: extreme_points(&points, tol),
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| Vector::from_column_slice(r)).collect())
    }

    pub fn point(p: Vector) -> Self {
        Self {
            dim: p.len(),
            vertices: vec![p],
        }
    }

    /// The unit cube `[0,1]^dim`.
    pub fn unit_cube(dim: usize) -> Self {
        let pts = (0..(1usize << dim))
            .map(|m| Vector::from_fn(dim, |k, _| ((m >> k) & 1) as f64))
            .collect();
        Self::new(pts).expect("cube is nonempty")
    }

    /// `conv{+-e_i}`.
    pub fn cross_polytope(dim: usize) -> Self {
        let mut pts = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            for s in [1.0, -1.0] {
                let mut e = Vector::zeros(dim);
                e[k] = s;
                pts.push(e);
            }
        }
        Self::new(pts).expect("nonempty")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn support(&self, x: &Vector) -> Result<f64> {
        check_dim(self.dim, x.len())?;
        Ok(self.support_unchecked(x))
    }

    /// `max_v x.v`; the caller guarantees matching dimensions.
    pub fn support_unchecked(&self, x: &Vector) -> f64 {
        self.vertices
            .iter()
            .map(|v| x.dot(v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.vertices.iter().map(|v| -v).collect()).expect("nonempty")
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.vertices.iter().map(|v| v * s).collect()).expect("nonempty")
    }

    pub fn translate(&self, t: &Vector) -> Result<Self> {
        check_dim(self.dim, t.len())?;
        Self::new(self.vertices.iter().map(|v| v + t).collect())
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max((a - b).norm());
            }
        }
        d
    }

    /// Euclidean distance from `x` to the body.
    pub fn distance(&self, x: &Vector) -> Result<f64> {
        check_dim(self.dim, x.len())?;
        Ok(nearest_point(&self.vertices, x).distance)
    }

    pub fn contains(&self, x: &Vector, tol: f64) -> Result<bool> {
        Ok(self.distance(x)? <= tol)
    }

    /// Two-sided containment: every vertex of each body lies within `tol`
    /// of the other.
    pub fn body_eq(&self, other: &Self, tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let within = |a: &Self, b: &Self| {
            a.vertices
                .iter()
                .all(|v| nearest_point(&b.vertices, v).distance <= tol)
        };
        within(self, other) && within(other, self)
    }
}

impl fmt::Display for ConvexPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", v.as_slice())?;
        }
        write!(f, "}}")
    }
}

pub fn support(k: &ConvexPolytope, x: &Vector) -> Result<f64> {
    k.support(x)
}

pub fn minkowski_sum(k: &ConvexPolytope, l: &ConvexPolytope) -> Result<ConvexPolytope> {
    check_dim(k.dim, l.dim)?;
    let mut pts = Vec::with_capacity(k.vertices.len() * l.vertices.len());
    for v in &k.vertices {
        for w in &l.vertices {
            pts.push(v + w);
        }
    }
    ConvexPolytope::new(pts)
}

/// A convex polygon `M` contained in one closed quadrant of R^2.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadrantPolytope {
    vertices: Vec<[f64; 2]>,
    signs: [f64; 2],
}

impl QuadrantPolytope {
    /// Infers the quadrant from the vertices. Fails if they straddle an axis.
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(GeomError::Empty);
        }
        let sign_of = |k: usize| -> Result<f64> {
            let pos = vertices.iter().all(|v| v[k] >= 0.0);
            let neg = vertices.iter().all(|v| v[k] <= 0.0);
            match (pos, neg) {
                (true, _) => Ok(1.0),
                (false, true) => Ok(-1.0),
                _ => Err(GeomError::InvalidParam(
                    "combining set is not contained in a single quadrant".into(),
                )),
            }
        };
        let signs = [sign_of(0)?, sign_of(1)?];
        Self::with_signs(vertices, signs)
    }

    pub fn with_signs(vertices: Vec<[f64; 2]>, signs: [f64; 2]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(GeomError::Empty);
        }
        if signs.iter().any(|s| *s != 1.0 && *s != -1.0) {
            return Err(GeomError::InvalidParam("signs must be +1 or -1".into()));
        }
        for v in &vertices {
            if !(v[0].is_finite() && v[1].is_finite()) {
                return Err(GeomError::InvalidParam("non-finite vertex".into()));
            }
            if signs[0] * v[0] < 0.0 || signs[1] * v[1] < 0.0 {
                return Err(GeomError::InvalidParam(format!(
                    "vertex {v:?} outside quadrant {signs:?}"
                )));
            }
        }
        let pts: Vec<Vector> = vertices.iter().map(|v| Vector::from_column_slice(v)).collect();
        let tol = canon_tol(&pts);
        let vertices = extreme_points(&pts, tol)
            .into_iter()
            .map(|p| [p[0], p[1]])
            .collect();
        Ok(Self { vertices, signs })
    }

    /// `M = {(1,1)}`: Minkowski addition.
    pub fn minkowski() -> Self {
        Self::new(vec![[1.0, 1.0]]).expect("valid")
    }

    /// `M = conv{(1,0),(0,1)}`: convex hull of the union.
    pub fn hull() -> Self {
        Self::new(vec![[1.0, 0.0], [0.0, 1.0]]).expect("valid")
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn signs(&self) -> [f64; 2] {
        self.signs
    }

    /// Reflection `M+ = {(e1 a, e2 b)}` into the closed positive quadrant.
    pub fn reflected(&self) -> Vec<[f64; 2]> {
        self.vertices
            .iter()
            .map(|v| [self.signs[0] * v[0], self.signs[1] * v[1]])
            .collect()
    }

    /// Support function of `M+` at `(s, t)`.
    pub fn reflected_support(&self, s: f64, t: f64) -> f64 {
        self.reflected()
            .iter()
            .map(|v| v[0] * s + v[1] * t)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// True if `M` equals the given vertex set up to `tol`.
    pub fn same_as(&self, other: &Self, tol: f64) -> bool {
        let to_poly = |m: &Self| {
            ConvexPolytope::new(
                m.vertices
                    .iter()
                    .map(|v| Vector::from_column_slice(v))
                    .collect(),
            )
            .expect("nonempty")
        };
        to_poly(self).body_eq(&to_poly(other), tol)
    }
}

fn signed_operands(
    m: &QuadrantPolytope,
    k: &ConvexPolytope,
    l: &ConvexPolytope,
) -> Result<(ConvexPolytope, ConvexPolytope)> {
    check_dim(k.dim, l.dim)?;
    let [e1, e2] = m.signs;
    let kk = if e1 < 0.0 { k.neg() } else { k.clone() };
    let ll = if e2 < 0.0 { l.neg() } else { l.clone() };
    Ok((kk, ll))
}

/// M-addition `K (+)_M L = conv U_{(a,b) in M} (aK + bL)`, computed on vertices.
pub fn m_add(m: &QuadrantPolytope, k: &ConvexPolytope, l: &ConvexPolytope) -> Result<ConvexPolytope> {
    let (kk, ll) = signed_operands(m, k, l)?;
    let plus = m.reflected();
    let mut pts = Vec::with_capacity(plus.len() * kk.vertices.len() * ll.vertices.len());
    for [a, b] in &plus {
        for v in &kk.vertices {
            for w in &ll.vertices {
                pts.push(v * *a + w * *b);
            }
        }
    }
    ConvexPolytope::new(pts)
}

/// Support of `K (+)_M L` at `x` through the support of `M+` at
/// `(h(e1 K, x), h(e2 L, x))`.
pub fn m_support(
    m: &QuadrantPolytope,
    k: &ConvexPolytope,
    l: &ConvexPolytope,
    x: &Vector,
) -> Result<f64> {
    check_dim(k.dim, l.dim)?;
    check_dim(k.dim, x.len())?;
    let [e1, e2] = m.signs;
    let hk = k.support_unchecked(&(x * e1));
    let hl = l.support_unchecked(&(x * e2));
    Ok(m.reflected_support(hk, hl))
}

/// Point on the curve `a^q + b^q = 1` (q = p/(p-1)) at polar angle `theta`.
fn lp_curve_point(q: f64, theta: f64) -> [f64; 2] {
    let (s, c) = theta.sin_cos();
    let c = c.max(0.0);
    let s = s.max(0.0);
    let r = (c.powf(q) + s.powf(q)).powf(-1.0 / q);
    [r * c, r * s]
}

fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let d = [b[0] - a[0], b[1] - a[1]];
    let len2 = d[0] * d[0] + d[1] * d[1];
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p[0] - a[0] - t * d[0]).hypot(p[1] - a[1] - t * d[1])
}

/// Inner polygonal approximation of the L_p combining set
/// `{(a,b) in [0,1]^2 : a^q + b^q <= 1}`, `q = p/(p-1)`, within Hausdorff
/// distance `tol`.
pub fn lp_m_set(p: f64, tol: f64) -> Result<QuadrantPolytope> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(GeomError::InvalidParam(format!(
            "p must be finite and > 1 (got {p}); use QuadrantPolytope::minkowski for p = 1"
        )));
    }
    if !(tol > 0.0) {
        return Err(GeomError::InvalidParam(format!("tol must be > 0 (got {tol})")));
    }
    let q = p / (p - 1.0);
    let half_pi = std::f64::consts::FRAC_PI_2;
    // adaptive bisection on the polar angle; a chord is accepted once every
    // probe of its arc lies within tol/2 of it
    let mut stack = vec![(0.0, half_pi)];
    let mut accepted: Vec<f64> = vec![half_pi];
    while let Some((t0, t1)) = stack.pop() {
        let a = lp_curve_point(q, t0);
        let b = lp_curve_point(q, t1);
        let worst = (1..16)
            .map(|k| {
                let t = t0 + (t1 - t0) * k as f64 / 16.0;
                point_segment_distance(lp_curve_point(q, t), a, b)
            })
            .fold(0.0, f64::max);
        if worst <= 0.5 * tol || t1 - t0 < 1e-12 {
            accepted.push(t0);
        } else {
            let mid = 0.5 * (t0 + t1);
            stack.push((mid, t1));
            stack.push((t0, mid));
        }
    }
    accepted.sort_by(f64::total_cmp);
    accepted.dedup();
    let mut verts: Vec<[f64; 2]> = accepted.iter().map(|&t| lp_curve_point(q, t)).collect();
    verts.push([0.0, 0.0]);
    QuadrantPolytope::with_signs(verts, [1.0, 1.0])
}

/// The true support functional of the L_p combining set at `(s, t)`.
pub fn lp_set_support(p: f64, s: f64, t: f64) -> f64 {
    let (s, t) = (s.max(0.0), t.max(0.0));
    (s.powf(p) + t.powf(p)).powf(1.0 / p)
}

/// Orthonormal basis of a linear subspace of R^ambient_dim.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl SubspaceBasis {
    pub fn new(ambient_dim: usize, basis: Vec<Vector>) -> Result<Self> {
        if basis.len() > ambient_dim {
            return Err(GeomError::InvalidBasis(format!(
                "{} vectors in R^{ambient_dim}",
                basis.len()
            )));
        }
        for (i, b) in basis.iter().enumerate() {
            check_dim(ambient_dim, b.len())?;
            if (b.norm() - 1.0).abs() > UNIT_TOL {
                return Err(GeomError::InvalidBasis(format!(
                    "vector {i} has norm {}",
                    b.norm()
                )));
            }
            for (j, c) in basis[..i].iter().enumerate() {
                if b.dot(c).abs() > UNIT_TOL {
                    return Err(GeomError::InvalidBasis(format!(
                        "vectors {j} and {i} not orthogonal"
                    )));
                }
            }
        }
        Ok(Self { ambient_dim, basis })
    }

    /// Orthonormalizes `span(vectors)`; dependent vectors are dropped.
    pub fn spanned_by(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            check_dim(ambient_dim, v.len())?;
        }
        Self::new(ambient_dim, crate::linalg::gram_schmidt(vectors.iter(), 1e-10))
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|k| crate::linalg::basis_vector(ambient_dim, k))
            .collect();
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates of the orthogonal projection of `x` in this basis.
    pub fn coords(&self, x: &Vector) -> Vector {
        Vector::from_iterator(self.basis.len(), self.basis.iter().map(|b| b.dot(x)))
    }

    pub fn embed(&self, c: &Vector) -> Vector {
        let mut x = Vector::zeros(self.ambient_dim);
        for (b, ci) in self.basis.iter().zip(c.iter()) {
            x.axpy(*ci, b, 1.0);
        }
        x
    }

    pub fn complement(&self) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            basis: orthogonal_complement(&self.basis, self.ambient_dim),
        }
    }
}

/// Orthogonal projection onto `span(V)`, in V-coordinates.
pub fn project(k: &ConvexPolytope, v: &SubspaceBasis) -> Result<ConvexPolytope> {
    check_dim(v.ambient_dim, k.dim)?;
    if v.dim() == 0 {
        return Ok(ConvexPolytope::point(Vector::zeros(0)));
    }
    ConvexPolytope::new(k.vertices.iter().map(|x| v.coords(x)).collect())
}

pub fn gl_apply(a: &DMatrix<f64>, k: &ConvexPolytope) -> Result<ConvexPolytope> {
    if a.nrows() != a.ncols() {
        return Err(GeomError::InvalidParam("matrix is not square".into()));
    }
    check_dim(k.dim, a.ncols())?;
    let det = a.determinant();
    if !(det.abs() > 1e-12) {
        return Err(GeomError::Singular { det });
    }
    ConvexPolytope::new(k.vertices.iter().map(|v| a * v).collect())
}

/// Nearest point of `K` to `x`.
pub fn min_norm_point(x: &Vector, k: &ConvexPolytope) -> Result<Vector> {
    check_dim(k.dim, x.len())?;
    Ok(nearest_point(&k.vertices, x).point)
}

/// Exact Hausdorff distance. The distance to a convex set is convex, so each
/// directed part is attained at a vertex.
pub fn hausdorff(k: &ConvexPolytope, l: &ConvexPolytope) -> Result<f64> {
    check_dim(k.dim, l.dim)?;
    let directed = |a: &ConvexPolytope, b: &ConvexPolytope| {
        a.vertices
            .iter()
            .map(|v| nearest_point(&b.vertices, v).distance)
            .fold(0.0, f64::max)
    };
    Ok(directed(k, l).max(directed(l, k)))
}

/// Sup-norm of the support difference over the given unit directions.
pub fn sampled_support_gap(k: &ConvexPolytope, l: &ConvexPolytope, dirs: &[Vector]) -> Result<f64> {
    check_dim(k.dim, l.dim)?;
    Ok(dirs
        .iter()
        .map(|d| (k.support_unchecked(d) - l.support_unchecked(d)).abs())
        .fold(0.0, f64::max))
}

/// Number of grid directions used by the interior-origin test.
pub const INTERIOR_GRID: usize = 4096;
pub const INTERIOR_TOL: f64 = 1e-9;

/// Candidate facet normals built from vertex differences (dims 1 to 3).
fn facet_normal_candidates(k: &ConvexPolytope) -> Vec<Vector> {
    let v = &k.vertices;
    let mut out = Vec::new();
    match k.dim {
        1 => {
            out.push(Vector::from_element(1, 1.0));
            out.push(Vector::from_element(1, -1.0));
        }
        2 => {
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    let d = &v[j] - &v[i];
                    if let Some(n) = normalize(&Vector::from_column_slice(&[-d[1], d[0]])) {
                        out.push(-&n);
                        out.push(n);
                    }
                }
            }
        }
        3 if v.len() <= 40 => {
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    for l in j + 1..v.len() {
                        let a = &v[j] - &v[i];
                        let b = &v[l] - &v[i];
                        let c = Vector::from_column_slice(&[
                            a[1] * b[2] - a[2] * b[1],
                            a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0],
                        ]);
                        if let Some(n) = normalize(&c) {
                            out.push(-&n);
                            out.push(n);
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// Smallest support value over the interior-test directions.
pub fn min_support_certificate(k: &ConvexPolytope) -> f64 {
    direction_grid(k.dim, INTERIOR_GRID)
        .iter()
        .chain(facet_normal_candidates(k).iter())
        .map(|d| k.support_unchecked(d))
        .fold(f64::INFINITY, f64::min)
}

/// Radial function of the polar body, `v -> 1/h(K,v)`.
pub fn polar_radial(k: &ConvexPolytope) -> Result<RadialMap> {
    let value = min_support_certificate(k);
    if !(value >= INTERIOR_TOL) {
        return Err(GeomError::OriginNotInterior { value });
    }
    let body = k.clone();
    Ok(RadialMap::from_fn(k.dim, move |v| 1.0 / body.support_unchecked(v)))
}

/// Support functional of a nonempty closed convex `M` in R^4, possibly
/// infinite outside its domain.
#[derive(Clone)]
pub struct SupportFun4 {
    label: String,
    eval: Arc<dyn Fn([f64; 4]) -> f64 + Send + Sync>,
}

impl fmt::Debug for SupportFun4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SupportFun4").field("label", &self.label).finish()
    }
}

impl SupportFun4 {
    pub fn from_fn<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn([f64; 4]) -> f64 + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            eval: Arc::new(f),
        }
    }

    /// Support functional of a finite point set.
    pub fn from_points(points: Vec<[f64; 4]>) -> Result<Self> {
        if points.is_empty() {
            return Err(GeomError::Empty);
        }
        let label = format!("points{points:?}");
        Ok(Self::from_fn(label, move |z| {
            points
                .iter()
                .map(|p| p.iter().zip(z.iter()).map(|(a, b)| a * b).sum::<f64>())
                .fold(f64::NEG_INFINITY, f64::max)
        }))
    }

    /// The set E whose functional yields the support of `conv(K u L)`.
    pub fn e_set() -> Self {
        Self::from_fn("E", |[a, b, c, d]| {
            crate::sphere_ops::h_e(a, b, c, d).unwrap_or(f64::INFINITY)
        })
    }

    /// Functional of the L_p sum, `|(max(b,0), max(d,0))|_p`.
    pub fn lp(p: f64) -> Result<Self> {
        if !(p >= 1.0) {
            return Err(GeomError::InvalidParam(format!("p must be >= 1 (got {p})")));
        }
        Ok(Self::from_fn(format!("lp({p})"), move |[_, b, _, d]| {
            lp_set_support(p, b, d)
        }))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, z: [f64; 4]) -> Result<f64> {
        let v = (self.eval)(z);
        if v == f64::INFINITY {
            return Err(GeomError::Domain);
        }
        Ok(v)
    }

    /// Spot-checks positive homogeneity and subadditivity on the given pairs,
    /// skipping points where the functional is infinite.
    pub fn spot_check(&self, pairs: &[([f64; 4], [f64; 4], f64)], tol: f64) -> bool {
        pairs.iter().all(|(x, y, s)| {
            let (Ok(fx), Ok(fy)) = (self.eval(*x), self.eval(*y)) else {
                return true;
            };
            let sum = [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]];
            let scaled = x.map(|c| c * s);
            let sub = self.eval(sum).map_or(false, |f| f <= fx + fy + tol * (1.0 + fx.abs() + fy.abs()));
            let hom = self
                .eval(scaled)
                .map_or(false, |f| (f - s * fx).abs() <= tol * (1.0 + (s * fx).abs()));
            sub && hom
        })
    }
}

/// Value of the binary operation induced by `Mbar` at direction `x`:
/// `h_Mbar(h(-K,x), h(K,x), h(-L,x), h(L,x))`.
pub fn m4_op(mbar: &SupportFun4, k: &ConvexPolytope, l: &ConvexPolytope, x: &Vector) -> Result<f64> {
    check_dim(k.dim, l.dim)?;
    check_dim(k.dim, x.len())?;
    let nx = -x;
    let z = [
        k.support_unchecked(&nx),
        k.support_unchecked(x),
        l.support_unchecked(&nx),
        l.support_unchecked(x),
    ];
    mbar.eval(z)
}
