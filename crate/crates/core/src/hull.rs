//! Extreme-point extraction for finite point sets (V-representation
//! canonicalization).
//!
//! Dimension 1 and 2 use exact sweeps. Higher dimensions use Clarkson's
//! output-sensitive scheme: each candidate is tested against the current
//! extreme set with a min-norm-point query, and every failed test yields a
//! separating direction whose maximizer over the full set is a new extreme
//! point.

use std::cmp::Ordering;

use qhull::Qh;

use crate::linalg::Vector;
use crate::wolfe::nearest_point;

/// From this many points on, qhull's facets pre-sort the points before the
/// min-norm queries.
const PREFILTER_MIN: usize = 64;

fn lex_cmp(a: &Vector, b: &Vector) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Sorts points lexicographically; the canonical vertex order.
pub fn sort_lex(points: &mut [Vector]) {
    points.sort_by(lex_cmp);
}

/// Extreme points of `conv(points)`, lexicographically sorted.
///
/// A point within `tol` (absolute) of the hull of the others is dropped.
pub fn extreme_points(points: &[Vector], tol: f64) -> Vec<Vector> {
    let mut out: Vec<Vector> = extreme_indices(points, tol)
        .into_iter()
        .map(|i| points[i].clone())
        .collect();
    sort_lex(&mut out);
    out
}

/// Indices of the extreme points of `conv(points)`. Near-duplicates keep
/// their first occurrence.
pub fn extreme_indices(points: &[Vector], tol: f64) -> Vec<usize> {
    if points.is_empty() {
        return Vec::new();
    }
    let dim = points[0].len();
    let mut idx = match dim {
        0 => vec![0],
        1 => extreme_1d(points, tol),
        2 => extreme_2d(points, tol),
        _ => {
            // flat input: work in coordinates of its affine hull
            let (origin, basis) = affine_frame(points, 1e-2 * tol);
            if basis.len() < dim {
                let coords: Vec<Vector> = points
                    .iter()
                    .map(|p| {
                        let d = p - &origin;
                        Vector::from_iterator(basis.len(), basis.iter().map(|b| b.dot(&d)))
                    })
                    .collect();
                return extreme_indices(&coords, tol);
            }
            extreme_clarkson(points, tol)
        }
    };
    idx.sort_unstable();
    idx
}

fn extreme_1d(points: &[Vector], tol: f64) -> Vec<usize> {
    // ties resolve to the first occurrence
    let lo = (0..points.len())
        .min_by(|&a, &b| points[a][0].total_cmp(&points[b][0]).then(a.cmp(&b)))
        .unwrap();
    let hi = (0..points.len())
        .max_by(|&a, &b| points[a][0].total_cmp(&points[b][0]).then(b.cmp(&a)))
        .unwrap();
    if points[hi][0] - points[lo][0] <= tol {
        vec![lo.min(hi)]
    } else {
        vec![lo, hi]
    }
}

fn extreme_2d(points: &[Vector], tol: f64) -> Vec<usize> {
    let at = |i: usize| [points[i][0], points[i][1]];
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a][0]
            .total_cmp(&points[b][0])
            .then(points[a][1].total_cmp(&points[b][1]))
            .then(a.cmp(&b))
    });
    let mut uniq: Vec<usize> = Vec::with_capacity(order.len());
    for i in order {
        let p = at(i);
        let dup = uniq.iter().rev().take_while(|&&j| p[0] - at(j)[0] <= tol).any(|&j| {
            let q = at(j);
            (p[0] - q[0]).hypot(p[1] - q[1]) <= tol
        });
        if !dup {
            uniq.push(i);
        }
    }
    if uniq.len() <= 2 {
        return uniq;
    }
    // keeps `b` only if it lies strictly left of o->a by more than tol
    let keeps = |o: usize, a: usize, b: usize| -> bool {
        let (o, a, b) = (at(o), at(a), at(b));
        let cross = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        let base = (b[0] - o[0]).hypot(b[1] - o[1]);
        cross > tol * base.max(f64::MIN_POSITIVE)
    };
    let mut lower: Vec<usize> = Vec::new();
    for &p in &uniq {
        while lower.len() >= 2 && !keeps(lower[lower.len() - 2], lower[lower.len() - 1], p) {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &p in uniq.iter().rev() {
        while upper.len() >= 2 && !keeps(upper[upper.len() - 2], upper[upper.len() - 1], p) {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut out: Vec<usize> = Vec::new();
    for i in lower {
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

/// First point and an orthonormal basis of the affine hull, grown by always
/// taking the point farthest from the current span. Residuals at or below
/// `flat_tol` count as zero.
fn affine_frame(points: &[Vector], flat_tol: f64) -> (Vector, Vec<Vector>) {
    let origin = points[0].clone();
    let dim = origin.len();
    let mut basis: Vec<Vector> = Vec::new();
    while basis.len() < dim {
        let mut best: Option<Vector> = None;
        let mut best_norm = flat_tol;
        for p in points {
            let mut r = p - &origin;
            for _ in 0..2 {
                for b in &basis {
                    let c = b.dot(&r);
                    r.axpy(-c, b, 1.0);
                }
            }
            let n = r.norm();
            if n > best_norm {
                best_norm = n;
                best = Some(r);
            }
        }
        match best {
            Some(r) => basis.push(r / best_norm),
            None => break,
        }
    }
    (origin, basis)
}

fn argmax_along(points: &[Vector], dir: &Vector) -> usize {
    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for (i, p) in points.iter().enumerate() {
        let v = dir.dot(p);
        if v > best_val || (v == best_val && lex_cmp(p, &points[best]) == Ordering::Greater) {
            best = i;
            best_val = v;
        }
    }
    best
}

fn extreme_clarkson(points: &[Vector], tol: f64) -> Vec<usize> {
    let dim = points[0].len();
    let mut seen = vec![false; points.len()];
    let mut chosen: Vec<usize> = Vec::new();
    let mut extreme: Vec<Vector> = Vec::new();
    let add = |i: usize, chosen: &mut Vec<usize>, extreme: &mut Vec<Vector>, seen: &mut Vec<bool>| {
        if !seen[i] {
            if extreme.iter().all(|e| e.metric_distance(&points[i]) > tol) {
                extreme.push(points[i].clone());
                chosen.push(i);
            }
            seen[i] = true;
        }
    };
    for k in 0..dim {
        for s in [1.0, -1.0] {
            let mut dir = Vector::zeros(dim);
            dir[k] = s;
            let i = argmax_along(points, &dir);
            add(i, &mut chosen, &mut extreme, &mut seen);
        }
    }
    if points.len() >= PREFILTER_MIN {
        if let Some(faces) = qhull_faces(points) {
            // flat copy: these loops are O(n * facets) and DVector dots are slow
            let flat: Vec<f64> = points.iter().flat_map(|p| p.iter().copied()).collect();
            let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
            // points deeper than tol inside every facet cannot be extreme,
            // and (the ball of that radius being inside) never beat a vertex
            // by more than tol along any direction
            let depth = (1e-9 * faces.scale.max(1.0)).max(tol * 1.01);
            // planes as rows (n, offset) of one flat array
            let planes: Vec<f64> = faces
                .planes
                .iter()
                .flat_map(|(n, off)| n.iter().copied().chain(std::iter::once(*off)))
                .collect();
            let interior: Vec<bool> = flat
                .chunks_exact(dim)
                .map(|p| planes.chunks_exact(dim + 1).all(|h| dot(&h[..dim], p) + h[dim] < -depth))
                .collect();
            let rest: Vec<usize> = (0..points.len()).filter(|&j| !interior[j]).collect();
            // a vertex beating the remaining points along the sum of its facet
            // normals by more than tol is extreme without a min-norm query
            for (i, dir) in &faces.vertex_dirs {
                let d = dir.as_slice();
                let own = dot(d, &flat[i * dim..(i + 1) * dim]);
                let margin = tol * dir.norm();
                let beats = rest
                    .iter()
                    .all(|&j| j == *i || own - dot(d, &flat[j * dim..(j + 1) * dim]) > margin);
                if beats {
                    add(*i, &mut chosen, &mut extreme, &mut seen);
                }
            }
            for (s, inside) in seen.iter_mut().zip(interior) {
                *s |= inside;
            }
        }
    }
    for i in 0..points.len() {
        if seen[i] {
            continue;
        }
        let p = &points[i];
        loop {
            let near = nearest_point(&extreme, p);
            if near.distance <= tol {
                break;
            }
            let dir = p - &near.point;
            let j = argmax_along(points, &dir);
            if j == i || seen[j] {
                add(i, &mut chosen, &mut extreme, &mut seen);
                break;
            }
            add(j, &mut chosen, &mut extreme, &mut seen);
        }
    }
    chosen
}

struct QhullFaces {
    /// Outward unit normal and offset, `n.x + offset <= 0` inside.
    planes: Vec<(Vector, f64)>,
    /// Hull vertex index and the sum of its incident facet normals.
    vertex_dirs: Vec<(usize, Vector)>,
    scale: f64,
}

/// Facets from qhull, used only as hints: every decision made from them is
/// re-checked against the points themselves. `None` when qhull fails (for
/// instance on flat input).
fn qhull_faces(points: &[Vector]) -> Option<QhullFaces> {
    let dim = points[0].len();
    let qh = Qh::builder()
        .compute(true)
        .build_from_iter(points.iter().map(|p| p.iter().copied().collect::<Vec<f64>>()))
        .ok()?;
    let mut planes = Vec::new();
    let mut dirs: Vec<Option<Vector>> = vec![None; points.len()];
    for f in qh.facets() {
        let n = Vector::from_column_slice(f.normal()?);
        for v in f.vertices()?.iter() {
            let i = v.index(&qh)?;
            match &mut dirs[i] {
                Some(d) => *d += &n,
                slot => *slot = Some(n.clone()),
            }
        }
        planes.push((n, f.offset()));
    }
    if planes.len() <= dim {
        return None;
    }
    let scale = points.iter().map(|p| p.amax()).fold(0.0, f64::max);
    let vertex_dirs = dirs.into_iter().enumerate().filter_map(|(i, d)| d.map(|d| (i, d))).collect();
    Some(QhullFaces { planes, vertex_dirs, scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    fn cube(dim: usize) -> Vec<Vector> {
        (0..(1usize << dim))
            .map(|m| Vector::from_fn(dim, |k, _| ((m >> k) & 1) as f64))
            .collect()
    }

    #[test]
    fn square_with_interior_points() {
        let mut pts = cube(2);
        pts.push(vector(&[0.5, 0.5]));
        pts.push(vector(&[0.5, 0.0]));
        pts.push(vector(&[1.0, 0.0]));
        let e = extreme_points(&pts, 1e-9);
        assert_eq!(e.len(), 4);
    }

    #[test]
    fn collinear_points_reduce_to_endpoints() {
        let pts: Vec<Vector> = (0..5).map(|k| vector(&[k as f64, 2.0 * k as f64])).collect();
        let e = extreme_points(&pts, 1e-9);
        assert_eq!(e, vec![vector(&[0.0, 0.0]), vector(&[4.0, 8.0])]);
    }

    #[test]
    fn cube_3d_and_4d() {
        for dim in [3, 4] {
            let mut pts = cube(dim);
            pts.push(Vector::from_element(dim, 0.5));
            pts.push(Vector::from_element(dim, 0.25));
            let e = extreme_points(&pts, 1e-9);
            assert_eq!(e.len(), 1 << dim);
        }
    }

    #[test]
    fn planar_set_in_3d() {
        let pts = vec![
            vector(&[0.0, 0.0, 1.0]),
            vector(&[1.0, 0.0, 1.0]),
            vector(&[0.0, 1.0, 1.0]),
            vector(&[0.2, 0.2, 1.0]),
        ];
        assert_eq!(extreme_points(&pts, 1e-9).len(), 3);
    }

    #[test]
    fn singleton_and_duplicates() {
        let pts = vec![vector(&[1.0, 2.0, 3.0]); 4];
        assert_eq!(extreme_points(&pts, 1e-9).len(), 1);
        let pts2 = vec![vector(&[1.0, 2.0]); 3];
        assert_eq!(extreme_points(&pts2, 1e-9).len(), 1);
    }

    // oracle: a point is extreme iff it is farther than tol from the hull of
    // the others (min-norm point over all remaining points)
    fn brute_extreme(pts: &[Vector], tol: f64) -> Vec<usize> {
        (0..pts.len())
            .filter(|&i| {
                let others: Vec<Vector> = (0..pts.len()).filter(|&j| j != i).map(|j| pts[j].clone()).collect();
                nearest_point(&others, &pts[i]).distance > tol
            })
            .collect()
    }

    #[test]
    fn large_sets_match_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for dim in [3, 4] {
            // a sphere sample (all extreme) plus a cloud inside it
            let mut pts: Vec<Vector> = (0..60).map(|_| crate::linalg::random_unit(&mut rng, dim)).collect();
            for _ in 0..100 {
                pts.push(crate::linalg::random_unit(&mut rng, dim) * 0.9);
            }
            assert_eq!(extreme_indices(&pts, 1e-9), brute_extreme(&pts, 1e-9));
        }
    }

    #[test]
    fn large_flat_set_in_3d() {
        // 100 points of a tilted plane: hull of a 2D cloud
        let (a, b) = (vector(&[1.0, 2.0, 0.5]) / 2.29128784747792, vector(&[-2.0, 1.0, 0.0]) / 5f64.sqrt());
        let pts: Vec<Vector> = (0..100)
            .map(|k| {
                let t = k as f64 * 0.7;
                let r = if k % 2 == 0 { 1.0 } else { 0.5 };
                &a * (r * t.cos()) + &b * (r * t.sin()) + vector(&[0.0, 0.0, 3.0])
            })
            .collect();
        let got = extreme_indices(&pts, 1e-9);
        assert_eq!(got, brute_extreme(&pts, 1e-9));
        assert!(got.iter().all(|i| i % 2 == 0));
    }
}
