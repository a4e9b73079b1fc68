//! Wolfe's min-norm-point algorithm over a finite point set.
//!
//! Finds the point of `conv(points)` nearest to a target. The active set
//! ("corral") is kept affinely independent; each minor cycle moves toward the
//! affine minimizer of the corral and drops points whose weight reaches zero.

use nalgebra::{DMatrix, DVector};

use crate::linalg::Vector;

/// Relative tolerance on the Wolfe criterion `|y|^2 - y.q_j`.
pub const WOLFE_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct NearestPoint {
    pub point: Vector,
    /// Convex weights on the input points (sparse: index, weight).
    pub weights: Vec<(usize, f64)>,
    pub distance: f64,
}

/// Nearest point of `conv(points)` to `target`.
///
/// Panics if `points` is empty or dimensions disagree; callers validate first.
pub fn nearest_point(points: &[Vector], target: &Vector) -> NearestPoint {
    assert!(!points.is_empty(), "nearest_point on empty set");
    let shifted: Vec<Vector> = points.iter().map(|p| p - target).collect();
    let (y, weights) = min_norm(&shifted);
    let distance = y.norm();
    NearestPoint {
        point: y + target,
        weights,
        distance,
    }
}

/// Min-norm point of `conv(q)`, returned with its convex weights.
pub fn min_norm(q: &[Vector]) -> (Vector, Vec<(usize, f64)>) {
    let dim = q[0].len();
    let scale = q.iter().map(|p| p.norm_squared()).fold(0.0, f64::max);
    if scale == 0.0 {
        return (DVector::zeros(dim), vec![(0, 1.0)]);
    }
    let crit_tol = WOLFE_TOL * scale;
    let zero_tol = 1e-28 * scale;

    let start = (0..q.len())
        .min_by(|&a, &b| q[a].norm_squared().total_cmp(&q[b].norm_squared()))
        .unwrap();
    let mut corral: Vec<usize> = vec![start];
    let mut lambda: Vec<f64> = vec![1.0];
    let mut y = q[start].clone();

    let max_major = 100 + 20 * (dim + q.len());
    for _ in 0..max_major {
        let yy = y.norm_squared();
        if yy <= zero_tol {
            break;
        }
        let (j, yq) = (0..q.len())
            .map(|i| (i, y.dot(&q[i])))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if yy - yq <= crit_tol || corral.contains(&j) || corral.len() > dim {
            break;
        }
        corral.push(j);
        lambda.push(0.0);

        // minor cycles
        loop {
            let alpha = match affine_minimizer(q, &corral, scale) {
                Some(a) => a,
                None => {
                    // numerically dependent corral: back out the newest point
                    corral.pop();
                    lambda.pop();
                    break;
                }
            };
            if alpha.iter().all(|&a| a > 1e-15) {
                lambda = alpha;
                break;
            }
            let mut theta = 1.0f64;
            for (l, a) in lambda.iter().zip(&alpha) {
                if *a <= 1e-15 {
                    let t = l / (l - a);
                    if t < theta {
                        theta = t;
                    }
                }
            }
            let theta = theta.clamp(0.0, 1.0);
            for (l, a) in lambda.iter_mut().zip(&alpha) {
                *l = theta * a + (1.0 - theta) * *l;
            }
            let mut k = 0;
            let mut removed = false;
            while k < corral.len() {
                if lambda[k] <= 1e-15 {
                    corral.swap_remove(k);
                    lambda.swap_remove(k);
                    removed = true;
                } else {
                    k += 1;
                }
            }
            if !removed {
                // remove the weight that hit the boundary
                let idx = lambda
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.total_cmp(b.1))
                    .map(|(i, _)| i)
                    .unwrap();
                corral.swap_remove(idx);
                lambda.swap_remove(idx);
            }
            let total: f64 = lambda.iter().sum();
            lambda.iter_mut().for_each(|l| *l /= total);
            if corral.len() == 1 {
                lambda[0] = 1.0;
                break;
            }
        }
        let next = combine(q, &corral, &lambda, dim);
        if next.norm_squared() > yy * (1.0 + 1e-15) + zero_tol {
            // rounding made no progress; keep the better point and stop
            break;
        }
        y = next;
    }
    let weights = corral.into_iter().zip(lambda).collect();
    (y, weights)
}

fn combine(q: &[Vector], corral: &[usize], lambda: &[f64], dim: usize) -> Vector {
    let mut y = DVector::zeros(dim);
    for (&i, &l) in corral.iter().zip(lambda) {
        y.axpy(l, &q[i], 1.0);
    }
    y
}

/// Weights `alpha` (summing to one) minimizing `|sum alpha_i q_i|` over the
/// affine hull of the corral.
fn affine_minimizer(q: &[Vector], corral: &[usize], scale: f64) -> Option<Vec<f64>> {
    let k = corral.len();
    let mut g = DMatrix::from_element(k, k, scale);
    for a in 0..k {
        for b in 0..=a {
            let v = q[corral[a]].dot(&q[corral[b]]) + scale;
            g[(a, b)] = v;
            g[(b, a)] = v;
        }
    }
    let ones = DVector::from_element(k, 1.0);
    let z = match g.clone().cholesky() {
        Some(ch) => ch.solve(&ones),
        None => g.lu().solve(&ones)?,
    };
    let s: f64 = z.iter().sum();
    if !s.is_finite() || s.abs() < 1e-300 {
        return None;
    }
    Some(z.iter().map(|v| v / s).collect())
}
