//! Lawson-Hanson nonnegative least squares, used for projection onto a
//! finitely generated cone.

use nalgebra::{DMatrix, DVector};

use crate::linalg::Vector;

/// Solves `min |A mu - b|` subject to `mu >= 0`.
pub fn nnls(a: &DMatrix<f64>, b: &Vector) -> Vector {
    let (_, n) = a.shape();
    let mut x = DVector::zeros(n);
    let mut passive = vec![false; n];
    let tol = 1e-13 * a.norm().max(1.0) * b.norm().max(1.0);

    for _ in 0..(3 * n + 30) {
        let w = a.transpose() * (b - a * &x);
        let candidate = (0..n)
            .filter(|&j| !passive[j] && w[j] > tol)
            .max_by(|&i, &j| w[i].total_cmp(&w[j]));
        let Some(t) = candidate else { break };
        passive[t] = true;

        for _ in 0..(3 * n + 30) {
            let idx: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
            let z_p = match least_squares(a, b, &idx) {
                Some(z) => z,
                None => {
                    passive[t] = false;
                    break;
                }
            };
            if z_p.iter().all(|&v| v > 0.0) {
                x.fill(0.0);
                for (k, &j) in idx.iter().enumerate() {
                    x[j] = z_p[k];
                }
                break;
            }
            let mut alpha = f64::INFINITY;
            for (k, &j) in idx.iter().enumerate() {
                if z_p[k] <= 0.0 {
                    let denom = x[j] - z_p[k];
                    if denom > 0.0 {
                        alpha = alpha.min(x[j] / denom);
                    }
                }
            }
            if !alpha.is_finite() {
                alpha = 0.0;
            }
            for (k, &j) in idx.iter().enumerate() {
                x[j] += alpha * (z_p[k] - x[j]);
            }
            for &j in &idx {
                if x[j] <= 1e-15 {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
        }
    }
    x
}

fn least_squares(a: &DMatrix<f64>, b: &Vector, idx: &[usize]) -> Option<Vector> {
    if idx.is_empty() {
        return Some(DVector::zeros(0));
    }
    let sub = DMatrix::from_fn(a.nrows(), idx.len(), |i, k| a[(i, idx[k])]);
    let svd = sub.svd(true, true);
    svd.solve(b, 1e-13).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    #[test]
    fn projects_onto_orthant() {
        let a = DMatrix::identity(3, 3);
        let b = vector(&[1.0, -2.0, 3.0]);
        let x = nnls(&a, &b);
        assert!((x - vector(&[1.0, 0.0, 3.0])).norm() < 1e-12);
    }

    #[test]
    fn interior_point_is_exact() {
        let a = DMatrix::from_column_slice(2, 3, &[1.0, 0.0, 1.0, 1.0, 0.0, 1.0]);
        let b = vector(&[0.5, 2.0]);
        let x = nnls(&a, &b);
        assert!(x.iter().all(|&v| v >= 0.0));
        assert!((&a * &x - &b).norm() < 1e-12);
    }
}
