//! Small dense linear-algebra helpers shared by the body kernels.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::error::{GeomError, Result};

pub type Vector = DVector<f64>;

/// Tolerance for unit norms and orthogonality.
pub const UNIT_TOL: f64 = 1e-12;

pub fn vector(xs: &[f64]) -> Vector {
    DVector::from_column_slice(xs)
}

/// `k`-th standard basis vector of R^dim.
pub fn basis_vector(dim: usize, k: usize) -> Vector {
    let mut e = DVector::zeros(dim);
    e[k] = 1.0;
    e
}

pub fn normalize(v: &Vector) -> Option<Vector> {
    let n = v.norm();
    if n > 0.0 && n.is_finite() {
        Some(v / n)
    } else {
        None
    }
}

pub fn check_unit(v: &Vector) -> Result<()> {
    let norm = v.norm();
    if (norm - 1.0).abs() > UNIT_TOL * 10.0 {
        return Err(GeomError::NotUnit { norm });
    }
    Ok(())
}

/// Modified Gram-Schmidt. Vectors whose residual norm falls below `drop_tol`
/// are skipped, so the result spans the same space with no dependent members.
pub fn gram_schmidt<'a, I>(vectors: I, drop_tol: f64) -> Vec<Vector>
where
    I: IntoIterator<Item = &'a Vector>,
{
    let mut out: Vec<Vector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        // two passes keep orthogonality at the 1e-15 level
        for _ in 0..2 {
            for q in &out {
                let c = q.dot(&w);
                w.axpy(-c, q, 1.0);
            }
        }
        let n = w.norm();
        if n > drop_tol {
            out.push(w / n);
        }
    }
    out
}

/// Orthonormal basis of the orthogonal complement of `span(vectors)` in R^dim,
/// seeded from the standard basis.
pub fn orthogonal_complement(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    let span = gram_schmidt(vectors.iter(), 1e-10);
    let seeds: Vec<Vector> = (0..dim).map(|k| basis_vector(dim, k)).collect();
    let all = gram_schmidt(span.iter().chain(seeds.iter()), 1e-10);
    all.into_iter().skip(span.len()).collect()
}

/// Deterministic quasi-uniform unit directions in R^dim.
///
/// dim 1: {+1, -1}; dim 2: equally spaced angles; dim 3: Fibonacci lattice;
/// higher: normalized Gaussians from a fixed-seed ChaCha8 stream.
pub fn direction_grid(dim: usize, count: usize) -> Vec<Vector> {
    match dim {
        0 => Vec::new(),
        1 => vec![vector(&[1.0]), vector(&[-1.0])],
        2 => (0..count)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / count as f64;
                vector(&[t.cos(), t.sin()])
            })
            .collect(),
        3 => {
            let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
            (0..count)
                .map(|k| {
                    let z = 1.0 - 2.0 * (k as f64 + 0.5) / count as f64;
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let phi = golden * k as f64;
                    vector(&[r * phi.cos(), r * phi.sin(), z])
                })
                .collect()
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d1e5);
            (0..count).map(|_| random_unit(&mut rng, dim)).collect()
        }
    }
}

/// Standard normal sample via Box-Muller.
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

pub fn random_unit<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vector {
    loop {
        let v = DVector::from_fn(dim, |_, _| gaussian(rng));
        if let Some(u) = normalize(&v) {
            return u;
        }
    }
}

/// Uniform random rotation (det +1) of R^dim via QR of a Gaussian matrix.
pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DMatrix<f64> {
    let a = DMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    let qr = a.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        if r[(j, j)] < 0.0 {
            for i in 0..dim {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    if q.determinant() < 0.0 {
        for i in 0..dim {
            q[(i, 0)] = -q[(i, 0)];
        }
    }
    q
}

/// Matrix whose columns are the given vectors.
pub fn columns(vs: &[Vector], dim: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(dim, vs.len());
    for (j, v) in vs.iter().enumerate() {
        m.set_column(j, v);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_schmidt_drops_dependent_vectors() {
        let a = vector(&[1.0, 0.0, 0.0]);
        let b = vector(&[2.0, 0.0, 0.0]);
        let c = vector(&[1.0, 1.0, 0.0]);
        let q = gram_schmidt([&a, &b, &c], 1e-12);
        assert_eq!(q.len(), 2);
        assert!(q[0].dot(&q[1]).abs() < 1e-15);
    }

    #[test]
    fn complement_is_orthogonal() {
        let v = vec![vector(&[1.0, 1.0, 0.0]) / 2f64.sqrt()];
        let c = orthogonal_complement(&v, 3);
        assert_eq!(c.len(), 2);
        for w in &c {
            assert!(w.dot(&v[0]).abs() < 1e-14);
            assert!((w.norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn grids_are_unit() {
        for dim in 1..=5 {
            for d in direction_grid(dim, 64) {
                assert!((d.norm() - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn rotation_is_special_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = random_rotation(&mut rng, 4);
        let id = r.transpose() * &r;
        assert!((id - DMatrix::identity(4, 4)).norm() < 1e-12);
        assert!((r.determinant() - 1.0).abs() < 1e-12);
    }
}
