//! Double description for the extreme rays of a pointed polyhedral cone
//! `{y : a_i . y <= 0}`.
//!
//! Constraints are added one at a time to an initial simplicial cone; new
//! rays come from combining adjacent (+, -) ray pairs, with adjacency decided
//! combinatorially from the sets of tight constraints.

use crate::error::{GeomError, Result};
use crate::linalg::{columns, gram_schmidt, normalize, Vector};

const ZERO_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
struct Ray {
    dir: Vector,
    tight: Vec<bool>,
}

/// Extreme rays (unit vectors) of `{y : a . y <= 0 for all rows a}`.
///
/// The rows must span the ambient space, which makes the cone pointed.
pub fn dual_cone_rays(rows: &[Vector]) -> Result<Vec<Vector>> {
    let first = rows.first().ok_or(GeomError::Empty)?;
    let d = first.len();
    let m = rows.len();
    let unit_rows: Vec<Vector> = rows
        .iter()
        .map(|a| normalize(a).ok_or_else(|| GeomError::Degenerate("zero constraint row".into())))
        .collect::<Result<_>>()?;

    // greedy choice of d independent rows
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut ortho: Vec<Vector> = Vec::new();
    for (i, a) in unit_rows.iter().enumerate() {
        let mut r = a.clone();
        for q in &ortho {
            let c = q.dot(&r);
            r.axpy(-c, q, 1.0);
        }
        if r.norm() > 1e-9 {
            ortho.push(r.normalize());
            basis_idx.push(i);
            if basis_idx.len() == d {
                break;
            }
        }
    }
    if basis_idx.len() < d {
        return Err(GeomError::Degenerate(format!(
            "constraints span only {} of {d} dimensions",
            basis_idx.len()
        )));
    }
    let a_b = columns(
        &basis_idx.iter().map(|&i| unit_rows[i].clone()).collect::<Vec<_>>(),
        d,
    )
    .transpose();
    let inv = a_b
        .try_inverse()
        .ok_or_else(|| GeomError::Degenerate("singular initial basis".into()))?;

    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let dir = -inv.column(j).into_owned();
            let mut tight = vec![false; m];
            for (k, &i) in basis_idx.iter().enumerate() {
                if k != j {
                    tight[i] = true;
                }
            }
            Ray {
                dir: dir.normalize(),
                tight,
            }
        })
        .collect();

    for (i, a) in unit_rows.iter().enumerate() {
        if basis_idx.contains(&i) {
            continue;
        }
        let vals: Vec<f64> = rays.iter().map(|r| a.dot(&r.dir)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] > ZERO_TOL).collect();
        if plus.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.abs() <= ZERO_TOL {
                    r.tight[i] = true;
                }
            }
            continue;
        }
        let minus: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] < -ZERO_TOL).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (k, r) in rays.iter().enumerate() {
            if vals[k] <= ZERO_TOL {
                let mut r = r.clone();
                if vals[k].abs() <= ZERO_TOL {
                    r.tight[i] = true;
                }
                next.push(r);
            }
        }
        for &p in &plus {
            for &q in &minus {
                if !adjacent(&rays, p, q, d) {
                    continue;
                }
                let dir = &rays[q].dir * vals[p] - &rays[p].dir * vals[q];
                let Some(dir) = normalize(&dir) else { continue };
                let mut tight: Vec<bool> = rays[p]
                    .tight
                    .iter()
                    .zip(&rays[q].tight)
                    .map(|(x, y)| *x && *y)
                    .collect();
                tight[i] = true;
                next.push(Ray { dir, tight });
            }
        }
        rays = next;
    }

    let mut out: Vec<Vector> = Vec::new();
    for r in rays {
        if !out.iter().any(|o| (o - &r.dir).norm() < 1e-9) {
            out.push(r.dir);
        }
    }
    Ok(out)
}

/// Two rays are adjacent when their common tight set has rank `d - 2` and
/// no third ray is tight on all of it.
fn adjacent(rays: &[Ray], p: usize, q: usize, d: usize) -> bool {
    let common: Vec<usize> = (0..rays[p].tight.len())
        .filter(|&i| rays[p].tight[i] && rays[q].tight[i])
        .collect();
    if common.len() < d.saturating_sub(2) {
        return false;
    }
    !rays.iter().enumerate().any(|(k, r)| {
        k != p && k != q && common.iter().all(|&i| r.tight[i])
    })
}

/// Rank of a set of vectors.
pub fn rank(vectors: &[Vector]) -> usize {
    gram_schmidt(vectors.iter(), 1e-9).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    /// Brute force: every extreme ray is cut out by d-1 independent tight rows.
    fn brute_rays(rows: &[Vector]) -> Vec<Vector> {
        let d = rows[0].len();
        let m = rows.len();
        let mut out: Vec<Vector> = Vec::new();
        let mut idx = vec![0usize; d - 1];
        fn rec(start: usize, depth: usize, idx: &mut Vec<usize>, m: usize, f: &mut dyn FnMut(&[usize])) {
            if depth == idx.len() {
                f(idx);
                return;
            }
            for i in start..m {
                idx[depth] = i;
                rec(i + 1, depth + 1, idx, m, f);
            }
        }
        rec(0, 0, &mut idx, m, &mut |sub: &[usize]| {
            // padded with a zero row so the SVD returns a full V^T
            let a = nalgebra::DMatrix::from_fn(d, d, |r, c| if r < sub.len() { rows[sub[r]][c] } else { 0.0 });
            let svd = a.svd(false, true);
            let vt = svd.v_t.unwrap();
            let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
            sv.resize(d, 0.0);
            if sv[..d - 1].iter().any(|&s| s < 1e-9) {
                return;
            }
            let null: Vector = vt.row(d - 1).transpose().into_owned();
            for s in [1.0, -1.0] {
                let y = &null * s;
                if rows.iter().all(|a| a.dot(&y) <= 1e-10) {
                    let y = y.normalize();
                    if !out.iter().any(|o| (o - &y).norm() < 1e-8) {
                        out.push(y);
                    }
                }
            }
        });
        out
    }

    fn same_sets(a: &[Vector], b: &[Vector]) -> bool {
        a.len() == b.len() && a.iter().all(|x| b.iter().any(|y| (x - y).norm() < 1e-8))
    }

    #[test]
    fn orthant_is_self_dual_negated() {
        let rows = vec![vector(&[1.0, 0.0, 0.0]), vector(&[0.0, 1.0, 0.0]), vector(&[0.0, 0.0, 1.0])];
        let rays = dual_cone_rays(&rows).unwrap();
        let expected: Vec<Vector> = rows.iter().map(|r| -r).collect();
        assert!(same_sets(&rays, &expected));
    }

    #[test]
    fn matches_brute_force_on_pyramids() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for d in [3usize, 4] {
            for _ in 0..20 {
                let m = rng.gen_range(d..d + 8);
                let rows: Vec<Vector> = (0..m)
                    .map(|_| {
                        let mut v = Vector::from_fn(d, |_, _| rng.gen_range(-0.6..0.6));
                        v[d - 1] = 1.0;
                        v
                    })
                    .collect();
                let dd = dual_cone_rays(&rows).unwrap();
                let bf = brute_rays(&rows);
                assert!(same_sets(&dd, &bf), "d={d} m={m}: {} vs {}", dd.len(), bf.len());
            }
        }
    }

    #[test]
    fn degenerate_rows_rejected() {
        let rows = vec![vector(&[1.0, 0.0, 0.0]), vector(&[0.0, 1.0, 0.0])];
        assert!(matches!(dual_cone_rays(&rows), Err(GeomError::Degenerate(_))));
    }
}
