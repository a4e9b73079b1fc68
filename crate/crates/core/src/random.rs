//! Seeded generators.
//!
//! All randomness comes from `ChaCha8Rng`. Trial `i` of a run with seed `s`
//! uses `ChaCha8Rng::seed_from_u64(s)` switched to stream `i`, so trials are
//! independent of each other and of execution order.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::euclid::{ConvexPolytope, QuadrantPolytope};
use crate::linalg::{check_unit, gaussian, gram_schmidt, random_unit, Vector};
use crate::sphere::{make_body, SpherePolytope, Subsphere};

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform point on the cap of angular radius `theta_max` about `center`.
pub fn random_cap_point<R: Rng + ?Sized>(rng: &mut R, center: &Vector, theta_max: f64) -> Vector {
    let dim = center.len();
    // polar angle density is proportional to sin^(dim-2)
    let peak = theta_max.min(std::f64::consts::FRAC_PI_2).sin();
    let theta = loop {
        let t = rng.gen_range(0.0..=theta_max);
        let accept = if dim <= 2 { 1.0 } else { (t.sin() / peak).powi(dim as i32 - 2) };
        if rng.gen::<f64>() <= accept {
            break t;
        }
    };
    let w = loop {
        let z = random_unit(rng, dim);
        let w = &z - center * center.dot(&z);
        let n = w.norm();
        if n > 1e-6 {
            break w / n;
        }
    };
    (center * theta.cos() + w * theta.sin()).normalize()
}

/// Body with `m` generators drawn uniformly on a cap about `center`.
pub fn random_cap_body<R: Rng + ?Sized>(
    rng: &mut R,
    center: &Vector,
    m: usize,
    theta_max: f64,
) -> Result<SpherePolytope> {
    check_unit(center)?;
    if m == 0 {
        return Err(GeomError::InvalidParam("need at least one generator".into()));
    }
    if !(theta_max > 0.0 && theta_max < std::f64::consts::FRAC_PI_2) {
        return Err(GeomError::InvalidParam(format!("cap radius {theta_max} not in (0, pi/2)")));
    }
    make_body((0..m).map(|_| random_cap_point(rng, center, theta_max)).collect())
}

/// Body on a cap about a uniformly random center.
pub fn random_sphere_body<R: Rng + ?Sized>(
    rng: &mut R,
    ambient_dim: usize,
    m: usize,
    theta_max: f64,
) -> Result<SpherePolytope> {
    let c = random_unit(rng, ambient_dim);
    random_cap_body(rng, &c, m, theta_max)
}

/// Random great subsphere through `w` whose linear span has a dimension
/// drawn from `dims`.
pub fn random_subsphere_through<R: Rng + ?Sized>(
    rng: &mut R,
    w: &Vector,
    dims: RangeInclusive<usize>,
) -> Result<Subsphere> {
    let n = w.len();
    if dims.is_empty() || *dims.start() == 0 || *dims.end() > n {
        return Err(GeomError::InvalidParam(format!("subsphere dimensions {dims:?} in R^{n}")));
    }
    let k = rng.gen_range(dims);
    let mut vs = vec![w.clone()];
    while gram_schmidt(vs.iter(), 1e-8).len() < k {
        vs.push(random_unit(rng, n));
    }
    Subsphere::spanned_by(&vs)
}

/// Convex polygon in `[0, 1]^2` with up to `count` random vertices.
pub fn random_quadrant_polygon<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Result<QuadrantPolytope> {
    let pts = (0..count.max(1))
        .map(|_| [rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)])
        .collect();
    QuadrantPolytope::new(pts)
}

/// Polytope with `m` Gaussian points scaled into the ball of `radius`.
pub fn random_euclid_polytope<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    m: usize,
    radius: f64,
) -> Result<ConvexPolytope> {
    let pts = (0..m.max(1))
        .map(|_| {
            let v = Vector::from_fn(dim, |_, _| gaussian(rng));
            let r = radius * rng.gen::<f64>().powf(1.0 / dim as f64);
            random_unit_like(&v) * r
        })
        .collect();
    ConvexPolytope::new(pts)
}

fn random_unit_like(v: &Vector) -> Vector {
    let n = v.norm();
    if n > 0.0 {
        v / n
    } else {
        let mut e = Vector::zeros(v.len());
        e[0] = 1.0;
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_streams_are_reproducible_and_distinct() {
        let a: u64 = trial_rng(1, 0).gen();
        let b: u64 = trial_rng(1, 0).gen();
        let c: u64 = trial_rng(1, 1).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn cap_points_stay_in_cap() {
        let mut rng = trial_rng(3, 0);
        for dim in [3, 4, 5] {
            let c = random_unit(&mut rng, dim);
            for _ in 0..200 {
                let p = random_cap_point(&mut rng, &c, 0.7);
                assert!((p.norm() - 1.0).abs() < 1e-12);
                assert!(p.dot(&c) >= 0.7f64.cos() - 1e-12);
            }
        }
    }

    #[test]
    fn cap_body_is_proper() {
        let mut rng = trial_rng(1, 0);
        let k = random_sphere_body(&mut rng, 3, 5, std::f64::consts::FRAC_PI_3).unwrap();
        assert!(k.margin() > 0.0);
        assert!(k.generators().len() <= 5);
    }

    #[test]
    fn subsphere_dimensions_in_range() {
        let mut rng = trial_rng(8, 0);
        let w = random_unit(&mut rng, 5);
        for _ in 0..50 {
            let s = random_subsphere_through(&mut rng, &w, 2..=4).unwrap();
            assert!((2..=4).contains(&s.dim()));
            assert!(s.contains_point(&w, 1e-10));
        }
        assert!(random_subsphere_through(&mut rng, &w, 0..=2).is_err());
    }

    #[test]
    fn euclid_polytope_within_radius() {
        let mut rng = trial_rng(2, 0);
        let p = random_euclid_polytope(&mut rng, 3, 12, 2.0).unwrap();
        assert!(p.vertices().iter().all(|v| v.norm() <= 2.0 + 1e-12));
        assert!(p.diameter() <= 4.0 + 1e-12);
    }
}
