//! Randomized invariants. Bodies come from the crate's seeded generators so a
//! failing case shrinks to a reproducible seed.

use proptest::prelude::*;
use rand::Rng;

use sphereconv::euclid::{hausdorff, m_add, m_support, project, QuadrantPolytope};
use sphereconv::gnomonic::{map_body, map_body_inv, subsphere_to_subspace, HemisphereChart};
use sphereconv::linalg::{direction_grid, random_unit, Vector};
use sphereconv::random::{
    random_cap_body, random_euclid_polytope, random_quadrant_polygon, random_subsphere_through, trial_rng,
};
use sphereconv::sphere::{conv_union, contains, equator_directions, sph_project, sph_support};
use sphereconv::sphere_ops::h_e;
use sphereconv::star::{lp_radial_sum, RadialMap};
use sphereconv::{ConvexPolytope, SubspaceBasis};

fn quadrant_set(rng: &mut impl Rng, kind: u8) -> QuadrantPolytope {
    match kind % 3 {
        0 => QuadrantPolytope::minkowski(),
        1 => QuadrantPolytope::hull(),
        _ => random_quadrant_polygon(rng, 5).unwrap(),
    }
}

fn polytope(rng: &mut impl Rng, dim: usize) -> ConvexPolytope {
    random_euclid_polytope(rng, dim, 6, 1.5).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn m_add_vertex_path_matches_support_path(seed in any::<u64>(), dim in 2usize..=3, kind in 0u8..3) {
        let mut rng = trial_rng(seed, 0);
        let m = quadrant_set(&mut rng, kind);
        let (k, l) = (polytope(&mut rng, dim), polytope(&mut rng, dim));
        let sum = m_add(&m, &k, &l).unwrap();
        for _ in 0..50 {
            let x = random_unit(&mut rng, dim);
            let dev = (sum.support(&x).unwrap() - m_support(&m, &k, &l, &x).unwrap()).abs();
            prop_assert!(dev <= 1e-9, "deviation {dev:e}");
        }
    }

    #[test]
    fn m_add_commutes_with_projection(seed in any::<u64>(), kind in 0u8..3) {
        let mut rng = trial_rng(seed, 1);
        let m = quadrant_set(&mut rng, kind);
        let (k, l) = (polytope(&mut rng, 3), polytope(&mut rng, 3));
        let v = SubspaceBasis::spanned_by(3, &[random_unit(&mut rng, 3), random_unit(&mut rng, 3)]).unwrap();
        let lhs = project(&m_add(&m, &k, &l).unwrap(), &v).unwrap();
        let rhs = m_add(&m, &project(&k, &v).unwrap(), &project(&l, &v).unwrap()).unwrap();
        prop_assert!(hausdorff(&lhs, &rhs).unwrap() <= 1e-9);
    }

    #[test]
    fn hausdorff_is_a_metric(seed in any::<u64>(), dim in 2usize..=3) {
        let mut rng = trial_rng(seed, 2);
        let (a, b, c) = (polytope(&mut rng, dim), polytope(&mut rng, dim), polytope(&mut rng, dim));
        let ab = hausdorff(&a, &b).unwrap();
        prop_assert_eq!(ab, hausdorff(&b, &a).unwrap());
        prop_assert!(ab <= hausdorff(&a, &c).unwrap() + hausdorff(&c, &b).unwrap() + 1e-9);
        prop_assert!(hausdorff(&a, &a).unwrap() <= 1e-12);
    }

    #[test]
    fn support_is_sublinear(seed in any::<u64>(), dim in 2usize..=4, lambda in 0.01f64..100.0) {
        let mut rng = trial_rng(seed, 3);
        let k = polytope(&mut rng, dim);
        let (x, y) = (random_unit(&mut rng, dim), random_unit(&mut rng, dim));
        let h = |v: &Vector| k.support(v).unwrap();
        prop_assert!(h(&(&x + &y)) <= h(&x) + h(&y) + 1e-12);
        prop_assert!((h(&(&x * lambda)) - lambda * h(&x)).abs() <= 1e-12 * lambda.max(1.0));
    }

    #[test]
    fn support_bridge_holds(seed in any::<u64>(), ambient in 3usize..=4) {
        let mut rng = trial_rng(seed, 4);
        let u = random_unit(&mut rng, ambient);
        let k = random_cap_body(&mut rng, &u, 5, std::f64::consts::FRAC_PI_3).unwrap();
        let chart = HemisphereChart::new(&u).unwrap();
        let img = map_body(&chart, &k).unwrap();
        for v in equator_directions(&u, 32).unwrap() {
            let euclid = img.support(&chart.coords(&v)).unwrap();
            let sph = sph_support(&u, &k, &v).unwrap();
            prop_assert!((euclid - sph.tan()).abs() <= 1e-9);
        }
    }

    #[test]
    fn chart_round_trip_is_identity(seed in any::<u64>(), ambient in 3usize..=4) {
        let mut rng = trial_rng(seed, 5);
        let u = random_unit(&mut rng, ambient);
        let k = random_cap_body(&mut rng, &u, 6, 1.2).unwrap();
        let chart = HemisphereChart::new(&u).unwrap();
        let back = map_body_inv(&chart, &map_body(&chart, &k).unwrap()).unwrap();
        prop_assert!(back.body_eq(&k));
    }

    #[test]
    fn chart_intertwines_projections(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 6);
        let u = random_unit(&mut rng, 4);
        let k = random_cap_body(&mut rng, &u, 5, 1.0).unwrap();
        let s = random_subsphere_through(&mut rng, &u, 2..=3).unwrap();
        let chart = HemisphereChart::new(&u).unwrap();
        let lhs = map_body(&chart, &sph_project(&k, &s).unwrap()).unwrap();
        // same subspace, embedded back into chart coordinates
        let v = subsphere_to_subspace(&chart, &s).unwrap();
        let rhs = project(&map_body(&chart, &k).unwrap(), &v).unwrap();
        let lhs_in_v = ConvexPolytope::new(lhs.vertices().iter().map(|x| v.coords(x)).collect()).unwrap();
        prop_assert!(hausdorff(&lhs_in_v, &rhs).unwrap() <= 1e-9);
    }

    #[test]
    fn projection_is_idempotent_and_towers(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 7);
        let u = random_unit(&mut rng, 4);
        let k = random_cap_body(&mut rng, &u, 5, 1.0).unwrap();
        let s = random_subsphere_through(&mut rng, &u, 3..=3).unwrap();
        let ks = sph_project(&k, &s).unwrap();
        prop_assert!(sph_project(&ks, &s).unwrap().body_eq(&ks));
        // S' = span(u, w) with w in S
        let w = s.project(&random_unit(&mut rng, 4));
        let s2 = sphereconv::Subsphere::spanned_by(&[u.clone(), w]).unwrap();
        prop_assert!(sph_project(&ks, &s2).unwrap().body_eq(&sph_project(&k, &s2).unwrap()));
    }

    #[test]
    fn conv_union_contains_and_dominates(seed in any::<u64>(), ambient in 3usize..=4) {
        let mut rng = trial_rng(seed, 8);
        let u = random_unit(&mut rng, ambient);
        let k = random_cap_body(&mut rng, &u, 5, 1.0).unwrap();
        let l = random_cap_body(&mut rng, &u, 5, 1.0).unwrap();
        let c = conv_union(&k, &l).unwrap();
        for g in k.generators().iter().chain(l.generators()) {
            prop_assert!(contains(&c, g));
        }
        for v in equator_directions(&u, 32).unwrap() {
            let hc = sph_support(&u, &c, &v).unwrap();
            prop_assert!(sph_support(&u, &k, &v).unwrap() <= hc + 1e-12);
            prop_assert!(sph_support(&u, &l, &v).unwrap() <= hc + 1e-12);
        }
    }

    #[test]
    fn e_set_domain_holds_for_bodies(seed in any::<u64>(), dim in 2usize..=3) {
        let mut rng = trial_rng(seed, 9);
        let (k, l) = (polytope(&mut rng, dim), polytope(&mut rng, dim));
        for x in direction_grid(dim, 64) {
            let args = (k.neg().support(&x).unwrap(), k.support(&x).unwrap(), l.neg().support(&x).unwrap(), l.support(&x).unwrap());
            prop_assert!(h_e(args.0, args.1, args.2, args.3).is_ok());
        }
    }

    #[test]
    fn lp_radial_sum_is_commutative_and_associative(seed in any::<u64>(), p in 1.0f64..4.0) {
        let mut rng = trial_rng(seed, 10);
        let maps: Vec<RadialMap> = (0..3)
            .map(|_| {
                let (a, b) = (rng.gen_range(0.2..2.0), random_unit(&mut rng, 3));
                RadialMap::from_fn(3, move |x: &Vector| a + 0.1 * b.dot(x))
            })
            .collect();
        let ab = lp_radial_sum(p, &maps[0], &maps[1]).unwrap();
        let ba = lp_radial_sum(p, &maps[1], &maps[0]).unwrap();
        let left = lp_radial_sum(p, &ab, &maps[2]).unwrap();
        let right = lp_radial_sum(p, &maps[0], &lp_radial_sum(p, &maps[1], &maps[2]).unwrap()).unwrap();
        for x in direction_grid(3, 64) {
            let (r1, r2) = (ab.radial(&x).unwrap(), ba.radial(&x).unwrap());
            prop_assert!((r1 - r2).abs() <= 1e-12 * r1.max(1.0));
            let (r3, r4) = (left.radial(&x).unwrap(), right.radial(&x).unwrap());
            prop_assert!((r3 - r4).abs() <= 1e-12 * r3.max(1.0));
        }
    }
}
