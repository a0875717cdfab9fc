mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use raysearch_core::grover::grover_angle;
use raysearch_core::ray::fs_distance;
use raysearch_core::segre::{
    grover_separability_residual, is_fully_separable, max_quadric_residual, quadric_system,
    segre_embed, QuadricSystem, DEFAULT_TOLERANCE,
};
use raysearch_core::{Complex64, Ray};

fn product(factors: &[Ray]) -> Ray {
    factors[1..]
        .iter()
        .fold(factors[0].clone(), |acc, f| segre_embed(&acc, f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn embedded_pairs_satisfy_every_quadric(m in 1usize..=3, mp in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = haar_ray(m + 1, &mut rng);
        let b = haar_ray(mp + 1, &mut rng);
        let p = segre_embed(&a, &b);
        prop_assert!(max_quadric_residual(&p, m, mp).unwrap() <= 1e-12);
        prop_assert!(quadric_system(m, mp).unwrap().max_residual(&p).unwrap() <= 1e-12);
    }
}

proptest! {
    #[test]
    fn factor_round_trip(n in 1u32..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let factors: Vec<Ray> = (0..n).map(|_| haar_ray(2, &mut rng)).collect();
        let p = product(&factors);
        let report = is_fully_separable(&p, n, DEFAULT_TOLERANCE).unwrap();
        prop_assert!(report.fully_separable);
        let found = report.factors.unwrap();
        prop_assert_eq!(found.len(), n as usize);
        prop_assert!(fs_distance(&product(&found), &p).unwrap() <= 1e-9);
        for (f, g) in found.iter().zip(&factors) {
            prop_assert!(f.equivalent(g, 1e-8));
        }
    }

    #[test]
    fn two_qubit_certificate_matches_residual(seed in any::<u64>(), log_eps in -14.0f64..-2.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = segre_embed(&haar_ray(2, &mut rng), &haar_ray(2, &mut rng)).normalized();
        let noise = haar_ray(4, &mut rng).normalized();
        let eps = 10f64.powf(log_eps);
        let coords: Vec<Complex64> = p.coords().iter().zip(noise.coords()).map(|(a, b)| a + b * eps).collect();
        let r = Ray::new(coords).unwrap();
        let residual = max_quadric_residual(&r, 1, 1).unwrap();
        let report = is_fully_separable(&r, 2, DEFAULT_TOLERANCE).unwrap();
        prop_assert_eq!(report.fully_separable, residual <= DEFAULT_TOLERANCE);
    }
}

#[test]
fn constraint_counts() {
    for m in 1..=4 {
        for mp in 1..=4 {
            let sys = quadric_system(m, mp).unwrap();
            assert_eq!(sys.len(), m * (m + 1) * mp * (mp + 1) / 4);
            assert_eq!(sys.len(), QuadricSystem::expected_count(m, mp));
        }
    }
}

#[test]
fn haar_random_states_are_entangled() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for i in 0..200 {
        let n = 2 + (i % 5) as u32;
        let r = haar_ray(1 << n, &mut rng);
        assert!(
            !is_fully_separable(&r, n, DEFAULT_TOLERANCE)
                .unwrap()
                .fully_separable
        );
    }
}

#[test]
fn two_qubit_random_rays_agree_with_residual() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for _ in 0..1000 {
        let r = haar_ray(4, &mut rng);
        let residual = max_quadric_residual(&r, 1, 1).unwrap();
        let report = is_fully_separable(&r, 2, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(report.fully_separable, residual <= DEFAULT_TOLERANCE);
    }
}

#[test]
fn grover_path_separable_only_at_the_ends() {
    for n in 2..=8u32 {
        let dim = 1u64 << n;
        let lo = grover_angle(dim as f64) / 2.0;
        let hi = core::f64::consts::FRAC_PI_2;
        let points = 2000;
        let step = (hi - lo) / (points - 1) as f64;
        for i in 0..points {
            let phi = lo + step * i as f64;
            let near_end = phi - lo <= step * 1.000001 || hi - phi <= step * 1.000001;
            let residual = grover_separability_residual(dim, phi);
            if residual <= 1e-10 {
                assert!(near_end, "N = {dim}: residual {residual} at phi = {phi}");
            }
        }
        assert!(grover_separability_residual(dim, lo) <= 1e-10);
        assert!(grover_separability_residual(dim, hi) <= 1e-10);
    }
}
