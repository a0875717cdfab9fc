#![allow(dead_code)]

use proptest::prelude::*;
use raysearch_core::{Complex64, Ray, UnitVector};

pub fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Random ray of the given dimension, kept away from the zero vector.
pub fn ray(dim: usize) -> impl Strategy<Value = Ray> {
    prop::collection::vec(complex(), dim)
        .prop_filter("nonzero", |v| {
            v.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
        })
        .prop_map(|v| Ray::new(v).unwrap())
}

pub fn ray_in(dims: core::ops::RangeInclusive<usize>) -> impl Strategy<Value = Ray> {
    dims.prop_flat_map(ray)
}

/// Gaussian-distributed coordinates give a unitarily invariant ray.
pub fn haar_ray(dim: usize, rng: &mut impl rand::Rng) -> Ray {
    use rand_distr::{Distribution, StandardNormal};
    let coords = (0..dim)
        .map(|_| {
            Complex64::new(
                StandardNormal.sample(&mut *rng),
                StandardNormal.sample(&mut *rng),
            )
        })
        .collect();
    Ray::new(coords).unwrap()
}

/// Orthonormal pair spanning the same plane as `a` and `b`.
pub fn orthonormal_pair(a: &Ray, b: &Ray) -> Option<(UnitVector, UnitVector)> {
    let p1 = a.normalized();
    let b = b.normalized();
    let c: Complex64 = p1
        .coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x.conj() * y)
        .sum();
    let rest: Vec<Complex64> = b
        .coords()
        .iter()
        .zip(p1.coords())
        .map(|(y, x)| y - c * x)
        .collect();
    if rest.iter().map(|z| z.norm_sqr()).sum::<f64>() < 1e-4 {
        return None;
    }
    Some((p1, UnitVector::normalize(rest).ok()?))
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
