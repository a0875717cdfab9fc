//! Small dense helpers on complex slices.

use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// `<a|b>`, conjugate-linear in the first slot.
pub(crate) fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter()
        .zip(b)
        .fold(Complex64::new(0.0, 0.0), |acc, (x, y)| acc + x.conj() * y)
}

pub(crate) fn norm_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

pub(crate) fn norm(a: &[Complex64]) -> f64 {
    // scaled to survive very large or very small coordinates
    let scale = a
        .iter()
        .fold(0.0f64, |m, z| m.max(z.re.abs()).max(z.im.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return scale;
    }
    let s: f64 = a.iter().map(|z| (z / scale).norm_sqr()).sum();
    scale * s.sqrt()
}

pub(crate) fn scaled(a: &[Complex64], c: Complex64) -> Vec<Complex64> {
    a.iter().map(|z| z * c).collect()
}

/// `a - c b`
pub(crate) fn axpy_sub(a: &[Complex64], c: Complex64, b: &[Complex64]) -> Vec<Complex64> {
    a.iter().zip(b).map(|(x, y)| x - c * y).collect()
}
