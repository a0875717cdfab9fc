//! Rays of complex projective space and the Fubini-Study geometry on them.
//!
//! A [`Ray`] stores homogeneous coordinates `(z_0, ..., z_{N-1})`; two rays are
//! the same point of `CP^{N-1}` when one is a nonzero complex multiple of the
//! other. [`UnitVector`] is a ray whose coordinates have unit Euclidean norm;
//! it dereferences to [`Ray`] so every ray operation accepts it directly.
//!
//! Distances use `s = 2 arccos |<a|b>|` on normalized representatives, which
//! ranges over `[0, pi]`.

use alloc::vec::Vec;
use core::ops::Deref;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{axpy_sub, inner, norm, norm_sqr, scaled};
use crate::{Error, Result};

/// Absolute tolerance for comparisons of canonical coordinates.
///
/// `1e-12` up to dimension `2^10`, `1e-10` above.
pub fn tolerance_for_dim(dim: usize) -> f64 {
    if dim <= 1 << 10 {
        1e-12
    } else {
        1e-10
    }
}

/// Relative slack used when picking the largest-magnitude coordinate, so
/// that rounding between equivalent representatives cannot move the pivot.
const PIVOT_SLACK: f64 = 1e-9;

/// Homogeneous coordinates of a point of `CP^{N-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ray {
    coords: Vec<Complex64>,
}

impl Ray {
    /// Build a ray from at least two coordinates, not all zero.
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::Size("a ray needs at least two coordinates"));
        }
        if coords
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Domain("ray coordinates must be finite"));
        }
        if coords.iter().all(|z| z.norm_sqr() == 0.0) {
            return Err(Error::InvalidRay);
        }
        Ok(Self { coords })
    }

    pub fn from_real(coords: &[f64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn into_coords(self) -> Vec<Complex64> {
        self.coords
    }

    /// Same ray, rescaled to unit norm. The phase is left untouched.
    pub fn normalized(&self) -> UnitVector {
        let n = norm(&self.coords);
        UnitVector(Ray {
            coords: self.coords.iter().map(|z| z / n).collect(),
        })
    }

    /// Gauge-fixed representative, see [`canonical_form`].
    pub fn canonical(&self) -> UnitVector {
        canonical_form(self)
    }

    /// Whether both rays are the same projective point, comparing canonical
    /// forms coordinate-wise with absolute tolerance `tol`.
    pub fn equivalent(&self, other: &Ray, tol: f64) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        a.coords()
            .iter()
            .zip(b.coords())
            .all(|(x, y)| (x - y).norm() <= tol)
    }
}

/// A normalized vector of `C^N`: a ray together with a chosen unit-norm
/// representative.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector(Ray);

impl UnitVector {
    /// Accept coordinates that are already normalized within
    /// [`tolerance_for_dim`].
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        let ray = Ray::new(coords)?;
        let n = norm(ray.coords());
        if (n - 1.0).abs() > tolerance_for_dim(ray.dim()) {
            return Err(Error::NotNormalized(n));
        }
        Ok(Self(ray))
    }

    /// Normalize arbitrary nonzero coordinates.
    pub fn normalize(coords: Vec<Complex64>) -> Result<Self> {
        Ok(Ray::new(coords)?.normalized())
    }

    pub fn from_real(coords: &[f64]) -> Result<Self> {
        Self::normalize(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Computational basis vector `|index>`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::Index { index, dim });
        }
        let mut coords = alloc::vec![Complex64::new(0.0, 0.0); dim];
        coords[index] = Complex64::new(1.0, 0.0);
        Self::new(coords)
    }

    /// Caller guarantees unit norm up to rounding.
    pub(crate) fn from_normalized(coords: Vec<Complex64>) -> Self {
        debug_assert!(coords.len() >= 2);
        Self(Ray { coords })
    }

    pub fn as_ray(&self) -> &Ray {
        &self.0
    }

    pub fn into_ray(self) -> Ray {
        self.0
    }

    /// Multiply by a global phase `e^{i gamma}`.
    pub fn with_phase(&self, gamma: f64) -> UnitVector {
        Self(Ray {
            coords: scaled(self.coords(), Complex64::from_polar(1.0, gamma)),
        })
    }

    /// `<self|other>`
    pub fn inner(&self, other: &UnitVector) -> Result<Complex64> {
        check_dims(self, other)?;
        Ok(inner(self.coords(), other.coords()))
    }
}

impl Deref for UnitVector {
    type Target = Ray;

    fn deref(&self) -> &Ray {
        &self.0
    }
}

impl From<UnitVector> for Ray {
    fn from(u: UnitVector) -> Ray {
        u.0
    }
}

/// Inhomogeneous coordinates `zeta_l = z_l / z_pivot` on the chart where
/// the pivot coordinate does not vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct InhomogeneousChart {
    pub pivot: usize,
    /// The `N - 1` ratios in index order, skipping the pivot.
    pub values: Vec<Complex64>,
}

impl InhomogeneousChart {
    /// Homogeneous coordinates with a `1` at the pivot.
    pub fn to_ray(&self) -> Ray {
        let mut coords = Vec::with_capacity(self.values.len() + 1);
        coords.extend_from_slice(&self.values[..self.pivot]);
        coords.push(Complex64::new(1.0, 0.0));
        coords.extend_from_slice(&self.values[self.pivot..]);
        Ray { coords }
    }
}

fn check_dims(a: &Ray, b: &Ray) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// Unit-norm representative whose largest-magnitude coordinate (lowest index
/// among ties) is real and nonnegative.
pub fn canonical_form(r: &Ray) -> UnitVector {
    let u = r.normalized();
    let max = u.coords().iter().map(|z| z.norm()).fold(0.0, f64::max);
    let pivot = u
        .coords()
        .iter()
        .position(|z| z.norm() >= max * (1.0 - PIVOT_SLACK))
        .expect("a valid ray has a nonzero coordinate");
    let p = u.coords()[pivot];
    let phase = p.conj() / p.norm();
    let mut coords = scaled(u.coords(), phase);
    coords[pivot] = Complex64::new(coords[pivot].re, 0.0);
    UnitVector(Ray { coords })
}

/// Chart coordinates with respect to `pivot`.
pub fn inhomogeneous(r: &Ray, pivot: usize) -> Result<InhomogeneousChart> {
    if pivot >= r.dim() {
        return Err(Error::Index {
            index: pivot,
            dim: r.dim(),
        });
    }
    if r.canonical().coords()[pivot].norm() <= 1e-14 {
        return Err(Error::ChartUndefined(pivot));
    }
    let zp = r.coords()[pivot];
    let values = r
        .coords()
        .iter()
        .enumerate()
        .filter(|&(l, _)| l != pivot)
        .map(|(_, z)| z / zp)
        .collect();
    Ok(InhomogeneousChart { pivot, values })
}

/// `P = |<a|b>|^2` between normalized representatives.
pub fn transition_probability(a: &Ray, b: &Ray) -> Result<f64> {
    check_dims(a, b)?;
    let ov = inner(a.coords(), b.coords()).norm_sqr();
    let p = ov / (norm_sqr(a.coords()) * norm_sqr(b.coords()));
    Ok(p.clamp(0.0, 1.0))
}

/// Fubini-Study distance `2 arccos sqrt(P)` in `[0, pi]`.
///
/// Evaluated as `2 atan2(|b - <a|b> a|, |<a|b>|)` on normalized
/// representatives, which keeps full precision near both ends of the range.
/// The perpendicular part is averaged over both orders so the result is
/// bitwise symmetric.
pub fn fs_distance(a: &Ray, b: &Ray) -> Result<f64> {
    check_dims(a, b)?;
    let a = a.normalized();
    let b = b.normalized();
    let c = inner(a.coords(), b.coords());
    let perp_b = norm(&axpy_sub(b.coords(), c, a.coords()));
    let perp_a = norm(&axpy_sub(a.coords(), c.conj(), b.coords()));
    Ok(2.0 * (0.5 * (perp_a + perp_b)).atan2(c.norm()))
}

/// Point at distance `s` along the horizontal geodesic
/// `cos(s/2) p1 + sin(s/2) p2`.
pub fn geodesic_point(p1: &UnitVector, p2: &UnitVector, s: f64) -> Result<UnitVector> {
    check_dims(p1, p2)?;
    let ov = inner(p1.coords(), p2.coords()).norm();
    if ov > 1e-10 {
        return Err(Error::GeodesicBasis(ov));
    }
    if !(0.0..=core::f64::consts::PI).contains(&s) {
        return Err(Error::Domain("geodesic parameter must lie in [0, pi]"));
    }
    let (sn, cs) = (s / 2.0).sin_cos();
    let coords = p1
        .coords()
        .iter()
        .zip(p2.coords())
        .map(|(x, y)| x * cs + y * sn)
        .collect();
    Ok(UnitVector::from_normalized(coords))
}

/// Largest first-order violation of parallel transport along a sampled
/// curve: `max_k |Im <psi_k | psi_{k+1} - psi_k>|`.
pub fn horizontality_residual(samples: &[UnitVector]) -> Result<f64> {
    if samples.len() < 3 {
        return Err(Error::InsufficientSamples {
            needed: 3,
            found: samples.len(),
        });
    }
    let mut worst = 0.0f64;
    for (k, pair) in samples.windows(2).enumerate() {
        check_dims(&pair[0], &pair[1])?;
        let ov = inner(pair[0].coords(), pair[1].coords());
        if ov.norm() <= 1e-14 {
            return Err(Error::DisconnectedSamples(k));
        }
        // <psi|psi> is real, so only the cross term carries an imaginary part
        let d = axpy_sub(pair[1].coords(), Complex64::new(1.0, 0.0), pair[0].coords());
        let im = inner(pair[0].coords(), &d).im;
        worst = worst.max(im.abs());
    }
    Ok(worst)
}

/// Squared Fubini-Study line element
/// `ds^2 = 4 (<dpsi|dpsi> - (Im <psi|dpsi>)^2)`.
pub fn fs_line_element(psi: &UnitVector, dpsi: &[Complex64]) -> Result<f64> {
    if dpsi.len() != psi.dim() {
        return Err(Error::Dimension {
            expected: psi.dim(),
            found: dpsi.len(),
        });
    }
    let c = inner(psi.coords(), dpsi);
    if c.re.abs() > 1e-8 {
        return Err(Error::Tangent(c.re));
    }
    Ok((4.0 * (norm_sqr(dpsi) - c.im * c.im)).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_coords(u: &Ray, expected: &[Complex64], tol: f64) {
        assert_eq!(u.dim(), expected.len());
        for (x, y) in u.coords().iter().zip(expected) {
            assert!((x - y).norm() <= tol, "{x} vs {y}");
        }
    }

    #[test]
    fn canonical_form_examples() {
        let r = Ray::from_real(&[2.0, 0.0]).unwrap();
        assert_coords(&canonical_form(&r), &[c(1.0, 0.0), c(0.0, 0.0)], 1e-15);

        let r = Ray::new(vec![c(0.0, 0.0), c(0.0, 3.0)]).unwrap();
        assert_coords(&canonical_form(&r), &[c(0.0, 0.0), c(1.0, 0.0)], 1e-15);

        let r = Ray::new(vec![c(1.0, 1.0); 4]).unwrap();
        assert_coords(&canonical_form(&r), &[c(0.5, 0.0); 4], 1e-15);
    }

    #[test]
    fn canonical_ties_take_lowest_index() {
        let r = Ray::new(vec![c(0.0, 1.0), c(-1.0, 0.0)]).unwrap();
        let u = canonical_form(&r);
        assert_eq!(u.coords()[0].im, 0.0);
        assert!(u.coords()[0].re > 0.0);
        assert_abs_diff_eq!(u.coords()[1].im, FRAC_1_SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn zero_ray_is_rejected() {
        assert_eq!(Ray::from_real(&[0.0, 0.0]), Err(Error::InvalidRay));
        assert!(matches!(Ray::from_real(&[1.0]), Err(Error::Size(_))));
        assert!(matches!(
            UnitVector::new(vec![c(1.0, 0.0), c(1.0, 0.0)]),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn equivalence_under_complex_scale() {
        let a = Ray::new(vec![c(0.3, -0.2), c(1.1, 0.4), c(-0.7, 0.9)]).unwrap();
        let s = c(-2.5, 1.75);
        let b = Ray::new(a.coords().iter().map(|z| z * s).collect()).unwrap();
        assert!(a.equivalent(&b, 1e-12));
        let d = Ray::new(vec![c(0.3, -0.2), c(1.1, 0.4), c(-0.7, 0.8)]).unwrap();
        assert!(!a.equivalent(&d, 1e-12));
    }

    #[test]
    fn inhomogeneous_examples() {
        let u = 0.37;
        let r = Ray::from_real(&[u, u, u, 1.0]).unwrap();
        let chart = inhomogeneous(&r, 3).unwrap();
        assert_coords_slice(&chart.values, &[c(u, 0.0); 3]);

        let r = Ray::from_real(&[1.0, 0.0]).unwrap();
        assert_coords_slice(&inhomogeneous(&r, 0).unwrap().values, &[c(0.0, 0.0)]);

        let r = Ray::from_real(&[2.0, 4.0, 6.0]).unwrap();
        let chart = inhomogeneous(&r, 0).unwrap();
        assert_coords_slice(&chart.values, &[c(2.0, 0.0), c(3.0, 0.0)]);
        assert!(chart.to_ray().equivalent(&r, 1e-12));

        assert_eq!(
            inhomogeneous(&Ray::from_real(&[1.0, 0.0]).unwrap(), 1),
            Err(Error::ChartUndefined(1))
        );
        assert!(matches!(inhomogeneous(&r, 3), Err(Error::Index { .. })));
    }

    fn assert_coords_slice(got: &[Complex64], expected: &[Complex64]) {
        assert_eq!(got.len(), expected.len());
        for (x, y) in got.iter().zip(expected) {
            assert!((x - y).norm() <= 1e-15, "{x} vs {y}");
        }
    }

    #[test]
    fn chart_round_trip_with_middle_pivot() {
        let r = Ray::new(vec![c(0.5, 1.0), c(-1.0, 2.0), c(0.0, -0.25)]).unwrap();
        let chart = inhomogeneous(&r, 1).unwrap();
        assert_eq!(chart.values.len(), 2);
        assert!(chart.to_ray().equivalent(&r, 1e-12));
    }

    #[test]
    fn transition_probability_examples() {
        let a = Ray::from_real(&[0.5; 4]).unwrap();
        let w = Ray::from_real(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(
            transition_probability(&a, &a).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        let e0 = Ray::from_real(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(transition_probability(&e0, &w).unwrap(), 0.0);
        assert_abs_diff_eq!(
            transition_probability(&a, &w).unwrap(),
            0.25,
            epsilon = 1e-15
        );
        let short = Ray::from_real(&[1.0, 0.0]).unwrap();
        assert!(matches!(
            transition_probability(&a, &short),
            Err(Error::Dimension {
                expected: 4,
                found: 2
            })
        ));
    }

    #[test]
    fn fs_distance_examples() {
        let psi = UnitVector::normalize(vec![c(0.2, 0.1), c(-0.4, 0.3), c(0.5, 0.0)]).unwrap();
        assert!(fs_distance(&psi, &psi.with_phase(1.234)).unwrap() <= 1e-15);
        let e0 = Ray::from_real(&[1.0, 0.0]).unwrap();
        let e1 = Ray::from_real(&[0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(fs_distance(&e0, &e1).unwrap(), PI, epsilon = 1e-15);
        let a = Ray::from_real(&[0.5; 4]).unwrap();
        let w = Ray::from_real(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(
            fs_distance(&a, &w).unwrap(),
            2.0 * PI / 3.0,
            epsilon = 1e-15
        );
        assert!(fs_distance(&a, &e0).is_err());
    }

    #[test]
    fn geodesic_point_examples() {
        let p1 = UnitVector::basis(3, 0).unwrap();
        let p2 = UnitVector::normalize(vec![c(0.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)]).unwrap();
        assert_coords(&geodesic_point(&p1, &p2, 0.0).unwrap(), p1.coords(), 1e-15);
        assert_coords(&geodesic_point(&p1, &p2, PI).unwrap(), p2.coords(), 1e-15);
        let mid = geodesic_point(&p1, &p2, PI / 2.0).unwrap();
        let expected: Vec<_> = p1
            .coords()
            .iter()
            .zip(p2.coords())
            .map(|(x, y)| (x + y) * FRAC_1_SQRT_2)
            .collect();
        assert_coords(&mid, &expected, 1e-15);
        assert_abs_diff_eq!(fs_distance(&mid, &p1).unwrap(), PI / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fs_distance(&mid, &p2).unwrap(), PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn geodesic_rejects_bad_basis() {
        let p1 = UnitVector::basis(2, 0).unwrap();
        let p2 = UnitVector::from_real(&[1.0, 1.0]).unwrap();
        assert!(matches!(
            geodesic_point(&p1, &p2, 0.3),
            Err(Error::GeodesicBasis(_))
        ));
        let q = UnitVector::basis(2, 1).unwrap();
        assert!(matches!(
            geodesic_point(&p1, &q, 3.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn horizontality_examples() {
        let p1 = UnitVector::basis(4, 1).unwrap();
        let p2 = UnitVector::from_real(&[1.0, 0.0, 1.0, -1.0]).unwrap();
        let grid: Vec<f64> = (0..=157).map(|i| i as f64 * 0.01).collect();
        let curve: Vec<_> = grid
            .iter()
            .map(|&s| geodesic_point(&p1, &p2, s).unwrap())
            .collect();
        assert!(horizontality_residual(&curve).unwrap() <= 1e-6);

        let twisted: Vec<_> = curve
            .iter()
            .zip(&grid)
            .map(|(p, &s)| p.with_phase(s))
            .collect();
        assert!(horizontality_residual(&twisted).unwrap() > 1e-3);

        let constant = vec![p2.clone(); 5];
        assert_eq!(horizontality_residual(&constant).unwrap(), 0.0);

        assert!(matches!(
            horizontality_residual(&curve[..2]),
            Err(Error::InsufficientSamples {
                needed: 3,
                found: 2
            })
        ));
        let broken = vec![p1.clone(), UnitVector::basis(4, 0).unwrap(), p1];
        assert_eq!(
            horizontality_residual(&broken),
            Err(Error::DisconnectedSamples(0))
        );
    }

    #[test]
    fn line_element_examples() {
        let psi = UnitVector::normalize(vec![c(0.6, 0.1), c(-0.2, 0.5), c(0.3, -0.4)]).unwrap();
        assert_eq!(fs_line_element(&psi, &[c(0.0, 0.0); 3]).unwrap(), 0.0);

        let eps = 1e-3;
        let gauge: Vec<_> = psi.coords().iter().map(|z| z * c(0.0, eps)).collect();
        assert!(fs_line_element(&psi, &gauge).unwrap() <= 1e-12);

        let p1 = UnitVector::basis(3, 0).unwrap();
        let p2 = UnitVector::from_real(&[0.0, 0.6, 0.8]).unwrap();
        let h = 1e-4;
        let s = 0.7;
        let a = geodesic_point(&p1, &p2, s).unwrap();
        let b = geodesic_point(&p1, &p2, s + h).unwrap();
        let d = axpy_sub(b.coords(), c(1.0, 0.0), a.coords());
        let ds = fs_line_element(&a, &d).unwrap().sqrt();
        assert_abs_diff_eq!(ds / h, 1.0, epsilon = 1e-3);
    }

    #[test]
    fn line_element_rejects_non_tangent() {
        let psi = UnitVector::basis(2, 0).unwrap();
        let d = [c(0.1, 0.0), c(0.0, 0.0)];
        assert!(matches!(fs_line_element(&psi, &d), Err(Error::Tangent(_))));
        assert!(matches!(
            fs_line_element(&psi, &[c(0.0, 0.0)]),
            Err(Error::Dimension { .. })
        ));
    }
}
