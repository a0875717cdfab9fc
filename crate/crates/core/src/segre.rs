//! Segre embedding `CP^m x CP^m' -> CP^{(m+1)(m'+1)-1}` and separability.
//!
//! The image of the embedding is cut out by the `2 x 2` minors
//!
//! ```text
//! Q_{(i,j),(k,l)} = z_{(m'+1)i+k} z_{(m'+1)j+l} - z_{(m'+1)i+l} z_{(m'+1)j+k}
//! ```
//!
//! with `i < j <= m` and `k < l <= m'`: reshaping the coordinates into an
//! `(m+1) x (m'+1)` matrix, a ray is a product exactly when that matrix has
//! rank one. Residuals are always taken on unit-norm coordinates.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{inner, norm};
use crate::ray::{fs_distance, Ray};
use crate::{Error, Result};

/// Default certification tolerance for [`is_fully_separable`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// One minor `Q_{(i,j),(k,l)}`, rows `i < j`, columns `k < l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Quadric {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl Quadric {
    /// Value of the polynomial on coordinates laid out with row stride
    /// `m' + 1`.
    pub fn evaluate(&self, z: &[Complex64], m_prime: usize) -> Complex64 {
        let s = m_prime + 1;
        z[s * self.i + self.k] * z[s * self.j + self.l]
            - z[s * self.i + self.l] * z[s * self.j + self.k]
    }
}

/// All quadrics describing the Segre image of `CP^m x CP^m'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricSystem {
    m: usize,
    m_prime: usize,
    constraints: Vec<Quadric>,
}

impl QuadricSystem {
    /// `m (m+1) m' (m'+1) / 4`
    pub fn expected_count(m: usize, m_prime: usize) -> usize {
        m * (m + 1) / 2 * (m_prime * (m_prime + 1) / 2)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn m_prime(&self) -> usize {
        self.m_prime
    }

    /// Dimension of the ambient coordinate space, `(m+1)(m'+1)`.
    pub fn ambient_dim(&self) -> usize {
        (self.m + 1) * (self.m_prime + 1)
    }

    pub fn constraints(&self) -> &[Quadric] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Largest `|Q|` over the explicit constraint list, on the unit-norm
    /// representative of `r`.
    pub fn max_residual(&self, r: &Ray) -> Result<f64> {
        check_dim(r, self.ambient_dim())?;
        let z = r.normalized();
        Ok(self
            .constraints
            .iter()
            .map(|q| q.evaluate(z.coords(), self.m_prime).norm())
            .fold(0.0, f64::max))
    }
}

/// Quadric system for `CP^m x CP^m'`, ordered lexicographically by
/// `(i, j, k, l)`.
pub fn quadric_system(m: usize, m_prime: usize) -> Result<QuadricSystem> {
    if m == 0 || m_prime == 0 {
        return Err(Error::Domain("Segre factors need m, m' >= 1"));
    }
    let mut constraints = Vec::with_capacity(QuadricSystem::expected_count(m, m_prime));
    for i in 0..=m {
        for j in i + 1..=m {
            for k in 0..=m_prime {
                for l in k + 1..=m_prime {
                    constraints.push(Quadric { i, j, k, l });
                }
            }
        }
    }
    Ok(QuadricSystem {
        m,
        m_prime,
        constraints,
    })
}

/// Product coordinates `a_i b_k` at index `(m'+1) i + k`.
pub fn segre_embed(a: &Ray, b: &Ray) -> Ray {
    let coords = a
        .coords()
        .iter()
        .flat_map(|x| b.coords().iter().map(move |y| x * y))
        .collect();
    Ray::new(coords).expect("product of nonzero rays is nonzero")
}

fn check_dim(r: &Ray, expected: usize) -> Result<()> {
    if r.dim() != expected {
        return Err(Error::Dimension {
            expected,
            found: r.dim(),
        });
    }
    Ok(())
}

/// Largest `|Q_{(i,j),(k,l)}|` on the unit-norm representative of `r`;
/// zero exactly when `r` is a product for the `(m, m')` split.
///
/// Evaluated as the largest `2 x 2` minor of the coordinate matrix. Bitwise
/// identical rows have vanishing minors, so they are collapsed first; this
/// keeps structured states such as Grover iterates linear in `N`.
pub fn max_quadric_residual(r: &Ray, m: usize, m_prime: usize) -> Result<f64> {
    if m == 0 || m_prime == 0 {
        return Err(Error::Domain("Segre factors need m, m' >= 1"));
    }
    let cols = m_prime + 1;
    check_dim(r, (m + 1) * cols)?;
    let z = r.normalized();
    let mut rows: Vec<&[Complex64]> = z
        .coords()
        .chunks_exact(cols)
        .filter(|row| row.iter().any(|c| c.norm_sqr() != 0.0))
        .collect();
    let key = |row: &[Complex64]| -> Vec<(u64, u64)> {
        row.iter()
            .map(|c| (c.re.to_bits(), c.im.to_bits()))
            .collect()
    };
    rows.sort_by_cached_key(|row| key(row));
    rows.dedup_by(|a, b| key(a) == key(b));

    let mut worst = 0.0f64;
    for (p, ri) in rows.iter().enumerate() {
        for rj in &rows[p + 1..] {
            for k in 0..cols {
                for l in k + 1..cols {
                    worst = worst.max((ri[k] * rj[l] - ri[l] * rj[k]).norm());
                }
            }
        }
    }
    Ok(worst)
}

/// Outcome of the full-separability test on an `n`-qubit ray.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparabilityReport {
    pub fully_separable: bool,
    /// Largest quadric residual met while peeling off qubits.
    pub max_residual: f64,
    /// Single-qubit factors, most significant qubit first, when separable.
    pub factors: Option<Vec<Ray>>,
    /// Fubini-Study distance between the input and its re-embedded factors.
    pub reconstruction_distance: Option<f64>,
}

/// Certify that an `n`-qubit ray is a product of `n` single-qubit rays.
///
/// The last qubit is split off with the `(2^{n-1} - 1, 1)` quadric system;
/// when that residual is below `tol` the factor is extracted from the even
/// and odd index slices (the larger one serves as reference) and the test
/// recurses on the remaining `n - 1` qubits. Factors are finally re-embedded
/// and must reproduce the input within `sqrt(tol)`.
pub fn is_fully_separable(r: &Ray, n: u32, tol: f64) -> Result<SeparabilityReport> {
    if !(tol > 0.0) {
        return Err(Error::Domain("separability tolerance must be positive"));
    }
    if n == 0 || n >= usize::BITS {
        return Err(Error::Size("qubit count out of range"));
    }
    check_dim(r, 1usize << n)?;

    let mut current = r.normalized().into_ray().into_coords();
    let mut peeled: Vec<Ray> = Vec::with_capacity(n as usize);
    let mut max_residual = 0.0f64;
    while current.len() > 2 {
        let half = current.len() / 2;
        let ray = Ray::new(current).expect("normalized slice is nonzero");
        let res = max_quadric_residual(&ray, half - 1, 1)?;
        max_residual = max_residual.max(res);
        if res > tol {
            return Ok(SeparabilityReport {
                fully_separable: false,
                max_residual,
                factors: None,
                reconstruction_distance: None,
            });
        }
        let even: Vec<Complex64> = ray.coords().iter().step_by(2).copied().collect();
        let odd: Vec<Complex64> = ray.coords().iter().skip(1).step_by(2).copied().collect();
        let (ne, no) = (norm(&even), norm(&odd));
        let (reference, rn) = if ne >= no { (&even, ne) } else { (&odd, no) };
        let head: Vec<Complex64> = reference.iter().map(|z| z / rn).collect();
        let last = Ray::new(alloc::vec![inner(&head, &even), inner(&head, &odd)])
            .expect("reference slice has nonzero projection");
        peeled.push(last);
        current = head;
    }
    peeled.push(Ray::new(current).expect("normalized slice is nonzero"));
    peeled.reverse();

    let rebuilt = peeled[1..]
        .iter()
        .fold(peeled[0].clone(), |acc, f| segre_embed(&acc, f));
    let dist = fs_distance(&rebuilt, r)?;
    Ok(SeparabilityReport {
        fully_separable: dist <= tol.sqrt(),
        max_residual,
        factors: Some(peeled),
        reconstruction_distance: Some(dist),
    })
}

/// Violation of the product condition for the last qubit along the Grover
/// path, as a function of the continuous angle `phi = (k + 1/2) theta`:
/// `|cos(phi) sin(phi) / sqrt(N-1) - cos^2(phi) / (N-1)|`.
///
/// Vanishes at `phi = theta/2` (average state) and `phi = pi/2` (target),
/// modulo `pi`.
pub fn grover_separability_residual(dim: u64, phi: f64) -> f64 {
    debug_assert!(dim >= 2);
    let m = (dim - 1) as f64;
    let (s, c) = phi.sin_cos();
    (c * s / m.sqrt() - c * c / m).abs()
}
