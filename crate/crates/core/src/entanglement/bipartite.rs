//! Two-qubit measures along the Grover path: reduced density matrix,
//! concurrence and partial entropy.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::ray::Ray;
use crate::segre::Quadric;
use crate::{Error, Result};

fn check_u(u: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::Domain("path parameter u must lie in [0, 1]"));
    }
    Ok(())
}

/// Reduced density matrix of the first qubit of `(u, u, u, 1)`, second qubit
/// traced out: `[[2u^2, u(u+1)], [u(u+1), u^2+1]] / (3u^2 + 1)`.
pub fn reduced_density_2q(u: f64) -> Result<[[f64; 2]; 2]> {
    check_u(u)?;
    let z = 3.0 * u * u + 1.0;
    let off = u * (u + 1.0) / z;
    Ok([[2.0 * u * u / z, off], [off, (u * u + 1.0) / z]])
}

/// `tr_2 |psi><psi|` for an arbitrary two-qubit ray.
pub fn reduced_density_first_qubit(r: &Ray) -> Result<[[Complex64; 2]; 2]> {
    if r.dim() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            found: r.dim(),
        });
    }
    let z = r.normalized();
    let z = z.coords();
    let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (a, row) in rho.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            *entry = (0..2).map(|c| z[2 * a + c] * z[2 * b + c].conj()).sum();
        }
    }
    Ok(rho)
}

/// `C(u) = 2u(1-u) / (3u^2 + 1)`.
pub fn concurrence(u: f64) -> Result<f64> {
    check_u(u)?;
    Ok(2.0 * u * (1.0 - u) / (3.0 * u * u + 1.0))
}

/// `C = 2 |z0 z3 - z1 z2|` on unit-norm coordinates.
pub fn concurrence_from_quadric(r: &Ray) -> Result<f64> {
    if r.dim() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            found: r.dim(),
        });
    }
    let q = Quadric {
        i: 0,
        j: 1,
        k: 0,
        l: 1,
    };
    Ok(2.0 * q.evaluate(r.normalized().coords(), 1).norm())
}

/// Von Neumann entropy (base 2) of a one-qubit reduced state with
/// eigenvalues `(1 +- sqrt(1 - C^2)) / 2`.
pub fn entropy_from_concurrence(c: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::Domain("concurrence must lie in [0, 1]"));
    }
    let root = (1.0 - c * c).sqrt();
    let plus = (1.0 + root) / 2.0;
    // 1 - plus loses digits for small C; c^2/4 = plus * minus is exact
    let minus = if plus > 0.0 {
        c * c / (4.0 * plus)
    } else {
        0.0
    };
    let h = |p: f64| if p > 0.0 { -p * p.log2() } else { 0.0 };
    Ok(h(plus) + h(minus))
}

/// Partial entropy `e(u)` of the two-qubit path point.
pub fn partial_entropy(u: f64) -> Result<f64> {
    entropy_from_concurrence(concurrence(u)?)
}
