//! Geometric entanglement along the Grover path.
//!
//! The Grover iterate for target `|1...1>` has homogeneous coordinates
//! `(u, ..., u, 1)` with `u = cot(t) / sqrt(N-1)` running from `1` (average
//! state, `t = theta/2`) to `0` (target, `t = pi/2`). Its entanglement `E` is
//! the Fubini-Study distance to the nearest fully separable ray; the nearest
//! candidates are the coherent products `(v, 1)^{(x) n}`, `v = r e^{i chi}`,
//! whose overlap with the path point is
//!
//! ```text
//! P_n(u, v) = |u (1+v)^n + 1 - u|^2 / (((N-1) u^2 + 1) (1 + r^2)^n)
//! ```
//!
//! and `E = 2 arccos sqrt(max P_n)`.
//!
//! Four evaluation routes are offered: the two-qubit closed form, exact
//! root finding of the stationarity condition in `r`, the first-order
//! maximizer `r_M = u / (1 - (n-1) u)`, and an independent oracle in
//! [`oracle`]. Two-qubit quadric, concurrence and entropy measures live in
//! [`bipartite`].

pub mod bipartite;
pub mod oracle;

use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::grover::{grover_angle, MAX_INSTANCE_QUBITS, MAX_STATE_QUBITS};
use crate::ray::Ray;
use crate::{Error, Result};

pub use bipartite::{
    concurrence, concurrence_from_quadric, entropy_from_concurrence, partial_entropy,
    reduced_density_2q, reduced_density_first_qubit,
};
pub use oracle::{entanglement_grid_oracle, entanglement_oracle, OracleOptions};

/// Number of cells in the sign-change scan of the stationarity condition.
pub const ROOT_SCAN_CELLS: usize = 4096;

/// Bisection stops once the bracket is narrower than this.
pub const ROOT_TOLERANCE: f64 = 1e-12;

fn check_qubits(n: u32, min: u32, max: u32) -> Result<()> {
    if n < min || n > max {
        return Err(Error::Size("qubit count out of range"));
    }
    Ok(())
}

fn check_unit_interval(x: f64, what: &'static str) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(what));
    }
    Ok(())
}

fn dim_minus_one(n: u32) -> f64 {
    ((1u64 << n) - 1) as f64
}

/// A point `(u, ..., u, 1)` of the Grover path and its angle `t`,
/// related by `u = cot(t) / sqrt(N - 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverPathPoint {
    n: u32,
    u: f64,
    t: f64,
}

impl GroverPathPoint {
    pub fn from_u(n: u32, u: f64) -> Result<Self> {
        check_qubits(n, 1, MAX_INSTANCE_QUBITS)?;
        check_unit_interval(u, "path parameter u must lie in [0, 1]")?;
        let t = 1.0f64.atan2(u * dim_minus_one(n).sqrt());
        Ok(Self { n, u, t })
    }

    /// `t` must lie in `[theta/2, pi/2]`; `u` is clamped into `[0, 1]` to
    /// absorb rounding at the ends.
    pub fn from_t(n: u32, t: f64) -> Result<Self> {
        check_qubits(n, 1, MAX_INSTANCE_QUBITS)?;
        let lo = initial_angle(n);
        if !(t >= lo - 1e-15 && t <= PI / 2.0 + 1e-15) {
            return Err(Error::Domain("path angle t must lie in [theta/2, pi/2]"));
        }
        let (s, c) = t.sin_cos();
        let u = (c / (s * dim_minus_one(n).sqrt())).clamp(0.0, 1.0);
        Ok(Self { n, u, t })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Continuous Grover angle `(k + 1/2) theta`, which equals `t`.
    pub fn grover_angle(&self) -> f64 {
        self.t
    }
}

/// Angle of the average state, `theta/2 = arccot(sqrt(N-1))`.
pub fn initial_angle(n: u32) -> f64 {
    grover_angle((1u64 << n) as f64) / 2.0
}

/// Angle of the half-way state, `(pi + theta) / 4`.
pub fn half_way_angle(n: u32) -> f64 {
    (PI + grover_angle((1u64 << n) as f64)) / 4.0
}

/// Symmetric product `(v, 1)^{(x) n}` with `|v| <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentProduct {
    n: u32,
    v: Complex64,
}

impl CoherentProduct {
    pub fn new(n: u32, v: Complex64) -> Result<Self> {
        check_qubits(n, 1, MAX_INSTANCE_QUBITS)?;
        if !(v.norm() <= 1.0 + 1e-15) {
            return Err(Error::Domain("coherent parameter must satisfy |v| <= 1"));
        }
        Ok(Self { n, v })
    }

    pub fn from_polar(n: u32, r: f64, chi: f64) -> Result<Self> {
        check_unit_interval(r, "coherent modulus r must lie in [0, 1]")?;
        Self::new(n, Complex64::from_polar(r, chi))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn v(&self) -> Complex64 {
        self.v
    }

    pub fn r(&self) -> f64 {
        self.v.norm()
    }

    /// Phase of `v` in `[0, 2 pi)`.
    pub fn chi(&self) -> f64 {
        let a = self.v.arg();
        if a < 0.0 {
            a + 2.0 * PI
        } else {
            a
        }
    }

    /// Single-qubit factor `(v, 1)`.
    pub fn factor(&self) -> Ray {
        Ray::new(alloc::vec![self.v, Complex64::new(1.0, 0.0)]).expect("second coordinate is 1")
    }

    /// Expanded coordinates: `v^{number of zero bits of x}` at index `x`.
    pub fn to_ray(&self) -> Result<Ray> {
        check_qubits(self.n, 1, MAX_STATE_QUBITS)?;
        let n = self.n;
        let powers: Vec<Complex64> = (0..=n).map(|m| self.v.powu(m)).collect();
        let coords = (0..1usize << n)
            .map(|x| powers[(n - x.count_ones()) as usize])
            .collect();
        Ray::new(coords)
    }
}

/// Which route produced an [`EntanglementResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact2q,
    RootFind,
    Approx,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact2q => "exact2q",
            Method::RootFind => "rootfind",
            Method::Approx => "approx",
            Method::Oracle => "oracle",
        }
    }
}

/// Entanglement value together with the maximizing coherent parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementResult {
    /// Fubini-Study distance to the separable states, radians in `[0, pi]`.
    pub e: f64,
    pub r_star: f64,
    pub chi_star: f64,
    pub method: Method,
    /// Stationary points of `P_n` inspected (zero for routes that do not
    /// solve the stationarity condition).
    pub root_count: usize,
}

/// `2 arccos sqrt(P)`, with `P` clamped into `[0, 1]`.
pub fn distance_from_overlap(p: f64) -> f64 {
    2.0 * p.clamp(0.0, 1.0).sqrt().acos()
}

/// Homogeneous coordinates `(u, ..., u, 1)` with the `1` at the target
/// `|1...1>` (index `N - 1`).
pub fn grover_path_ray(n: u32, u: f64) -> Result<Ray> {
    check_qubits(n, 1, MAX_STATE_QUBITS)?;
    check_unit_interval(u, "path parameter u must lie in [0, 1]")?;
    let dim = 1usize << n;
    let mut coords = alloc::vec![Complex64::new(u, 0.0); dim];
    coords[dim - 1] = Complex64::new(1.0, 0.0);
    Ray::new(coords)
}

/// Transition probability between the path point `u` and the coherent
/// product with `v = r e^{i chi}`.
pub fn overlap_p(n: u32, u: f64, r: f64, chi: f64) -> Result<f64> {
    check_qubits(n, 1, MAX_INSTANCE_QUBITS)?;
    check_unit_interval(u, "path parameter u must lie in [0, 1]")?;
    check_unit_interval(r, "coherent modulus r must lie in [0, 1]")?;
    Ok(overlap_unchecked(n, u, r, chi))
}

fn overlap_unchecked(n: u32, u: f64, r: f64, chi: f64) -> f64 {
    let v = Complex64::from_polar(r, chi);
    let amp = (v + 1.0).powu(n) * u + (1.0 - u);
    let den = (dim_minus_one(n) * u * u + 1.0) * (1.0 + r * r).powi(n as i32);
    (amp.norm_sqr() / den).clamp(0.0, 1.0)
}

/// Closed-form two-qubit entanglement, maximizer
/// `v_M = (u - 1 + sqrt((u-1)^2 + 4u^2)) / (2u)`.
///
/// `v_M` and `P` are evaluated in rationalized form, which also covers
/// `u = 0` (the target, `E = 0`).
pub fn entanglement_exact_2q(u: f64) -> Result<EntanglementResult> {
    check_unit_interval(u, "path parameter u must lie in [0, 1]")?;
    let root = ((u - 1.0) * (u - 1.0) + 4.0 * u * u).sqrt();
    let v_m = 2.0 * u / (root + 1.0 - u);
    // u (v_M + 1) / v_M = u + (root + 1 - u) / 2
    let lift = (1.0 + u + root) / 2.0;
    let p = lift * lift / (3.0 * u * u + 1.0);
    Ok(EntanglementResult {
        e: distance_from_overlap(p),
        r_star: v_m,
        chi_star: 0.0,
        method: Method::Exact2q,
        root_count: 1,
    })
}

/// Stationarity condition `u ((1+r)^{n-1} (1-r) + r) - r`; its zeros in `r`
/// are the critical points of `P_n(u, r, chi = 0)`.
fn stationarity(n: u32, u: f64, r: f64) -> f64 {
    u * ((1.0 + r).powi(n as i32 - 1) * (1.0 - r) + r) - r
}

/// All `r` in `(0, 1]` with `u = r / ((1+r)^{n-1} (1-r) + r)`.
pub fn extremum_roots(n: u32, u: f64) -> Result<Vec<f64>> {
    check_qubits(n, 2, MAX_INSTANCE_QUBITS)?;
    if !(u > 0.0 && u <= 1.0) {
        return Err(Error::Domain("extremum condition needs u in (0, 1]"));
    }
    let f = |r: f64| stationarity(n, u, r);
    let grid = |i: usize| i as f64 / ROOT_SCAN_CELLS as f64;
    let mut roots = Vec::new();
    let mut lo = 0.0;
    let mut f_lo = f(lo);
    for i in 1..=ROOT_SCAN_CELLS {
        let hi = grid(i);
        let f_hi = f(hi);
        if f_hi == 0.0 {
            roots.push(hi);
        } else if f_lo != 0.0 && (f_lo < 0.0) != (f_hi < 0.0) {
            roots.push(bisect(&f, lo, hi, f_lo));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Ok(roots)
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, f_lo: f64) -> f64 {
    let neg_lo = f_lo < 0.0;
    while hi - lo > ROOT_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Entanglement of the path point `u` under the coherent ansatz: the best of
/// every stationary point and the boundaries `r = 0`, `r = 1`, at `chi = 0`.
pub fn entanglement_exact(n: u32, u: f64) -> Result<EntanglementResult> {
    check_qubits(n, 2, MAX_INSTANCE_QUBITS)?;
    check_unit_interval(u, "path parameter u must lie in [0, 1]")?;
    let roots = if u > 0.0 {
        extremum_roots(n, u)?
    } else {
        Vec::new()
    };
    let (r_star, p) = roots
        .iter()
        .copied()
        .chain([0.0, 1.0])
        .map(|r| (r, overlap_unchecked(n, u, r, 0.0)))
        .fold((0.0, f64::NEG_INFINITY), |best, c| {
            if c.1 > best.1 {
                c
            } else {
                best
            }
        });
    Ok(EntanglementResult {
        e: distance_from_overlap(p),
        r_star,
        chi_star: 0.0,
        method: Method::RootFind,
        root_count: roots.len(),
    })
}

/// Entanglement with the first-order maximizer `r_M = u / (1 - (n-1) u)`,
/// valid while `r_M` stays in `[0, 1]`.
pub fn entanglement_approx(n: u32, u: f64) -> Result<EntanglementResult> {
    check_qubits(n, 2, MAX_INSTANCE_QUBITS)?;
    if !(0.0..1.0).contains(&u) {
        return Err(Error::Domain("path parameter u must lie in [0, 1)"));
    }
    let denom = 1.0 - f64::from(n - 1) * u;
    if denom <= 0.0 {
        return Err(Error::ApproxDomain(u));
    }
    let r_m = u / denom;
    if r_m > 1.0 {
        return Err(Error::ApproxDomain(u));
    }
    let num = u * (r_m + 1.0).powi(n as i32) + (1.0 - u);
    let den = (dim_minus_one(n) * u * u + 1.0) * (r_m * r_m + 1.0).powi(n as i32);
    Ok(EntanglementResult {
        e: distance_from_overlap(num * num / den),
        r_star: r_m,
        chi_star: 0.0,
        method: Method::Approx,
        root_count: 0,
    })
}

/// First-order curve over the whole sweep: points before the half-way angle
/// are mirrored onto the second half, `t -> 2 t_half - t`.
pub fn entanglement_approx_mirrored(n: u32, t: f64) -> Result<EntanglementResult> {
    let t_half = half_way_angle(n);
    let t = if t < t_half { 2.0 * t_half - t } else { t };
    let point = GroverPathPoint::from_t(n, t.min(PI / 2.0))?;
    entanglement_approx(n, point.u())
}

/// Qubit count `4 + 2 sqrt(2)` at which the stationarity condition stops
/// being monotone in `r`.
pub fn critical_qubit_number() -> f64 {
    4.0 + 2.0 * SQRT_2
}

/// Large-`n` envelope `-2 |t - pi/4| + pi/2` on `[0, pi/2]`.
pub fn triangle_envelope(t: f64) -> Result<f64> {
    if !(0.0..=PI / 2.0).contains(&t) {
        return Err(Error::Domain("envelope is defined on [0, pi/2]"));
    }
    Ok(-2.0 * (t - PI / 4.0).abs() + PI / 2.0)
}
