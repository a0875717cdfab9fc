//! Grover dynamics as a rotation along a Fubini-Study geodesic.
//!
//! The Grover iterate `G = -I_a I_w` rotates the plane spanned by
//! `|r> = sum_{x != w} |x> / sqrt(N-1)` and `|w>` by `theta`, where
//! `sin(theta/2) = <w|a> = 1/sqrt(N)`. Replacing the average state `|a>` by an
//! arbitrary `|y>` gives the kernel `U_y = -I_y I_w`, rotating by `eta` with
//! `sin(eta/2) = <w|y>`. Both are available in closed form and by applying
//! the reflections as rank-one updates on the state vector.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::inner;
use crate::ray::UnitVector;
use crate::{Error, Result};

/// Largest register that is ever materialized as a state vector.
pub const MAX_STATE_QUBITS: u32 = 24;

/// Largest register for which `N = 2^n` and `theta` are tracked in closed form.
pub const MAX_INSTANCE_QUBITS: u32 = 52;

/// How Grover iterates are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Trigonometric formula in the rotation plane.
    ClosedForm,
    /// Repeated application of the two reflections to the state vector.
    Operator,
}

/// A search over `N = 2^n` items with a single marked index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchInstance {
    n: u32,
    target: u64,
    theta: f64,
}

impl SearchInstance {
    pub fn new(n: u32, target: u64) -> Result<Self> {
        if n == 0 || n > MAX_INSTANCE_QUBITS {
            return Err(Error::Size("qubit count must lie in 1..=52"));
        }
        let dim = 1u64 << n;
        if target >= dim {
            return Err(Error::Index {
                index: target as usize,
                dim: dim as usize,
            });
        }
        Ok(Self {
            n,
            target,
            theta: grover_angle(dim as f64),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> u64 {
        1u64 << self.n
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    /// Rotation angle per query, `2 arcsin(1/sqrt(N))`.
    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// `theta = 2 arcsin(N^{-1/2})`.
pub fn grover_angle(dim: f64) -> f64 {
    2.0 * (1.0 / dim.sqrt()).asin()
}

fn state_dim(n: u32) -> Result<usize> {
    if n == 0 || n > MAX_STATE_QUBITS {
        return Err(Error::Size("state vectors are limited to 1..=24 qubits"));
    }
    Ok(1usize << n)
}

/// Uniform superposition `|a> = N^{-1/2} sum_x |x>`.
pub fn average_state(n: u32) -> Result<UnitVector> {
    let dim = state_dim(n)?;
    let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    Ok(UnitVector::from_normalized(vec![amp; dim]))
}

/// Apply `G = -I_a I_w` in place: flip the target amplitude, then invert
/// every amplitude about the mean.
pub fn apply_grover_iterate(state: &mut [Complex64], target: usize) {
    state[target] = -state[target];
    let mean = state.iter().sum::<Complex64>() / state.len() as f64;
    for z in state.iter_mut() {
        *z = mean * 2.0 - *z;
    }
}

/// Apply `-I_y I_w` in place, with `I_v = 1 - 2|v><v|` and unit `axis = |y>`.
pub fn apply_kernel(state: &mut [Complex64], axis: &[Complex64], target: usize) {
    state[target] = -state[target];
    let c = inner(axis, state) * 2.0;
    for (z, y) in state.iter_mut().zip(axis) {
        *z = c * y - *z;
    }
}

/// `|psi(k)> = G^k |a>`.
pub fn grover_state(inst: &SearchInstance, k: u64, mode: Mode) -> Result<UnitVector> {
    let dim = state_dim(inst.n)?;
    let target = inst.target as usize;
    match mode {
        Mode::ClosedForm => {
            let phi = (k as f64 + 0.5) * inst.theta;
            let (s, c) = phi.sin_cos();
            let mut coords = vec![Complex64::new(c / ((dim - 1) as f64).sqrt(), 0.0); dim];
            coords[target] = Complex64::new(s, 0.0);
            Ok(UnitVector::from_normalized(coords))
        }
        Mode::Operator => {
            let mut coords = average_state(inst.n)?.into_ray().into_coords();
            for _ in 0..k {
                apply_grover_iterate(&mut coords, target);
            }
            Ok(UnitVector::from_normalized(coords))
        }
    }
}

/// `sin^2((k + 1/2) theta)`.
pub fn success_probability(inst: &SearchInstance, k: u64) -> f64 {
    ((k as f64 + 0.5) * inst.theta).sin().powi(2)
}

/// Integer `k` closest to reaching the target, `round(pi/(2 theta) - 1/2)`,
/// checked against its neighbours.
pub fn optimal_query_count(dim: u64) -> Result<u64> {
    if dim < 4 {
        return Err(Error::Size("optimal query count needs N >= 4"));
    }
    let theta = grover_angle(dim as f64);
    let p = |k: u64| ((k as f64 + 0.5) * theta).sin().powi(2);
    let guess = (PI / (2.0 * theta) - 0.5).round() as u64;
    let mut best = guess;
    for cand in [guess.saturating_sub(1), guess + 1] {
        if p(cand) > p(best) {
            best = cand;
        }
    }
    Ok(best)
}

/// Rotation kernel `U_y(eta) = -I_y I_w` for a fixed target.
///
/// `|y>` is stored phase-aligned with the target so that `q = <w|y>` is real
/// and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicKernel {
    y: UnitVector,
    target: usize,
    q: f64,
    eta: f64,
    /// `(|y> - q|w>) / sqrt(1 - q^2)`, absent when `|y> = |w>` up to phase.
    r_prime: Option<Vec<Complex64>>,
}

impl GeodesicKernel {
    pub fn new(y: &UnitVector, target: usize) -> Result<Self> {
        let dim = y.dim();
        if target >= dim {
            return Err(Error::Index { index: target, dim });
        }
        let yw = y.coords()[target];
        let q = yw.norm();
        if q <= 1e-15 {
            return Err(Error::DegenerateKernel);
        }
        let y = UnitVector::from_normalized(y.coords().iter().map(|z| z * yw.conj() / q).collect());
        let q = q.min(1.0);
        let rest = (1.0 - q * q).max(0.0).sqrt();
        let r_prime = (rest > 1e-12).then(|| {
            let mut v: Vec<_> = y.coords().to_vec();
            v[target] -= q;
            v.iter_mut().for_each(|z| *z /= rest);
            v
        });
        Ok(Self {
            y,
            target,
            q,
            eta: 2.0 * q.asin(),
            r_prime,
        })
    }

    /// Phase-aligned initial state.
    pub fn initial(&self) -> &UnitVector {
        &self.y
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn r_prime(&self) -> Option<&[Complex64]> {
        self.r_prime.as_deref()
    }
}

/// `|Psi(k)> = U_y(eta)^k |y>`.
pub fn generalized_state(kernel: &GeodesicKernel, k: u64, mode: Mode) -> UnitVector {
    match mode {
        Mode::ClosedForm => {
            let (s, c) = ((k as f64 + 0.5) * kernel.eta).sin_cos();
            let dim = kernel.y.dim();
            let mut coords = match &kernel.r_prime {
                Some(r) => r.iter().map(|z| z * c).collect(),
                None => vec![Complex64::new(0.0, 0.0); dim],
            };
            coords[kernel.target] += s;
            UnitVector::from_normalized(coords)
        }
        Mode::Operator => {
            let mut coords = kernel.y.coords().to_vec();
            for _ in 0..k {
                apply_kernel(&mut coords, kernel.y.coords(), kernel.target);
            }
            UnitVector::from_normalized(coords)
        }
    }
}

/// Speed, distance and time of a geodesic search from overlap `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchMetrics {
    /// Fubini-Study distance per query, `4 arcsin q` (radians).
    pub speed: f64,
    /// Distance from the initial ray to the target, `pi - 2 arcsin q` (radians).
    pub distance: f64,
    /// Number of queries, `distance / speed`.
    pub queries: f64,
}

pub fn search_metrics(q: f64) -> Result<SearchMetrics> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::Domain("overlap q must lie in (0, 1]"));
    }
    let half_eta = q.asin();
    let speed = 4.0 * half_eta;
    let distance = PI - 2.0 * half_eta;
    Ok(SearchMetrics {
        speed,
        distance,
        queries: distance / speed,
    })
}

/// Worst-case query count for an initial state with the given amplitude
/// magnitudes: the search time of its smallest overlap.
pub fn worst_case_time(magnitudes: &[f64]) -> Result<f64> {
    if magnitudes.is_empty() {
        return Err(Error::Size("need at least one amplitude"));
    }
    if magnitudes.iter().any(|&m| !(m >= 0.0)) {
        return Err(Error::Domain("amplitude magnitudes must be nonnegative"));
    }
    let total: f64 = magnitudes.iter().map(|m| m * m).sum();
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::Domain("squared magnitudes must sum to 1"));
    }
    let q_min = magnitudes.iter().copied().fold(f64::INFINITY, f64::min);
    if q_min <= 0.0 {
        return Err(Error::UnreachableTarget);
    }
    Ok(search_metrics(q_min.min(1.0))?.queries)
}

/// Fourier basis vector `|p> = N^{-1/2} sum_x e^{2 pi i p x / N} |x>`.
pub fn fourier_state(n: u32, p: usize) -> Result<UnitVector> {
    let dim = state_dim(n)?;
    if p >= dim {
        return Err(Error::Index { index: p, dim });
    }
    let amp = 1.0 / (dim as f64).sqrt();
    let coords = (0..dim)
        .map(|x| {
            // reduce p*x mod N before scaling so the angle stays exact
            let m = ((p as u128 * x as u128) % dim as u128) as f64;
            Complex64::from_polar(amp, 2.0 * PI * m / dim as f64)
        })
        .collect();
    Ok(UnitVector::from_normalized(coords))
}
