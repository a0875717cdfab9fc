//! Brute-force reference for the geometric entanglement measure.
//!
//! Two routes, neither of which uses the stationarity condition:
//!
//! - permutation-symmetric inputs are scanned exhaustively over symmetric
//!   products `(sin(b/2) e^{i chi}, cos(b/2))^{(x) n}` on a `b x chi` grid
//!   covering the whole Bloch sphere, followed by one finer pass around the
//!   best cell;
//! - any other input is handled by multistart alternating maximization
//!   over `n` independent single-qubit factors. Holding all factors but one
//!   fixed, the overlap is linear in the free factor, so its optimal Bloch
//!   angles are available exactly at every step.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{distance_from_overlap, EntanglementResult, Method};
use crate::grover::MAX_STATE_QUBITS;
use crate::ray::Ray;
use crate::{Error, Result};

/// Tuning of [`entanglement_oracle`].
#[derive(Debug, Clone, PartialEq)]
pub struct OracleOptions {
    /// Grid points per axis on the symmetric route, at least 64.
    pub resolution: usize,
    /// Points per axis of the refinement pass around the best grid cell.
    pub refine: usize,
    /// Random starts on the general route, at least 32.
    pub starts: usize,
    pub seed: u64,
    /// A start has converged once a full sweep changes `P` by less than this.
    pub tol: f64,
    pub max_sweeps: usize,
    /// Skip symmetry detection and always use the general route.
    pub force_general: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            resolution: 2048,
            refine: 65,
            starts: 32,
            seed: 0x5eed,
            tol: 1e-15,
            max_sweeps: 20_000,
            force_general: false,
        }
    }
}

/// Oracle with default options and the given grid resolution.
pub fn entanglement_grid_oracle(
    psi: &Ray,
    n: u32,
    resolution: usize,
) -> Result<EntanglementResult> {
    entanglement_oracle(
        psi,
        n,
        &OracleOptions {
            resolution,
            ..OracleOptions::default()
        },
    )
}

pub fn entanglement_oracle(psi: &Ray, n: u32, opts: &OracleOptions) -> Result<EntanglementResult> {
    if n == 0 || n > MAX_STATE_QUBITS {
        return Err(Error::Size("oracle is limited to 1..=24 qubits"));
    }
    let dim = 1usize << n;
    if psi.dim() != dim {
        return Err(Error::Dimension {
            expected: dim,
            found: psi.dim(),
        });
    }
    if opts.resolution < 64 {
        return Err(Error::Domain("oracle resolution must be at least 64"));
    }
    if opts.starts < 32 {
        return Err(Error::Domain("oracle needs at least 32 starts"));
    }
    if opts.refine < 3 {
        return Err(Error::Domain(
            "refinement pass needs at least 3 points per axis",
        ));
    }
    let z = psi.normalized();
    if !opts.force_general {
        if let Some(d) = symmetric_coefficients(z.coords(), n) {
            return Ok(symmetric_scan(&d, n, opts));
        }
    }
    multistart(z.coords(), n, opts)
}

/// Amplitudes of a permutation-symmetric state indexed by the number of
/// zero bits, or `None` when amplitudes with the same bit count differ.
pub fn symmetric_coefficients(z: &[Complex64], n: u32) -> Option<Vec<Complex64>> {
    let scale = z.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let tol = 1e-12 * scale;
    let mut d: Vec<Option<Complex64>> = vec![None; n as usize + 1];
    for (x, &amp) in z.iter().enumerate() {
        let m = (n - x.count_ones()) as usize;
        match d[m] {
            None => d[m] = Some(amp),
            Some(first) if (first - amp).norm() > tol => return None,
            Some(_) => {}
        }
    }
    Some(d.into_iter().map(|c| c.unwrap_or_default()).collect())
}

fn binomials(n: u32) -> Vec<f64> {
    let mut row = vec![1.0f64];
    for k in 1..=n as usize {
        let prev = row[k - 1];
        row.push(prev * (n as usize + 1 - k) as f64 / k as f64);
    }
    row
}

struct SymmetricOverlap {
    /// `binom(n, m) conj(d_m)`
    weights: Vec<Complex64>,
    row: Vec<Complex64>,
}

impl SymmetricOverlap {
    fn new(d: &[Complex64], n: u32) -> Self {
        let weights: Vec<Complex64> = binomials(n)
            .iter()
            .zip(d)
            .map(|(b, c)| c.conj() * *b)
            .collect();
        let row = weights.clone();
        Self { weights, row }
    }

    /// Fold `cos(b/2)^{n-m}` into the weights for one polar angle.
    fn set_row(&mut self, half_beta_cos: f64) {
        let n = self.weights.len() - 1;
        let mut g = 1.0;
        for m in (0..=n).rev() {
            self.row[m] = self.weights[m] * g;
            g *= half_beta_cos;
        }
    }

    /// `|sum_m w_m alpha^m gamma^{n-m}|^2` by Horner in `alpha`.
    fn probability(&self, alpha: Complex64) -> f64 {
        let n = self.row.len() - 1;
        let mut p = self.row[n];
        for m in (0..n).rev() {
            p = p * alpha + self.row[m];
        }
        p.norm_sqr()
    }
}

fn symmetric_scan(d: &[Complex64], n: u32, opts: &OracleOptions) -> EntanglementResult {
    let mut ov = SymmetricOverlap::new(d, n);
    let res = opts.resolution;
    let beta_step = PI / (res - 1) as f64;
    let chi_step = 2.0 * PI / res as f64;
    let phases: Vec<Complex64> = (0..res)
        .map(|j| Complex64::from_polar(1.0, j as f64 * chi_step))
        .collect();

    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for i in 0..res {
        let beta = i as f64 * beta_step;
        let (s, c) = (beta / 2.0).sin_cos();
        ov.set_row(c);
        for (j, ph) in phases.iter().enumerate() {
            let p = ov.probability(ph * s);
            if p > best.0 {
                best = (p, beta, j as f64 * chi_step);
            }
        }
    }

    let k = opts.refine;
    let (_, beta0, chi0) = best;
    for a in 0..k {
        let beta = (beta0 - beta_step + 2.0 * beta_step * a as f64 / (k - 1) as f64).clamp(0.0, PI);
        let (s, c) = (beta / 2.0).sin_cos();
        ov.set_row(c);
        for b in 0..k {
            let chi = chi0 - chi_step + 2.0 * chi_step * b as f64 / (k - 1) as f64;
            let p = ov.probability(Complex64::from_polar(s, chi));
            if p > best.0 {
                best = (p, beta, chi);
            }
        }
    }

    let (p, beta, chi) = best;
    EntanglementResult {
        e: distance_from_overlap(p),
        r_star: (beta / 2.0).tan(),
        chi_star: wrap_angle(chi),
        method: Method::Oracle,
        root_count: 0,
    }
}

fn wrap_angle(a: f64) -> f64 {
    let w = a - 2.0 * PI * (a / (2.0 * PI)).floor();
    if w >= 2.0 * PI {
        0.0
    } else {
        w
    }
}

fn bit(x: usize, q: usize, n: usize) -> usize {
    (x >> (n - 1 - q)) & 1
}

/// Overlap contraction `c_b = sum_{x : bit_q(x) = b} conj(z_x) prod_{p != q} f_p[bit_p(x)]`.
fn contract(z: &[Complex64], factors: &[[Complex64; 2]], q: usize) -> [Complex64; 2] {
    let n = factors.len();
    let mut c = [Complex64::new(0.0, 0.0); 2];
    for (x, amp) in z.iter().enumerate() {
        let mut prod = amp.conj();
        for (p, f) in factors.iter().enumerate() {
            if p != q {
                prod *= f[bit(x, p, n)];
            }
        }
        c[bit(x, q, n)] += prod;
    }
    c
}

fn multistart(z: &[Complex64], n: u32, opts: &OracleOptions) -> Result<EntanglementResult> {
    let n = n as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best_p = f64::NEG_INFINITY;
    let mut best_factor = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];

    for _ in 0..opts.starts {
        let mut factors: Vec<[Complex64; 2]> = (0..n)
            .map(|_| {
                let polar = (1.0 - 2.0 * rng.random::<f64>()).clamp(-1.0, 1.0).acos();
                let azimuth = 2.0 * PI * rng.random::<f64>();
                let (s, c) = (polar / 2.0).sin_cos();
                [Complex64::new(c, 0.0), Complex64::from_polar(s, azimuth)]
            })
            .collect();

        let mut p = 0.0f64;
        let mut converged = false;
        for _ in 0..opts.max_sweeps {
            let before = p;
            for q in 0..n {
                let c = contract(z, &factors, q);
                let len = (c[0].norm_sqr() + c[1].norm_sqr()).sqrt();
                if len > 0.0 {
                    factors[q] = [c[0].conj() / len, c[1].conj() / len];
                }
                p = len * len;
            }
            if (p - before).abs() <= opts.tol {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Numerical("multistart ascent did not converge"));
        }
        if p > best_p {
            best_p = p;
            best_factor = factors[0];
        }
    }

    let (r_star, chi_star) = if best_factor[1].norm() > 0.0 {
        let v = best_factor[0] / best_factor[1];
        (v.norm(), wrap_angle(v.arg()))
    } else {
        (f64::INFINITY, 0.0)
    };
    Ok(EntanglementResult {
        e: distance_from_overlap(best_p),
        r_star,
        chi_star,
        method: Method::Oracle,
        root_count: 0,
    })
}
