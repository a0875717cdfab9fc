//! Geometry of quantum search on complex projective space.
//!
//! States are handled as rays: homogeneous coordinates up to a nonzero
//! complex scale. On top of the Fubini-Study distance this crate builds
//!
//! - [`ray`]: rays, unit vectors, inhomogeneous charts, geodesics and the
//!   horizontality diagnostic;
//! - [`grover`]: Grover iterates in closed form and by reflections, the
//!   generalized kernel `-I_y I_w` and the search-time calculus;
//! - [`segre`]: Segre embedding, its quadric system, and separability
//!   certification with constructive factorization;
//! - [`entanglement`]: the geometric entanglement measure along the Grover
//!   path (closed form, root finding, first-order approximation and an
//!   independent grid/multistart oracle) and the two-qubit measures
//!   built from the reduced density matrix.
//!
//! The crate is `no_std` and needs `alloc`. Floating point functions come
//! from `std` (default feature) or from `libm`.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations, rust_2018_idioms)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("enable either the `std` or the `libm` feature");

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod entanglement;
mod error;
pub mod grover;
pub(crate) mod linalg;
pub mod ray;
pub mod segre;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use ray::{InhomogeneousChart, Ray, UnitVector};
