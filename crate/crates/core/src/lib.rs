//! Biharmonic Steklov eigenproblems on thin domains.
//!
//! The crate assembles and solves two discrete problems:
//!
//! * the two-dimensional Steklov problem for the biharmonic operator on the
//!   thin strip `{(x1, x2) : |x1| < l, |x2| < eps * rho(x1)}`, discretized with
//!   Bogner-Fox-Schmidt bicubics on a fixed reference rectangle ([`plate2d`]);
//! * the clamped fourth-order Sturm-Liouville problem that governs the
//!   `eps -> 0` limit, for any dimension `n >= 2`, discretized with Hermite
//!   cubics ([`sturm1d`]).
//!
//! Both reduce to symmetric pencils handled by [`pencil`]. The [`lab`] module
//! runs epsilon sweeps comparing the two and writes CSV/JSON reports.

pub mod constants;
pub mod error;
pub mod hermite;
pub mod lab;
pub mod params;
pub mod pencil;
pub mod plate2d;
pub mod profile;
pub mod quadrature;
pub mod sturm1d;

pub use constants::{distortion_factor, n_factor, unit_ball_volume, DerivedConstants};
pub use error::{Error, Result};
pub use params::{validate_params, ProblemParams};
pub use pencil::EigenSolution;
pub use profile::{Profile, ProfileKind};
