//! Monte Carlo laboratory for stochastic differential equations with rough
//! coefficients.
//!
//! The crate is organised around a handful of building blocks:
//!
//! * [`noise`] — reproducible Brownian paths on uniform grids, with
//!   Brownian-bridge refinement so one underlying Wiener path can be viewed
//!   at several resolutions.
//! * [`field`] / [`grid`] / [`norms`] / [`mollify`] — coefficient fields,
//!   their lattice samplings, mixed Lebesgue and (negative) Sobolev norms
//!   computed spectrally, and smoothing families with certified C¹ bounds.
//! * [`sde`] — pathwise Euler-Maruyama solvers (plain, coefficient-freezing
//!   and Stratonovich) together with closed-form oracles.
//! * [`wz`] — piecewise-smooth approximations of the Wiener process, their
//!   correction-matrix statistics and the driven random ODE.
//! * [`measure`] / [`mkv`] — empirical measures, exact Wasserstein
//!   distances and two solvers for distribution-dependent SDEs.
//! * [`stability`] — coupled-noise error measurements and perturbation
//!   scans against coefficient norms.
//! * [`report`] — convergence tables, log-log rate fitting and CSV/JSON
//!   emission.

pub mod error;
pub mod exponents;
pub mod field;
pub mod grid;
pub mod measure;
pub mod mkv;
pub mod mollify;
pub mod noise;
pub mod norms;
pub mod parallel;
pub mod quadrature;
pub mod report;
pub mod rng;
pub mod sde;
pub mod stability;
pub mod wz;

pub use error::{Error, Result};
