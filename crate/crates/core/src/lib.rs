//! Orthogonal polynomials on the unit circle for Fisher-Hartwig weights.
//!
//! The library computes the Szegő polynomials of a weight
//!
//! ```text
//! W(z) = w(z) * prod_k |z - a_k|^(2 beta_k),   |z| = 1,  |a_k| = 1,  beta_k > -1/2,
//! ```
//!
//! exactly from moments (Levinson recursion on the Toeplitz moment matrix),
//! builds the Szegő/scattering data of the weight (branch-cut aware), and
//! evaluates the closed-form asymptotic predictors for the monic polynomials,
//! their Verblunsky and leading coefficients, Toeplitz determinants, level
//! curves and zero locations. Everything runs at a configurable binary
//! precision (53/113/237 bits) on MPFR.
//!
//! Modules follow the pipeline: [`numerics`] (kernel), [`specfun`] (Bessel and
//! the local function `calH`), [`weight`] (weight definition and moments),
//! [`opuc`] (ground truth), [`szego`] (scattering data), [`asym`] (predictors),
//! [`zeros`] (zero computation and classification).

pub mod asym;
pub mod error;
pub mod num;
pub mod numerics;
pub mod opuc;
pub mod par;
pub mod specfun;
pub mod szego;
pub mod weight;
pub mod zeros;

pub use error::{Error, Result};
pub use num::{Cx, Precision};

pub use rug;
