//! Hurwitz-Lerch zeta function Phi(sigma, a, z) for real sigma: evaluation,
//! functional equations, zero localisation on (-1, 0) and Dirichlet-series
//! identities.

pub mod cli;
pub mod error;
pub mod evaluator;
pub mod functional_eq;
pub mod identities;
pub mod kernels;
pub mod quad;
pub mod special;
pub mod sum;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use evaluator::{evaluate, EvalResult, Method, QuadConfig, Route};
pub use special::ComplexValue;
