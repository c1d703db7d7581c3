//! Bound-state spectrum and wavefunctions of the D-dimensional Schrödinger
//! equation with the hyperbolic Pöschl–Teller potential plus a generalized
//! ring-shaped term,
//!
//! ```text
//! V(r, θ) = A tanh²(λr) + B / tanh²(λr) + (γ cot²θ + ζ cotθ cscθ + κ csc²θ) / r²
//! ```
//!
//! solved in closed form with the Nikiforov–Uvarov method, together with the
//! independent numerical machinery (finite-difference eigensolvers and
//! quadrature) that checks every closed-form result.
//!
//! Module map:
//!
//! * [`specfun`]: Jacobi polynomials, log-gamma, binomials, terminating ₃F₂.
//! * [`geometry`]: hyperspherical coordinates and separation constants.
//! * [`radial`]: Pekeris-type approximation, reduced parameters, spectrum,
//!   wavefunctions, normalization, Gram–Schmidt, and the oscillator limit.
//! * [`angular`]: the intermediate-angle and ring-shaped θ_{D−1} sectors,
//!   including the four special cases.
//! * [`oracle`]: finite-difference eigensolvers, quadrature, approximation
//!   error scans.
//! * [`batch`] and [`validate`]: batch tables and the validation suites used
//!   by the command-line front end.

// `!(x > 0.0)` guards are deliberate: they reject NaN along with bad values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod batch;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod oracle;
pub mod radial;
pub mod specfun;
pub mod validate;

pub use error::{Error, Result};
pub use exec::Execution;
