//! Exact SO(3) Verlinde dimension polynomials and the skein-module lower bound
//! for `Σ_g × S¹`.
//!
//! Everything in this crate is exact: scalars are arbitrary-precision
//! rationals, polynomials carry rational coefficients, and root-of-unity
//! evaluations happen in the cyclotomic field `Q(ζ_{2p})`. The crate is
//! `no_std` and only needs `alloc`; IO, serialization and the command line
//! live in the companion `so3-verlinde-cli` crate.
//!
//! Module map:
//! - [`exact`]: rationals, univariate/bivariate polynomials, truncated power
//!   series with polynomial coefficients, exact matrix rank.
//! - [`bernoulli`]: Bernoulli numbers and polynomials, Faulhaber sums.
//! - [`skein`]: the solid-torus skein algebra in the `e`-basis and exact
//!   evaluation of quantum integers, `D²` and curve invariants.
//! - [`verlinde`]: residue-formula Verlinde polynomials, their decomposition
//!   by powers of `p`, structural checks and the fusion-rule oracle.
//! - [`certify`]: assembly of the `2^{2g+1}+2g−1` lower-bound certificate.
#![no_std]

extern crate alloc;

pub mod bernoulli;
pub mod certify;
pub mod error;
pub mod exact;
pub mod skein;
pub mod verlinde;

pub use error::{Error, Result};
pub use exact::{BivariatePolynomial, Degree, ExactRational, RationalMatrix, TruncatedSeries, UnivariatePolynomial};
