//! Exact expansions of real-analytic Eisenstein series and their iterated integrals.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_arith`]: rationals, Bernoulli numbers, divisor sums and the single-valued
//!   zeta coefficient ring [`SvScalar`].
//! * [`sl2rep`]: binary forms with the `SL₂` action and the `δ^k` operators.
//! * [`qseries`]: truncated `q, q̄, 𝕃` expansions, Maass operators and log-series.
//! * [`raeis`]: the real-analytic Eisenstein family and vector/component conversions.
//! * [`freelie`]: the free Lie algebra on `a, b` and the Tsunogai derivations.
//! * [`pls`]: the `ρ` map into rational functions and linearized double shuffle.
//! * [`itereis`]: iterated Eisenstein integrals, the monodromy image and length-one
//!   equivariant series.
//! * [`lfun`]: completed L-functions and exact identities.
//! * [`linalg`] and [`poly`]: exact sparse elimination and multivariate polynomials.
//! * [`acceptance`]: the numbered acceptance criteria, shared by tests and the CLI.

#![forbid(unsafe_code)]

pub mod acceptance;
pub mod error;
pub mod exact_arith;
pub mod freelie;
pub mod itereis;
pub mod lfun;
pub mod linalg;
pub mod pls;
pub mod poly;
pub mod qseries;
pub mod raeis;
pub mod sl2rep;

pub use acceptance::{AcceptanceConfig, CriterionResult};
pub use error::{Error, Result};
pub use exact_arith::{bernoulli, sigma, sv_eval, Coeff, Rational, SvGen, SvScalar};
pub use freelie::{DerivationTheta, LieElement, Variant};
pub use itereis::{EisLetter, EpsLetter, GroupSeries};
pub use lfun::{LSeriesData, LambdaValue};
pub use pls::{RatFn, RhoConvention};
pub use poly::Poly;
pub use qseries::{BiSeries, Direction, ExtendedSeries, HolLogSeries};
pub use raeis::VectorModularForm;
pub use sl2rep::{Basis, HomPoly, Sl2Matrix};
