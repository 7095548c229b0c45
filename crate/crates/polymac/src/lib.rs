//! Exact weighted tangent-cone decompositions of simple convex polytopes and
//! weighted / twisted Euler-Maclaurin summation formulas.
//!
//! Everything in this crate is computed in exact arithmetic: big rationals
//! ([`rational::Rational`]) and cyclotomic field elements ([`cyclo::CycloNumber`]).
//! There are no tolerances anywhere; every identity check is an equality of
//! field elements.
//!
//! The main layers, bottom up:
//!
//! - [`rational`], [`linalg`]: big-rational scalars, exact dense linear algebra
//!   and Smith normal form over the integers.
//! - [`cyclo`], [`bernoulli`], [`series`], [`multipoly`]: cyclotomic numbers,
//!   Bernoulli numbers/polynomials, truncated power series (Todd-type operator
//!   symbols) and sparse multivariate polynomials.
//! - [`polytope`]: simple convex polytopes from half-space data, vertex
//!   enumeration, the face lattice and tangent-cone generators.
//! - [`decomposition`]: weighted indicator decompositions of a polytope into
//!   polarized tangent cones, with the Lawrence-Varchenko and Brianchon-Gram
//!   specializations, plus pointwise verification against the weighted
//!   indicator of the polytope itself.
//! - [`lattice`]: finite quotient groups attached to the faces of a polytope
//!   (via Smith normal form), root-of-unity data for them and brute-force
//!   weighted lattice-sum oracles.
//! - [`spline`], [`periodic`], [`em1d`]: compactly supported piecewise
//!   polynomial test functions, periodic Bernoulli kernels and their twisted
//!   analogues, and exact one-dimensional Euler-Maclaurin identities with
//!   remainder (interval, half-rays, whole line, twisted half-ray, tensor
//!   sectors).
//! - [`empoly`]: the exact weighted Euler-Maclaurin formula for polynomials on
//!   simple integral polytopes, via symbolic integration over the dilated
//!   polytope and cyclotomic twist operators.
//! - [`samples`], [`cli`], [`config`], [`report`], [`sketch`]: deterministic
//!   sample-point policies, the command line front end, JSON job specs and
//!   reports, and a static SVG sketch emitter for the plane.
//!
//! See the crate `examples/` directory for one runnable program per major
//! capability, and `tests/acceptance.rs` for the end-to-end exactness suite.

pub mod bernoulli;
pub mod cli;
pub mod config;
pub mod cyclo;
pub mod decomposition;
pub mod em1d;
pub mod empoly;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod multipoly;
pub mod periodic;
pub mod polytope;
pub mod rational;
pub mod report;
pub mod samples;
pub mod series;
pub mod sketch;
pub mod spline;

pub use cyclo::CycloNumber;
pub use error::Error;
pub use multipoly::MultiPoly;
pub use polytope::Polytope;
pub use rational::Rational;
pub use series::TruncatedSeries;
