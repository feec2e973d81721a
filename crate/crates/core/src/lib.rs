//! Exact computation of multiplier ideals and jumping numbers of meromorphic
//! germs f/g of plane curves.
//!
//! Given two bivariate polynomial germs f and g with exact rational
//! coefficients, this crate computes
//!
//! * the minimal log resolution of the meromorphic germ f/g as combinatorial
//!   data (proximity matrix, canonical values, value vectors of f and g,
//!   dicritical components, affine branch attachments),
//! * the complete ordered sequence of 0-jumping numbers together with the
//!   antinef divisors of the corresponding multiplier ideals,
//! * explicit polynomial generators for each multiplier ideal,
//! * executable checks of the structural results (Skoda shift, colon formula,
//!   integer jumping numbers, integer-only tail threshold).
//!
//! All arithmetic is exact: arbitrary-precision rationals, and simple
//! algebraic extension towers where blow-up centers have irrational
//! coordinates. No operation in the kernel ever constructs a floating-point
//! value.
//!
//! The crate is organized along the pipeline:
//!
//! * [`field`], [`poly`], [`alg`] — exact arithmetic substrate: coefficient
//!   fields, dense/sparse polynomials, univariate factorization over the
//!   rationals and over extension towers.
//! * [`puiseux`] — Newton polygons and Puiseux branch expansions.
//! * [`resolution`] — the blow-up engine producing [`resolution::ResolutionData`].
//! * [`divisor`] — divisor arithmetic on a fixed resolution: intersection
//!   numbers, antinef test, unloading, Zariski factorization.
//! * [`multiplier`] — the jumping-number engine and the Skoda/colon/threshold
//!   operations.
//! * [`generators`] — polynomial generators of complete ideals.
//! * [`cli`] — command line front end (also exposed through the `meromul`
//!   binary).

pub mod alg;
pub mod cli;
pub mod divisor;
pub mod error;
pub mod field;
pub mod generators;
pub mod linalg;
pub mod multiplier;
pub mod poly;
pub mod puiseux;
pub mod resolution;

/// Arbitrary-precision rational number, the base coefficient field.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Bivariate polynomial over the rationals (the input germs).
pub type QPoly = poly::BivariatePoly<Rat>;

/// Univariate polynomial over the rationals.
pub type QUniPoly = poly::UniPoly<Rat>;
