//! Exact determinantal and Pfaffian formulas for resultants and Chow forms.
//!
//! The crate builds Bézout matrices in Plücker coordinates, Sylvester-type
//! matrices in Stiefel coordinates, Chow forms of linear determinantal
//! varieties from Eagon-Northcott resolutions, and hyperelliptic resultants,
//! together with independent common-zero oracles for each of them.
//!
//! All arithmetic is exact. Core algorithms are generic over [`Ring`]; the
//! aliases below fix the two scalar fields used in practice.

pub mod binary;
pub mod determinantal;
pub mod error;
pub mod exterior;
pub mod fixtures;
pub mod grassmann;
pub mod hyperelliptic;
pub mod matrix;
pub mod poly;
pub mod proportional;
pub mod ring;
pub mod sample;
pub mod suites;
pub mod ternary;
pub mod veronese;

pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use poly::{gcd_univariate, SparsePoly};
pub use ring::{Field, Fp, PrimeField, Rational, Ring, Scalar, DEFAULT_PRIME};

/// Polynomials with rational coefficients.
pub type QPoly = SparsePoly<Rational>;
/// Polynomials over a prime field.
pub type FpPoly = SparsePoly<Fp>;
/// Rational matrices.
pub type QMatrix = DenseMatrix<Rational>;
/// Prime-field matrices.
pub type FpMatrix = DenseMatrix<Fp>;
/// Exterior algebra elements with rational coefficients.
pub type QExt = exterior::ExtElement<Rational>;
/// Stiefel matrices over the default prime field.
pub type FpStiefel = grassmann::StiefelMatrix<Fp>;
/// Bracket polynomials with rational coefficients.
pub type QBracketPoly = grassmann::BracketPoly<Rational>;
