//! Exact λ-umbral calculus over the rationals.
//!
//! The free commutative Baxter algebra `U_λ C` of weight λ on one
//! generator, λ-divided-power and λ-binomial pseudo-bases of formal power
//! series, the λ-pairing between them, and numerical verification of the
//! structural identities that tie these together. All arithmetic is exact.

pub mod baxter;
pub mod bivariate;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod parser;
pub mod ring;
pub mod series;
pub mod umbral;
pub mod verify;

pub use baxter::{BaxterElement, ElementBasis};
pub use bivariate::BiSeries;
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use ring::Rational;
pub use series::{Series, Var};
