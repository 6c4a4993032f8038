//! Exact connected GUE correlators from Toda matrix resolvents.
//!
//! Correlators `<tr M^{i_1} ... tr M^{i_k}>_c` come out as polynomials in the
//! matrix size `N` with big-integer coefficients. The crate also counts
//! labelled ribbon graphs, expands the genus 0/1/2 free energies of the
//! triangle model, and carries an independent Wick-pairing oracle.

pub mod algebra;
pub mod correlators;
pub mod enumeration;
pub mod error;
pub mod genus;
pub mod resolvent;
pub mod wick;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Integer = BigInt;
pub type Rational = BigRational;
/// Polynomial in `N` (or the site symbol `n`) with integer coefficients.
pub type PolyN = algebra::Poly<BigInt>;
pub type PolyQ = algebra::Poly<BigRational>;
pub type SymbolPoly = algebra::SymPoly<BigInt>;
pub type GueResolvent = algebra::ResolventMatrix<PolyN>;
pub type Series<C> = algebra::LaurentSeries<C>;
