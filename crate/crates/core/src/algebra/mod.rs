//! Exact coefficient rings and truncated-series arithmetic.

pub mod laurent;
pub mod matrix;
pub mod multi;
pub mod poly;
pub mod power_series;
pub mod ratfunc;
pub mod ring;
pub mod sympoly;

pub use laurent::{series_arith, LaurentSeries, SeriesOp};
pub use matrix::ResolventMatrix;
pub use multi::{cycle_denominator_coeff, MultiSeries};
pub use poly::Poly;
pub use power_series::{series_compose, PowerSeries, SeriesCompose};
pub use ratfunc::RatFunc;
pub use ring::{binomial, double_factorial, factorial, Field, Ring};
pub use sympoly::{SymKind, SymPoly, Symbol};
