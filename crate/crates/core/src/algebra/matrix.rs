//! 2x2 matrices of truncated Laurent series.

use std::fmt;

use super::laurent::LaurentSeries;
use super::ring::Ring;
use crate::error::Result;

#[derive(Clone, PartialEq)]
pub struct ResolventMatrix<C> {
    pub e11: LaurentSeries<C>,
    pub e12: LaurentSeries<C>,
    pub e21: LaurentSeries<C>,
    pub e22: LaurentSeries<C>,
}

impl<C: Ring> ResolventMatrix<C> {
    pub fn new(e11: LaurentSeries<C>, e12: LaurentSeries<C>, e21: LaurentSeries<C>, e22: LaurentSeries<C>) -> Self {
        ResolventMatrix { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Self::new(LaurentSeries::constant(C::one()), LaurentSeries::zero(), LaurentSeries::zero(), LaurentSeries::constant(C::one()))
    }

    pub fn zero() -> Self {
        Self::new(LaurentSeries::zero(), LaurentSeries::zero(), LaurentSeries::zero(), LaurentSeries::zero())
    }

    pub fn entries(&self) -> [&LaurentSeries<C>; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn map_entries(&self, f: impl Fn(&LaurentSeries<C>) -> LaurentSeries<C>) -> Self {
        Self::new(f(&self.e11), f(&self.e12), f(&self.e21), f(&self.e22))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D + Copy) -> ResolventMatrix<D> {
        ResolventMatrix::new(self.e11.map(f), self.e12.map(f), self.e21.map(f), self.e22.map(f))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.e11 + &o.e11, &self.e12 + &o.e12, &self.e21 + &o.e21, &self.e22 + &o.e22)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.e11 - &o.e11, &self.e12 - &o.e12, &self.e21 - &o.e21, &self.e22 - &o.e22)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &(&self.e11 * &o.e11) + &(&self.e12 * &o.e21),
            &(&self.e11 * &o.e12) + &(&self.e12 * &o.e22),
            &(&self.e21 * &o.e11) + &(&self.e22 * &o.e21),
            &(&self.e21 * &o.e12) + &(&self.e22 * &o.e22),
        )
    }

    /// `[self, o] = self*o - o*self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn scale(&self, k: &C) -> Self {
        self.map_entries(|e| e.scale(k))
    }

    pub fn trace(&self) -> LaurentSeries<C> {
        &self.e11 + &self.e22
    }

    pub fn det(&self) -> LaurentSeries<C> {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21)
    }

    /// `tr(self * o)` without forming the off-diagonal entries of the product.
    pub fn trace_product(&self, o: &Self) -> LaurentSeries<C> {
        let d1 = &(&self.e11 * &o.e11) + &(&self.e12 * &o.e21);
        let d2 = &(&self.e21 * &o.e12) + &(&self.e22 * &o.e22);
        &d1 + &d2
    }

    /// Multiplication of every entry by `λ^b`.
    pub fn shift(&self, b: i64) -> Self {
        self.map_entries(|e| e.shift(b))
    }

    /// Entry-wise polynomial part.
    pub fn positive_part(&self) -> Result<Self> {
        Ok(Self::new(self.e11.positive_part()?, self.e12.positive_part()?, self.e21.positive_part()?, self.e22.positive_part()?))
    }

    pub fn truncate(&self, known_from: i64) -> Self {
        self.map_entries(|e| e.truncate(known_from))
    }

    /// Coarsest precision among the entries (`None` if all exact).
    pub fn known_from(&self) -> Option<i64> {
        self.entries().iter().filter_map(|e| e.known_from()).max()
    }

    /// Coefficient matrix of `λ^e`; `None` if any entry is unknown there.
    pub fn coeff_matrix(&self, e: i64) -> Option<[C; 4]> {
        Some([self.e11.get(e)?, self.e12.get(e)?, self.e21.get(e)?, self.e22.get(e)?])
    }

    pub fn agrees_with(&self, o: &Self) -> bool {
        self.e11.agrees_with(&o.e11) && self.e12.agrees_with(&o.e12) && self.e21.agrees_with(&o.e21) && self.e22.agrees_with(&o.e22)
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero_to_precision())
    }
}

impl<C: Ring> fmt::Debug for ResolventMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ResolventMatrix")
            .field("e11", &self.e11)
            .field("e12", &self.e12)
            .field("e21", &self.e21)
            .field("e22", &self.e22)
            .finish()
    }
}
