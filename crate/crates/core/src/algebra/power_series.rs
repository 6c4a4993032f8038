//! Power series in one variable `s`, truncated after a fixed order.

use std::fmt;

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct PowerSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> PowerSeries<F> {
    /// Series with coefficients of `s^0 ..= s^order`; missing entries are zero.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: F, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `c s^k`.
    pub fn monomial(c: F, k: usize, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: F) {
        self.coeffs[k] = c;
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> PowerSeries<G> {
        PowerSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add_ref(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub_ref(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg_ref())
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|c| c.mul_ref(k))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                out[i + j].add_mul_assign(a, b);
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(F::one(), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `s`.
    pub fn mul_s(&self) -> Self {
        let mut coeffs = vec![F::zero()];
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        PowerSeries { coeffs }
    }
}

impl<F: Field> PowerSeries<F> {
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].inv().ok_or(Error::NotInvertible)?;
        let n = self.coeffs.len();
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k {
                acc.add_mul_assign(&self.coeffs[j], &out[k - j]);
            }
            out.push(acc.mul_ref(&c0).neg_ref());
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    /// `log(1 + f)` for `f(0) = 0`.
    pub fn log1p(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // (1 + f) L' = f'  =>  n L_n = n f_n - Σ_{k=1}^{n-1} k L_k f_{n-k}
        let n = self.coeffs.len();
        let mut l = vec![F::zero(); n];
        for m in 1..n {
            let mut acc = self.coeffs[m].scale_i64(m as i64);
            for k in 1..m {
                let t = l[k].scale_i64(k as i64).mul_ref(&self.coeffs[m - k]);
                acc.sub_assign_ref(&t);
            }
            l[m] = acc.mul_ref(&F::from_ratio(1, m as i64));
        }
        Ok(PowerSeries { coeffs: l })
    }

    /// `sqrt(1 + f)` for `f(0) = 0`.
    pub fn sqrt1p(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // g^2 = 1 + f  =>  2 g_n = f_n - Σ_{k=1}^{n-1} g_k g_{n-k}
        let n = self.coeffs.len();
        let half = F::from_ratio(1, 2);
        let mut g = vec![F::zero(); n];
        g[0] = F::one();
        for m in 1..n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..m {
                let t = g[k].mul_ref(&g[m - k]);
                acc.sub_assign_ref(&t);
            }
            g[m] = acc.mul_ref(&half);
        }
        Ok(PowerSeries { coeffs: g })
    }
}

/// Formal composition kinds exposed as one entry point; `Derivative` applies `d`
/// to every coefficient (e.g. a derivative in another variable).
pub enum SeriesCompose<'a, F> {
    Log1p,
    Sqrt1p,
    Derivative(&'a dyn Fn(&F) -> F),
}

pub fn series_compose<F: Field>(kind: SeriesCompose<'_, F>, f: &PowerSeries<F>) -> Result<PowerSeries<F>> {
    match kind {
        SeriesCompose::Log1p => f.log1p(),
        SeriesCompose::Sqrt1p => f.sqrt1p(),
        SeriesCompose::Derivative(d) => Ok(f.map(d)),
    }
}

impl<F: Ring> fmt::Debug for PowerSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            m.entry(&k, c);
        }
        m.finish()?;
        write!(f, " + O(s^{})", self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ps(c: &[(i64, i64)], order: usize) -> PowerSeries<BigRational> {
        PowerSeries::new(c.iter().map(|&(n, d)| q(n, d)).collect(), order)
    }

    #[test]
    fn log1p_of_zero() {
        assert_eq!(PowerSeries::<BigRational>::zero(6).log1p().unwrap(), PowerSeries::zero(6));
    }

    #[test]
    fn sqrt1p_perfect_square() {
        // sqrt(1 + 2s + s^2) = 1 + s
        let f = ps(&[(0, 1), (2, 1), (1, 1)], 8);
        assert_eq!(f.sqrt1p().unwrap(), ps(&[(1, 1), (1, 1)], 8));
    }

    #[test]
    fn log1p_known_series() {
        // log(1 + s) = s - s^2/2 + s^3/3 - ...
        let f = ps(&[(0, 1), (1, 1)], 4);
        assert_eq!(f.log1p().unwrap(), ps(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4)], 4));
    }

    #[test]
    fn nonzero_constant_is_rejected() {
        let f = ps(&[(1, 1)], 3);
        assert_eq!(f.log1p(), Err(Error::NonzeroConstantTerm));
        assert_eq!(f.sqrt1p(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn inverse_round_trip() {
        let f = ps(&[(2, 1), (3, 1), (0, 1), (-5, 7)], 6);
        let one = f.mul(&f.inverse().unwrap());
        assert_eq!(one, ps(&[(1, 1)], 6));
    }
}
