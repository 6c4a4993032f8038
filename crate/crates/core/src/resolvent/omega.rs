//! Second logarithmic derivatives `Ω_{i;j}(n)` of the tau-function.

use crate::algebra::ring::Ring;
use crate::algebra::{MultiSeries, ResolventMatrix};
use crate::error::{Error, Result};

use super::general::{build_general_resolvent, LatticeData};

/// `Ω_{i;j}` for `0 <= i <= imax`, `0 <= j <= jmax`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaTable<C> {
    values: Vec<Vec<C>>,
}

impl<C: Ring> OmegaTable<C> {
    pub fn get(&self, i: usize, j: usize) -> Option<&C> {
        self.values.get(i).and_then(|r| r.get(j))
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.values
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|i| (0..n).all(|j| match (self.get(i, j), self.get(j, i)) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }))
    }
}

/// `(tr R(λ_1) R(λ_2) - 1) / (λ_1 - λ_2)^2`, with `λ_1^{-a} λ_2^{-b}` known for `a + b <= depth + 2`.
pub fn two_point_quotient<C: Ring>(r: &ResolventMatrix<C>) -> Result<MultiSeries<C>> {
    let depth = -r.known_from().unwrap_or(0);
    let windows = vec![(-depth, 0), (-depth, 0)];
    let pairs = [(&r.e11, &r.e11), (&r.e12, &r.e21), (&r.e21, &r.e12), (&r.e22, &r.e22)];
    let mut s = MultiSeries::new(windows.clone());
    for (x, y) in pairs {
        s = s.add(&MultiSeries::outer_product(&[x, y], windows.clone())?);
    }
    s.add_term(vec![0, 0], &C::one().neg_ref());
    s.divide_by_square_diff()
}

/// Reads `Ω_{i;j}(n)` off the two-point quotient of `R_n`.
pub fn compute_omega<C: Ring>(data: &LatticeData<C>, n: i64, imax: usize, jmax: usize) -> Result<OmegaTable<C>> {
    let depth = imax + jmax + 4;
    let r = build_general_resolvent(data, n, depth)?;
    let t = two_point_quotient(&r)?;
    let mut values = Vec::with_capacity(imax + 1);
    for i in 0..=imax {
        let mut row = Vec::with_capacity(jmax + 1);
        for j in 0..=jmax {
            row.push(t.coeff(&[-(i as i64) - 2, -(j as i64) - 2])?);
        }
        values.push(row);
    }
    let table = OmegaTable { values };
    if !table.is_symmetric() {
        return Err(Error::Consistency("Ω table is not symmetric".into()));
    }
    Ok(table)
}
