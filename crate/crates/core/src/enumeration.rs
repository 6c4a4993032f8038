//! Ribbon-graph counts read off connected correlators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::ring::factorial;
use crate::correlators::{correlator, mixed_correlator, one_point, two_point_closed_form};
use crate::error::{Error, Result};
use crate::PolyN;

/// `n_{g,b,k}` for one `(b, k)`, indexed by genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonTable {
    pub valence: u32,
    pub vertices: u32,
    counts: Vec<BigInt>,
}

impl PolygonTable {
    /// Count at genus `g`, zero outside the computed range.
    pub fn get(&self, g: usize) -> BigInt {
        self.counts.get(g).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Largest genus allowed by `g <= k(b-2)/4 + 1/2`.
    pub fn max_genus(&self) -> usize {
        max_genus(self.valence, self.vertices)
    }

    /// `Σ_g n_g N^{2-2g+(b/2-1)k}`.
    pub fn to_poly(&self) -> PolyN {
        let mut c = Vec::new();
        for (g, n) in self.counts.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let d = top_exponent(self.valence as i64 * self.vertices as i64, self.vertices as i64) - 2 * g as i64;
            let d = d as usize;
            if c.len() <= d {
                c.resize(d + 1, BigInt::zero());
            }
            c[d] = n.clone();
        }
        PolyN::new(c)
    }
}

fn max_genus(b: u32, k: u32) -> usize {
    ((k as i64 * (b as i64 - 2) + 2) / 4).max(0) as usize
}

/// `2 - k + Σi/2`, the exponent of `N` at genus zero.
fn top_exponent(total: i64, k: i64) -> i64 {
    2 - k + total / 2
}

/// Splits a correlator into genus buckets, failing on any coefficient off the bucket pattern.
fn buckets(p: &PolyN, total: i64, k: i64) -> Result<Vec<BigInt>> {
    let top = top_exponent(total, k);
    let mut out = Vec::new();
    for (d, c) in p.terms() {
        if c.is_zero() {
            continue;
        }
        let gap = top - d as i64;
        if gap < 0 || gap % 2 != 0 {
            return Err(Error::Consistency(format!("coefficient at N^{d} does not fit a genus (top exponent {top})")));
        }
        if c.is_negative() {
            return Err(Error::Consistency(format!("negative count at N^{d}")));
        }
        let g = (gap / 2) as usize;
        if out.len() <= g {
            out.resize(g + 1, BigInt::zero());
        }
        out[g] = c.clone();
    }
    Ok(out)
}

/// `<(tr M^b)^k>_c`, using the closed forms for `k <= 2`.
pub fn polygon_correlator(b: u32, k: u32) -> Result<PolyN> {
    match k {
        0 => Err(Error::InvalidInput("k must be at least 1".into())),
        1 => one_point(b),
        2 => two_point_closed_form(b, b),
        _ => mixed_correlator(b, k - 2, b, b),
    }
}

/// Labelled `b`-gon counts `n_{g,b,k}` for all genera.
pub fn polygon_numbers(b: u32, k: u32) -> Result<PolygonTable> {
    if b < 1 {
        return Err(Error::InvalidInput("valence must be positive".into()));
    }
    let p = polygon_correlator(b, k)?;
    let mut counts = buckets(&p, b as i64 * k as i64, k as i64)?;
    let gmax = max_genus(b, k);
    if counts.len() > gmax + 1 {
        return Err(Error::Consistency(format!("genus {} exceeds the bound {gmax}", counts.len() - 1)));
    }
    if (b * k) % 2 == 0 {
        counts.resize(gmax + 1, BigInt::zero());
    }
    Ok(PolygonTable { valence: b, vertices: k, counts })
}

/// `a_g(i_1..i_k)`: the genus-`g` coefficient of the connected correlator over `k!`.
pub fn weighted_count(g: usize, exps: &[u32]) -> Result<BigRational> {
    let total: i64 = exps.iter().map(|&i| i as i64).sum();
    if total % 2 != 0 {
        return Ok(BigRational::zero());
    }
    let p = correlator(exps)?;
    let counts = buckets(&p, total, exps.len() as i64)?;
    let c = counts.get(g).cloned().unwrap_or_default();
    Ok(BigRational::new(c, factorial(exps.len() as u64)))
}
