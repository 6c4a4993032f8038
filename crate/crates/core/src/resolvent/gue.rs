//! Closed-form GUE resolvent `𝓡_n(λ)` with entries in `Z[n]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hypergeometric::{hyp_a, hyp_b};
use crate::algebra::ring::{double_factorial, Ring};
use crate::algebra::{LaurentSeries, Poly, ResolventMatrix};
use crate::error::{Error, Result};
use crate::{GueResolvent, PolyN, PolyQ};

/// The three independent entries of a resolvent: `e11 = 1 + α`, `e12 = β`, `e21 = γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolventEntries<C: Ring> {
    pub alpha: LaurentSeries<C>,
    pub beta: LaurentSeries<C>,
    pub gamma: LaurentSeries<C>,
}

impl<C: Ring> ResolventEntries<C> {
    pub fn from_matrix(r: &ResolventMatrix<C>) -> Self {
        ResolventEntries {
            alpha: r.e11.sub_ref(&LaurentSeries::constant(C::one())),
            beta: r.e12.clone(),
            gamma: r.e21.clone(),
        }
    }

    pub fn to_matrix(&self) -> ResolventMatrix<C> {
        let one = LaurentSeries::constant(C::one());
        ResolventMatrix::new(self.alpha.add_ref(&one), self.beta.clone(), self.gamma.clone(), self.alpha.neg_ref())
    }
}

fn integral(p: PolyQ, what: &str) -> Result<PolyN> {
    p.to_integer().ok_or_else(|| Error::Consistency(format!("{what} is not in Z[n]")))
}

/// `𝓡_n(λ)` as series in `λ` with coefficients in `Z[n]`, exact for exponents `>= -depth`.
pub fn build_gue_resolvent(depth: usize) -> Result<GueResolvent> {
    if depth == 0 {
        return Err(Error::InvalidInput("resolvent depth must be at least 1".into()));
    }
    let d = depth as i64;
    let n = PolyQ::var();
    let mut e11 = vec![PolyN::zero(); depth + 1];
    let mut e12 = vec![PolyN::zero(); depth + 1];
    let mut e21 = vec![PolyN::zero(); depth + 1];
    e11[depth] = PolyN::one();
    // slot k holds the coefficient of λ^{k - depth}
    let slot = |e: i64| (e + d) as usize;
    let mut j = 0i64;
    while 2 * j + 1 <= d {
        let df = BigRational::from_integer(double_factorial(2 * j - 1));
        let b = hyp_b(j as u64);
        e21[slot(-2 * j - 1)] = integral(b.scale(&df), "γ coefficient")?;
        let bn1 = b.shift(1).mul_ref(&n).scale(&(-df.clone()));
        e12[slot(-2 * j - 1)] = integral(bn1, "β coefficient")?;
        if 2 * j + 2 <= d {
            let odd = BigRational::from_integer(BigInt::from(2 * j + 1));
            let a = hyp_a(j as u64).mul_ref(&n).scale(&(df * odd));
            e11[slot(-2 * j - 2)] = integral(a, "α coefficient")?;
        }
        j += 1;
    }
    let ser = |c: Vec<PolyN>| LaurentSeries::from_fn(-d, 0, |e| c[slot(e)].clone());
    let e11 = ser(e11);
    let e22 = LaurentSeries::constant(PolyN::one()).sub_ref(&e11);
    Ok(ResolventMatrix::new(e11, ser(e12), ser(e21), e22))
}

/// `𝓡_n(λ)` at a fixed integer site.
pub fn gue_resolvent_at(n: i64, depth: usize) -> Result<ResolventMatrix<BigInt>> {
    let r = build_gue_resolvent(depth)?;
    let x = BigInt::from(n);
    Ok(r.map_coeffs(|p: &PolyN| p.eval(&x)))
}

/// Checks `(n+2) γ_{n+3} = (λ^2 - (n+1))(γ_{n+2} - γ_{n+1}) + n γ_n` coefficient-wise
/// for the symbolic `γ`, to the precision of `depth`.
pub fn check_gamma_recursion(depth: usize) -> Result<bool> {
    let r = build_gue_resolvent(depth + 2)?;
    let g = &r.e21;
    let shifted = |k: i64| g.map(|p: &PolyN| p.shift(k));
    let lin = |c: i64, s: i64| Poly::new(vec![BigInt::from(c), BigInt::from(s)]);
    let lhs = shifted(3).scale(&lin(2, 1));
    let diff = shifted(2).sub_ref(&shifted(1));
    let quad = LaurentSeries::exact(0, vec![lin(-1, -1), PolyN::zero(), PolyN::one()]);
    let rhs = quad.mul_ref(&diff).add_ref(&g.scale(&PolyN::var()));
    Ok(lhs.sub_ref(&rhs).truncate(-(depth as i64)).is_zero_to_precision())
}
