//! Matrix resolvent of `ψ_{n+1} + v_n ψ_n + w_n ψ_{n-1} = λ ψ_n` for arbitrary lattice data.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::ring::Ring;
use crate::algebra::{LaurentSeries, Poly, ResolventMatrix, SymPoly};
use crate::error::{Error, Result};
use crate::{PolyN, PolyQ, SymbolPoly};

/// Values `v_n`, `w_n` on the sites `lo ..= lo + len - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeData<C> {
    lo: i64,
    v: Vec<C>,
    w: Vec<C>,
}

impl<C: Ring> LatticeData<C> {
    pub fn new(lo: i64, v: Vec<C>, w: Vec<C>) -> Result<Self> {
        if v.len() != w.len() {
            return Err(Error::InvalidInput("v and w must cover the same sites".into()));
        }
        Ok(LatticeData { lo, v, w })
    }

    pub fn from_fn(lo: i64, hi: i64, v: impl Fn(i64) -> C, w: impl Fn(i64) -> C) -> Self {
        LatticeData { lo, v: (lo..=hi).map(&v).collect(), w: (lo..=hi).map(&w).collect() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.v.len() as i64 - 1
    }

    fn idx(&self, n: i64) -> Result<usize> {
        if n < self.lo || n > self.hi() {
            return Err(Error::MissingSite { site: n, lo: self.lo, hi: self.hi() });
        }
        Ok((n - self.lo) as usize)
    }

    pub fn v(&self, n: i64) -> Result<&C> {
        Ok(&self.v[self.idx(n)?])
    }

    pub fn w(&self, n: i64) -> Result<&C> {
        Ok(&self.w[self.idx(n)?])
    }

    /// Errors with the first missing site of `[lo, hi]`.
    pub fn require(&self, lo: i64, hi: i64) -> Result<()> {
        self.idx(lo)?;
        self.idx(hi)?;
        Ok(())
    }
}

impl LatticeData<SymbolPoly> {
    /// Free symbols `v_n`, `w_n` on every site.
    pub fn symbolic(lo: i64, hi: i64) -> Self {
        Self::from_fn(lo, hi, SymPoly::v, SymPoly::w)
    }
}

impl LatticeData<PolyN> {
    /// GUE data `v = 0`, `w_{n+k} = n + k` around a symbolic site `n` (offset `k`).
    pub fn gue(lo: i64, hi: i64) -> Self {
        Self::from_fn(lo, hi, |_| PolyN::zero(), |k| Poly::var_plus(k))
    }
}

/// Sites needed to build `R_{n0}` to depth `depth`.
pub fn required_window(n0: i64, depth: usize) -> (i64, i64) {
    let d = depth as i64;
    (n0 - d - 1, n0 + d + 1)
}

/// Coefficients `c_{n,ℓ}`, `a_{n,ℓ}` of `γ_n = Σ c_{n,ℓ} λ^{-ℓ-1}`, `α_n = Σ a_{n,ℓ} λ^{-ℓ-1}`.
pub struct CoefficientTable<C> {
    levels: usize,
    c: BTreeMap<i64, Vec<C>>,
    a: BTreeMap<i64, Vec<C>>,
}

impl<C: Ring> CoefficientTable<C> {
    /// Levels `0..=levels` on sites `lo..=hi`, filling the dependency cone around them.
    pub fn build(data: &LatticeData<C>, lo: i64, hi: i64, levels: usize) -> Result<Self> {
        let top = levels as i64;
        let mut c: BTreeMap<i64, Vec<C>> = BTreeMap::new();
        let mut a: BTreeMap<i64, Vec<C>> = BTreeMap::new();
        for n in lo - top..=hi + top {
            c.insert(n, vec![C::one()]);
            a.insert(n, vec![C::zero()]);
        }
        for l in 1..=top {
            let (s0, s1) = (lo - (top - l), hi + (top - l));
            let lu = l as usize;
            for n in s0..=s1 {
                let mut cv = data.v(n - 1)?.mul_ref(&c[&n][lu - 1]);
                cv.add_assign_ref(&a[&n][lu - 1]);
                cv.add_assign_ref(&a[&(n - 1)][lu - 1]);
                c.get_mut(&n).unwrap().push(cv);
            }
            for n in s0..=s1 {
                let (cn, cn1, an) = (&c[&n], &c[&(n + 1)], &a[&n]);
                let mut cc = C::zero();
                let mut aa = C::zero();
                for i in 0..lu {
                    cc.add_mul_assign(&cn[i], &cn1[lu - 1 - i]);
                    aa.add_mul_assign(&an[i], &an[lu - 1 - i]);
                }
                let av = data.w(n)?.mul_ref(&cc).sub_ref(&aa);
                a.get_mut(&n).unwrap().push(av);
            }
        }
        Ok(CoefficientTable { levels, c, a })
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    fn get(map: &BTreeMap<i64, Vec<C>>, n: i64, l: usize) -> Result<&C> {
        map.get(&n)
            .and_then(|v| v.get(l))
            .ok_or(Error::Truncated { exponent: -(l as i64) - 1, known_from: -(map.get(&n).map_or(0, |v| v.len()) as i64) })
    }

    pub fn c(&self, n: i64, l: usize) -> Result<&C> {
        Self::get(&self.c, n, l)
    }

    pub fn a(&self, n: i64, l: usize) -> Result<&C> {
        Self::get(&self.a, n, l)
    }

    /// `R_n(λ)` to depth `levels + 1`.
    pub fn resolvent(&self, data: &LatticeData<C>, n: i64) -> Result<ResolventMatrix<C>> {
        let d = self.levels as i64 + 1;
        let ser = |f: &dyn Fn(usize) -> Result<C>| -> Result<LaurentSeries<C>> {
            let mut coeffs = Vec::with_capacity(d as usize + 1);
            for e in -d..=0 {
                coeffs.push(if e == 0 { C::zero() } else { f((-e - 1) as usize)? });
            }
            Ok(LaurentSeries::new(crate::algebra::laurent::DEFAULT_VAR, -d, coeffs, Some(-d)))
        };
        let alpha = ser(&|l| self.a(n, l).cloned())?;
        let gamma = ser(&|l| self.c(n, l).cloned())?;
        let wn = data.w(n)?.clone();
        let beta = ser(&|l| Ok(self.c(n + 1, l)?.mul_ref(&wn).neg_ref()))?;
        let one = LaurentSeries::constant(C::one());
        Ok(ResolventMatrix::new(alpha.add_ref(&one), beta, gamma, alpha.neg_ref()))
    }

    /// Residual of the redundant relation
    /// `a_{n,j+1} - a_{n+1,j+1} + v_n (a_{n+1,j} - a_{n,j}) + w_{n+1} c_{n+2,j} - w_n c_{n,j}`.
    pub fn rec2_residual(&self, data: &LatticeData<C>, n: i64, j: usize) -> Result<C> {
        let mut r = self.a(n, j + 1)?.sub_ref(self.a(n + 1, j + 1)?);
        let d = self.a(n + 1, j)?.sub_ref(self.a(n, j)?);
        r.add_mul_assign(data.v(n)?, &d);
        r.add_mul_assign(data.w(n + 1)?, self.c(n + 2, j)?);
        r.sub_assign_ref(&data.w(n)?.mul_ref(self.c(n, j)?));
        Ok(r)
    }
}

/// `R_{n0}(λ)` to depth `depth` from the recursions for `c_{n,ℓ}` and `a_{n,ℓ}`.
pub fn build_general_resolvent<C: Ring>(data: &LatticeData<C>, n0: i64, depth: usize) -> Result<ResolventMatrix<C>> {
    if depth == 0 {
        return Err(Error::InvalidInput("resolvent depth must be at least 1".into()));
    }
    let (lo, hi) = required_window(n0, depth);
    data.require(lo, hi)?;
    CoefficientTable::build(data, n0, n0 + 1, depth - 1)?.resolvent(data, n0)
}

/// `U_n(λ) = [[v_n - λ, w_n], [-1, 0]]`.
pub fn lax_matrix<C: Ring>(v: &C, w: &C) -> ResolventMatrix<C> {
    let e11 = LaurentSeries::exact(0, vec![v.clone(), C::one().neg_ref()]);
    ResolventMatrix::new(e11, LaurentSeries::constant(w.clone()), LaurentSeries::constant(C::one().neg_ref()), LaurentSeries::zero())
}

/// `R_{n+1} U_n - U_n R_n = 0` to the common precision.
pub fn check_resolvent_equation<C: Ring>(r_n: &ResolventMatrix<C>, r_next: &ResolventMatrix<C>, v_n: &C, w_n: &C) -> bool {
    let u = lax_matrix(v_n, w_n);
    r_next.mul(&u).sub(&u.mul(r_n)).is_zero_to_precision()
}

/// Division by a small integer into the matching rational ring.
pub trait RationalScale {
    type Output;
    fn div_int(&self, d: i64) -> Self::Output;
}

impl RationalScale for BigInt {
    type Output = BigRational;
    fn div_int(&self, d: i64) -> BigRational {
        BigRational::new(self.clone(), BigInt::from(d))
    }
}

impl RationalScale for PolyN {
    type Output = PolyQ;
    fn div_int(&self, d: i64) -> PolyQ {
        self.to_rational().scale(&BigRational::new(BigInt::one(), BigInt::from(d)))
    }
}

impl RationalScale for SymbolPoly {
    type Output = SymPoly<BigRational>;
    fn div_int(&self, d: i64) -> SymPoly<BigRational> {
        self.eval(SymPoly::symbol, |c| SymPoly::constant(BigRational::new(c.clone(), BigInt::from(d))))
    }
}

/// Hamiltonian density `h_j(n) = c_{n+1,j+2} / (j+2)` for `j >= -1`.
pub fn hamiltonian_density<C: Ring + RationalScale>(data: &LatticeData<C>, n: i64, j: i64) -> Result<<C as RationalScale>::Output> {
    if j < -1 {
        return Err(Error::InvalidInput(format!("density index {j} < -1")));
    }
    let level = (j + 2) as usize;
    let table = CoefficientTable::build(data, n + 1, n + 1, level)?;
    Ok(table.c(n + 1, level)?.div_int(j + 2))
}
