//! Genus 0, 1, 2 free energies of the triangle model as series in the coupling `s`.
//!
//! Coefficients live in `Q(t)` with `x = t^2`, so `sqrt(x) = t`. A `log x` is
//! carried as a separate formal slot.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::ring::{Field, Ring};
use crate::algebra::{PowerSeries, RatFunc};
use crate::error::{Error, Result};

pub type XSeries = PowerSeries<RatFunc>;

pub const DEFAULT_ORDER: usize = 20;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rf(n: i64, d: i64) -> RatFunc {
    RatFunc::from_rational(q(n, d))
}

/// `log_x(s) · log x + rest(s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LogSeries {
    pub log_x: XSeries,
    pub rest: XSeries,
}

impl LogSeries {
    pub fn order(&self) -> usize {
        self.rest.order()
    }

    /// Term-wise `∂_x`, using `∂_x log x = 1/x`.
    pub fn d_dx(&self) -> LogSeries {
        let inv_x = RatFunc::monomial(q(1, 1), -2);
        let rest = d_dx(&self.rest).add(&self.log_x.scale(&inv_x));
        LogSeries { log_x: d_dx(&self.log_x), rest }
    }
}

/// Term-wise `∂_x` of a series.
pub fn d_dx(f: &XSeries) -> XSeries {
    f.map(|c| c.d_dx())
}

/// `F_g` with its `s^0` term kept.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeEnergySeries {
    pub genus: u32,
    pub series: LogSeries,
}

impl FreeEnergySeries {
    fn new(genus: u32, series: LogSeries) -> Result<Self> {
        for k in 1..=series.order() {
            if !series.log_x.coeff(k).is_zero() {
                return Err(Error::Consistency(format!("F_{genus} keeps a log x term at s^{k}")));
            }
        }
        Ok(FreeEnergySeries { genus, series })
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Coefficient of `s^k` without the `log x` part.
    pub fn coeff(&self, k: usize) -> &RatFunc {
        self.series.rest.coeff(k)
    }

    /// Coefficient of `s^k log x`.
    pub fn log_coeff(&self, k: usize) -> &RatFunc {
        self.series.log_x.coeff(k)
    }

    /// Coefficient of `s^k` at `x = 1`.
    pub fn at_x_one(&self, k: usize) -> Result<BigRational> {
        self.coeff(k).eval(&q(1, 1))
    }

    /// Whether every coefficient of `s^k`, `k >= 1`, is a rational function of `x`.
    pub fn is_even_in_t(&self) -> bool {
        (1..=self.order()).all(|k| self.coeff(k).is_even())
    }
}

fn check_order(order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::InvalidInput("series order must be at least 2".into()));
    }
    Ok(())
}

/// The series solution of `v(1 - 9sv + 18s^2v^2) = 6sx` with `v(s=0) = 0`.
pub fn solve_cubic_v(order: usize) -> XSeries {
    let six_sx = XSeries::monomial(RatFunc::x().scale_i64(6), 1, order);
    let mut v = XSeries::zero(order);
    // Each pass fixes one more coefficient.
    for _ in 0..order {
        let v2 = v.mul(&v);
        let v3 = v2.mul(&v);
        v = six_sx.add(&v2.mul_s().scale(&rf(9, 1))).sub(&v3.mul_s().mul_s().scale(&rf(18, 1)));
    }
    v
}

/// `w = x/(1 - 6sv)` and `u = log w`.
pub fn build_w_u(v: &XSeries) -> Result<(XSeries, LogSeries)> {
    let order = v.order();
    let denom = XSeries::constant(RatFunc::one(), order).sub(&v.mul_s().scale(&rf(6, 1)));
    let ratio = denom.inverse()?;
    let w = ratio.scale(&RatFunc::x());
    let log_x = XSeries::constant(RatFunc::one(), order);
    let rest = ratio.sub(&XSeries::constant(RatFunc::one(), order)).log1p()?;
    Ok((w, LogSeries { log_x, rest }))
}

struct Fields {
    order: usize,
    x: XSeries,
    v: XSeries,
    w: XSeries,
    u: LogSeries,
}

impl Fields {
    fn new(order: usize) -> Result<Self> {
        check_order(order)?;
        let v = solve_cubic_v(order);
        let (w, u) = build_w_u(&v)?;
        Ok(Fields { order, x: XSeries::constant(RatFunc::x(), order), v, w, u })
    }

    fn c(&self, n: i64, d: i64) -> XSeries {
        XSeries::constant(rf(n, d), self.order)
    }
}

/// Genus zero free energy.
pub fn free_energy_f0(order: usize) -> Result<FreeEnergySeries> {
    let f = Fields::new(order)?;
    let (v, w, x) = (&f.v, &f.w, &f.x);
    let v2 = v.mul(v);
    let v3 = v2.mul(v);
    let v4 = v3.mul(v);
    let w2 = w.mul(w);
    let w3 = w2.mul(w);
    let s = |a: &XSeries| a.mul_s();
    let g1 = v2.mul(w).add(&w2.scale(&rf(1, 2))).scale(&rf(1, 2));
    let g2 = s(&v3.mul(w).scale(&rf(1, 2)).add(&v.mul(&w2))).scale(&rf(-6, 1));
    let g3 = s(&s(&v4.mul(w).scale(&rf(1, 4)).add(&v2.mul(&w2)).add(&w3.scale(&rf(1, 3))))).scale(&rf(18, 1));
    let g4 = x.mul(&v2.scale(&rf(1, 2)).add(w)).neg();
    let g5 = s(&x.mul(&v3.scale(&rf(1, 6)).add(&v.mul(w)))).scale(&rf(6, 1));
    let half_x2 = RatFunc::monomial(q(1, 2), 4);
    let rest = g1.add(&g2).add(&g3).add(&g4).add(&g5).add(&f.u.rest.scale(&half_x2));
    let log_x = f.u.log_x.scale(&half_x2);
    FreeEnergySeries::new(0, LogSeries { log_x, rest })
}

/// Genus one free energy `(1/24) log(v_x^2 - w u_x^2) - u/24`.
///
/// The leading term of the argument is `-1/x`; its constant `log(-1)` is dropped.
pub fn free_energy_f1(order: usize) -> Result<FreeEnergySeries> {
    let f = Fields::new(order)?;
    let vx = d_dx(&f.v);
    let ux = f.u.d_dx();
    if !ux.log_x.coeffs().iter().all(|c| c.is_zero()) {
        return Err(Error::Consistency("u_x keeps a log x term".into()));
    }
    let arg = vx.mul(&vx).sub(&f.w.mul(&ux.rest).mul(&ux.rest));
    let lead = arg.coeff(0).clone();
    if lead != RatFunc::monomial(q(-1, 1), -2) {
        return Err(Error::Consistency(format!("unexpected leading term {lead} in F_1")));
    }
    let normalized = arg.scale(&lead.inv().expect("nonzero"));
    let tail = normalized.sub(&XSeries::constant(RatFunc::one(), order)).log1p()?;
    let k = rf(1, 24);
    let log_x = XSeries::constant(rf(-1, 1), order).sub(&f.u.log_x).scale(&k);
    let rest = tail.sub(&f.u.rest).scale(&k);
    FreeEnergySeries::new(1, LogSeries { log_x, rest })
}

/// `u` and its first four `x`-derivatives.
fn jets(u: &XSeries) -> [XSeries; 5] {
    let d1 = d_dx(u);
    let d2 = d_dx(&d1);
    let d3 = d_dx(&d2);
    let d4 = d_dx(&d3);
    [u.clone(), d1, d2, d3, d4]
}

fn inverse_named(a: &XSeries, what: &str) -> Result<XSeries> {
    a.inverse().map_err(|_| Error::Consistency(format!("{what} is not invertible")))
}

/// Genus two free energy from `u_{1,2} = v ± 2 sqrt(w)`.
pub fn free_energy_f2(order: usize) -> Result<FreeEnergySeries> {
    let f = Fields::new(order)?;
    let w_over_x = f.w.scale(&RatFunc::x().inv().expect("nonzero"));
    let root = w_over_x.sub(&XSeries::constant(RatFunc::one(), order)).sqrt1p()?.scale(&RatFunc::t());
    let two_root = root.scale(&rf(2, 1));
    let [_, a, a2, a3, a4] = jets(&f.v.add(&two_root));
    let [_, b, b2, b3, b4] = jets(&f.v.sub(&two_root));
    let d = two_root.scale(&rf(2, 1));
    let ia = inverse_named(&a, "u_1'")?;
    let ib = inverse_named(&b, "u_2'")?;
    let id = inverse_named(&d, "u_12")?;
    let c = |n, m| f.c(n, m);
    let ia2 = ia.mul(&ia);
    let ib2 = ib.mul(&ib);
    let ia3 = ia2.mul(&ia);
    let ib3 = ib2.mul(&ib);
    let id2 = id.mul(&id);

    let t1 = a2.pow(3).mul(&d).mul(&ia2).mul(&ia2).scale(&rf(4, 5));
    let t2 = b2.pow(3).mul(&d).mul(&ib2).mul(&ib2).scale(&rf(-4, 5));
    let t3 = a2.mul(&b2).mul(&ia).mul(&ib).scale(&rf(-1, 4));
    let t4 = a2
        .mul(&ia3)
        .scale(&rf(3, 4))
        .mul(&a2.mul(&b).scale(&rf(1, 2)).sub(&a3.mul(&d).scale(&rf(7, 5))));
    let t5 = b2
        .mul(&ib3)
        .scale(&rf(3, 4))
        .mul(&b2.mul(&a).scale(&rf(1, 2)).add(&b3.mul(&d).scale(&rf(7, 5))));
    let a2b2 = a2.mul(&b2).scale(&rf(1, 10));
    let t6 = ia2.scale(&rf(1, 4)).mul(
        &a2.mul(&a2).scale(&rf(33, 10)).sub(&a3.mul(&b).scale(&rf(9, 10))).add(&a2b2).add(&a4.mul(&d)),
    );
    let t7 = ib2.scale(&rf(1, 4)).mul(
        &b2.mul(&b2).scale(&rf(33, 10)).sub(&b3.mul(&a).scale(&rf(9, 10))).add(&a2b2).sub(&b4.mul(&d)),
    );
    let t8 = ia.scale(&rf(-1, 4)).mul(&a3.scale(&rf(17, 5)).add(&b3.scale(&rf(1, 2))));
    let t9 = ib.scale(&rf(-1, 4)).mul(&b3.scale(&rf(17, 5)).add(&a3.scale(&rf(1, 2))));
    let t10 = id2.scale(&rf(-1, 10)).mul(&a.pow(3).mul(&ib).add(&b.pow(3).mul(&ia)));
    let t11 = id2.neg().mul(&a.mul(&a).sub(&a.mul(&b).scale(&rf(11, 5))).add(&b.mul(&b)));
    let t12 = a2
        .sub(&b2)
        .mul(&id)
        .mul(&b.mul(&ia).scale(&rf(1, 5)).add(&a.mul(&ib).scale(&rf(1, 5))).add(&c(1, 1)));
    let total = [t1, t2, t3, t4, t5, t6, t7, t8, t9, t10, t11, t12]
        .iter()
        .fold(XSeries::zero(order), |acc, t| acc.add(t));
    let rest = total.scale(&rf(1, 576));
    FreeEnergySeries::new(2, LogSeries { log_x: XSeries::zero(order), rest })
}

pub fn free_energy(genus: u32, order: usize) -> Result<FreeEnergySeries> {
    match genus {
        0 => free_energy_f0(order),
        1 => free_energy_f1(order),
        2 => free_energy_f2(order),
        _ => Err(Error::InvalidInput(format!("genus {genus} is not supported (0, 1 or 2)"))),
    }
}

/// `a_g(3^k)` for `k = 2, 4, ..., kmax`: the `s^k` coefficient of `F_g` at `x = 1`.
pub fn weighted_triangle_numbers(genus: u32, kmax: usize) -> Result<Vec<(usize, BigRational)>> {
    if kmax % 2 != 0 || kmax < 2 {
        return Err(Error::InvalidInput("kmax must be even and at least 2".into()));
    }
    let f = free_energy(genus, kmax)?;
    if !f.is_even_in_t() {
        return Err(Error::Consistency(format!("F_{genus} has a coefficient odd in sqrt(x)")));
    }
    (2..=kmax).step_by(2).map(|k| Ok((k, f.at_x_one(k)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xk(c: BigRational, k: i64) -> RatFunc {
        RatFunc::monomial(c, 2 * k)
    }

    fn int(n: i64) -> BigRational {
        q(n, 1)
    }

    #[test]
    fn cubic_solution() {
        let v = solve_cubic_v(5);
        assert_eq!(*v.coeff(1), xk(int(6), 1));
        assert_eq!(*v.coeff(3), xk(int(324), 2));
        assert_eq!(*v.coeff(5), xk(int(31104), 3));
        assert!(v.coeff(2).is_zero());
        let vv = v.mul(&v);
        let lhs = v.sub(&vv.mul_s().scale(&rf(9, 1))).add(&vv.mul(&v).mul_s().mul_s().scale(&rf(18, 1)));
        assert_eq!(lhs, XSeries::monomial(xk(int(6), 1), 1, 5));
    }

    #[test]
    fn w_and_u() {
        let (w, u) = build_w_u(&solve_cubic_v(4)).unwrap();
        assert_eq!(*w.coeff(0), RatFunc::x());
        assert_eq!(*w.coeff(2), xk(int(36), 2));
        assert_eq!(*w.coeff(4), xk(int(3240), 3));
        assert_eq!(*u.log_x.coeff(0), RatFunc::one());
        assert!(u.rest.coeff(0).is_zero());
        assert_eq!(*u.rest.coeff(2), xk(int(36), 1));
        assert_eq!(*u.rest.coeff(4), xk(int(2592), 2));
    }

    #[test]
    fn genus_zero() {
        let f = free_energy_f0(6).unwrap();
        assert_eq!(*f.log_coeff(0), xk(q(1, 2), 2));
        assert_eq!(*f.coeff(0), xk(q(-3, 4), 2));
        assert!(f.coeff(1).is_zero());
        assert_eq!(*f.coeff(2), xk(int(6), 3));
        assert_eq!(*f.coeff(4), xk(int(216), 4));
    }

    #[test]
    fn genus_one() {
        let f = free_energy_f1(6).unwrap();
        assert_eq!(*f.log_coeff(0), RatFunc::from_rational(q(-1, 12)));
        assert_eq!(*f.coeff(2), xk(q(3, 2), 1));
        assert_eq!(*f.coeff(4), xk(int(189), 2));
    }

    #[test]
    fn genus_two() {
        let f = free_energy_f2(8).unwrap();
        assert_eq!(*f.coeff(0), xk(q(-1, 240), -2));
        assert!(f.coeff(2).is_zero());
        assert!(f.coeff(4).is_zero());
        assert_eq!(*f.coeff(6), xk(q(8505, 2), 1));
        assert!(f.is_even_in_t());
    }

    #[test]
    fn triangle_numbers() {
        let g1 = weighted_triangle_numbers(1, 6).unwrap();
        assert_eq!(g1, vec![(2, q(3, 2)), (4, int(189)), (6, int(26892))]);
        let g2 = weighted_triangle_numbers(2, 8).unwrap();
        assert_eq!(g2[3], (8, int(2217618)));
    }
}
