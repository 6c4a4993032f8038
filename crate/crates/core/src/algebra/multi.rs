//! Truncated series in several variables `λ_1, ..., λ_k`.
//!
//! Every stored exponent vector lies inside the per-variable windows; terms
//! produced outside a window are discarded and the series remembers that it
//! lost information there. An optional total-degree floor marks coefficients
//! of lower total degree as unknown.

use std::collections::BTreeMap;
use std::fmt;

use super::laurent::LaurentSeries;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct MultiSeries<C> {
    windows: Vec<(i64, i64)>,
    degree_floor: Option<i64>,
    terms: BTreeMap<Vec<i64>, C>,
    dropped: bool,
}

impl<C: Ring> MultiSeries<C> {
    /// Empty series with inclusive exponent windows `[lo, hi]` per variable.
    pub fn new(windows: Vec<(i64, i64)>) -> Self {
        MultiSeries { windows, degree_floor: None, terms: BTreeMap::new(), dropped: false }
    }

    pub fn with_degree_floor(mut self, floor: i64) -> Self {
        self.degree_floor = Some(floor);
        self.terms.retain(|e, _| e.iter().sum::<i64>() >= floor);
        self
    }

    pub fn nvars(&self) -> usize {
        self.windows.len()
    }

    pub fn windows(&self) -> &[(i64, i64)] {
        &self.windows
    }

    pub fn degree_floor(&self) -> Option<i64> {
        self.degree_floor
    }

    /// True if some term was discarded for escaping a window.
    pub fn dropped_terms(&self) -> bool {
        self.dropped
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &C)> {
        self.terms.iter()
    }

    pub fn in_window(&self, e: &[i64]) -> bool {
        e.len() == self.windows.len() && e.iter().zip(&self.windows).all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    fn is_known(&self, e: &[i64]) -> bool {
        self.in_window(e) && self.degree_floor.map_or(true, |f| e.iter().sum::<i64>() >= f)
    }

    /// Add `c` to the coefficient of `e`; discarded (and recorded) outside the windows.
    pub fn add_term(&mut self, e: Vec<i64>, c: &C) {
        if c.is_zero() {
            return;
        }
        if !self.is_known(&e) {
            self.dropped = true;
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, e: &[i64]) -> Result<C> {
        if !self.is_known(e) {
            return Err(Error::Truncated { exponent: e.iter().sum(), known_from: self.degree_floor.unwrap_or(i64::MIN) });
        }
        Ok(self.terms.get(e).cloned().unwrap_or_else(C::zero))
    }

    /// Product of single-variable series, one per variable, restricted to the windows.
    pub fn outer_product(factors: &[&LaurentSeries<C>], windows: Vec<(i64, i64)>) -> Result<Self> {
        let mut out = Self::new(windows);
        for (m, f) in factors.iter().enumerate() {
            if let Some(k) = f.known_from() {
                if k > out.windows[m].0 {
                    return Err(Error::Truncated { exponent: out.windows[m].0, known_from: k });
                }
            }
        }
        let mut acc: Vec<(Vec<i64>, C)> = vec![(Vec::new(), C::one())];
        for (m, f) in factors.iter().enumerate() {
            let (lo, hi) = out.windows[m];
            let mut next = Vec::new();
            for (e, c) in &acc {
                for (x, a) in f.terms() {
                    if x < lo || x > hi {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2.push(x);
                    next.push((e2, c.mul_ref(a)));
                }
            }
            acc = next;
        }
        for (e, c) in acc {
            out.add_term(e, &c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.windows = intersect(&self.windows, &other.windows);
        out.degree_floor = self.degree_floor.max(other.degree_floor);
        out.dropped |= other.dropped;
        out.terms = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.mul_ref(k));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::one().neg_ref()))
    }

    /// Term-wise product; result windows are the given ones.
    pub fn mul(&self, other: &Self, windows: Vec<(i64, i64)>) -> Self {
        let mut out = Self::new(windows);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, &ca.mul_ref(cb));
            }
        }
        out
    }

    /// Product with a single-variable series in variable `m`.
    pub fn mul_axis(&self, m: usize, f: &LaurentSeries<C>) -> Self {
        let mut out = Self::new(self.windows.clone());
        out.degree_floor = self.degree_floor;
        for (e, c) in &self.terms {
            for (x, a) in f.terms() {
                let mut e2 = e.clone();
                e2[m] += x;
                out.add_term(e2, &c.mul_ref(a));
            }
        }
        out
    }

    /// Multiplication by `(λ_1 - λ_2)^2` for a two-variable series.
    pub fn mul_square_diff(&self) -> Self {
        assert_eq!(self.nvars(), 2, "two-variable series expected");
        let mut out = Self::new(self.windows.iter().map(|(lo, hi)| (*lo, hi + 2)).collect());
        for (e, c) in &self.terms {
            out.add_term(vec![e[0] + 2, e[1]], c);
            out.add_term(vec![e[0] + 1, e[1] + 1], &c.scale_i64(-2));
            out.add_term(vec![e[0], e[1] + 2], c);
        }
        out
    }

    /// Exact quotient `T` with `S = (λ_1 - λ_2)^2 T`, where `T` has only exponents `<= -2`.
    ///
    /// With `t[a][b]` the coefficient of `λ_1^{-a} λ_2^{-b}`, the quotient obeys
    /// `t[a][b] = s[a][b-2] - t[a+2][b-2] + 2 t[a+1][b-1]`; the remaining equations
    /// (rows `a = 0, 1`, positive exponents) are checked.
    pub fn divide_by_square_diff(&self) -> Result<Self> {
        if self.nvars() != 2 {
            return Err(Error::InvalidInput("square-difference division needs two variables".into()));
        }
        if let Some((e, _)) = self.terms.iter().find(|(e, _)| e[0] > 0 || e[1] > 0) {
            return Err(Error::NotDivisible(format!("positive exponent {e:?}")));
        }
        let s = |a: i64, b: i64| -> Option<C> { self.coeff(&[-a, -b]).ok() };
        // Largest antidiagonal of S fully inside the known region.
        let mut dmax = 0;
        while (0..=dmax + 1).all(|a| s(a, dmax + 1 - a).is_some()) {
            dmax += 1;
            if dmax > 100_000 {
                return Err(Error::InvalidInput("unbounded division window".into()));
            }
        }
        if (0..=dmax).any(|a| s(a, dmax - a).is_none()) {
            dmax -= 1;
        }
        // t is known on antidiagonals a + b <= dmax + 2.
        let top = dmax + 2;
        let mut t: BTreeMap<(i64, i64), C> = BTreeMap::new();
        let tget = |t: &BTreeMap<(i64, i64), C>, a: i64, b: i64| -> C {
            if a < 2 || b < 2 {
                C::zero()
            } else {
                t.get(&(a, b)).cloned().unwrap_or_else(C::zero)
            }
        };
        for d in 4..=top {
            for b in 2..=d - 2 {
                let a = d - b;
                let mut v = s(a, b - 2).expect("inside known region");
                v.sub_assign_ref(&tget(&t, a + 2, b - 2));
                v.add_assign_ref(&tget(&t, a + 1, b - 1).scale_i64(2));
                if !v.is_zero() {
                    t.insert((a, b), v);
                }
            }
        }
        for q in 0..=dmax {
            if 2 + q <= top {
                let lhs = s(0, q).expect("inside known region");
                if lhs != tget(&t, 2, q) {
                    return Err(Error::NotDivisible(format!("row 0 fails at q = {q}")));
                }
            }
            if 3 + q <= top && q < dmax {
                let lhs = s(1, q).expect("inside known region");
                let rhs = tget(&t, 3, q).sub_ref(&tget(&t, 2, q + 1).scale_i64(2));
                if lhs != rhs {
                    return Err(Error::NotDivisible(format!("row 1 fails at q = {q}")));
                }
            }
        }
        let mut out = Self::new(vec![(-(top - 2), -2), (-(top - 2), -2)]).with_degree_floor(-top);
        for ((a, b), c) in t {
            out.add_term(vec![-a, -b], &c);
        }
        // Residual check on the region where both sides are known.
        let back = out.mul_square_diff();
        for d in 0..=dmax {
            for a in 0..=d {
                let b = d - a;
                let lhs = s(a, b).expect("inside known region");
                let rhs = back.terms.get(&vec![-a, -b]).cloned().unwrap_or_else(C::zero);
                if lhs != rhs {
                    return Err(Error::NotDivisible(format!("residual at ({}, {})", -a, -b)));
                }
            }
        }
        Ok(out)
    }
}

fn intersect(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<(i64, i64)> {
    assert_eq!(a.len(), b.len(), "variable count mismatch");
    a.iter().zip(b).map(|((l1, h1), (l2, h2))| ((*l1).max(*l2), (*h1).min(*h2))).collect()
}

/// Coefficient of `Π λ^{f}` in the expansion of `1 / Π_j (λ_{c_j} - λ_{c_{j+1}})`
/// (indices cyclic) in the region `|λ_0| > |λ_1| > ...`.
///
/// Each factor `1/(λ_p - λ_q)` with `p < q` expands as `Σ_r λ_q^r λ_p^{-r-1}`,
/// and with `p > q` as `-Σ_r λ_p^r λ_q^{-r-1}`. Walking around the cycle, every
/// `r_j` is an affine function of `r_0`; the coefficient is the sign times the
/// number of admissible `r_0`.
pub fn cycle_denominator_coeff(cycle: &[usize], f: &[i64]) -> i64 {
    let k = cycle.len();
    if f.iter().sum::<i64>() != -(k as i64) {
        return 0;
    }
    // Edge j joins cycle[j] -> cycle[j+1]. role(v, j): +1 if v gains r_j, -1 if it loses r_j + 1.
    let gains = |v: usize, j: usize| -> bool {
        let (p, q) = (cycle[j], cycle[(j + 1) % k]);
        let small = if p < q { q } else { p };
        v == small
    };
    let sign: i64 = (0..k).map(|j| if cycle[j] > cycle[(j + 1) % k] { -1 } else { 1 }).product();
    // r_j = s_j * x + c_j with x = r_0.
    let mut lin = vec![(0i64, 0i64); k];
    lin[0] = (1, 0);
    for j in 1..k {
        // Vertex cycle[j] touches edges j-1 and j.
        let v = cycle[j];
        let (ps, pc) = lin[j - 1];
        // contribution of edge j-1 to v
        let (cs, cc) = if gains(v, j - 1) { (ps, pc) } else { (-ps, -pc - 1) };
        // f_v = contrib(j-1) + contrib(j)
        let rest = (-cs, f[v] - cc);
        lin[j] = if gains(v, j) { rest } else { (-rest.0, -rest.1 - 1) };
    }
    // Closing equation at cycle[0], touching edges k-1 and 0.
    let v = cycle[0];
    let (ps, pc) = lin[k - 1];
    let (as_, ac) = if gains(v, k - 1) { (ps, pc) } else { (-ps, -pc - 1) };
    let (bs, bc) = if gains(v, 0) { (1, 0) } else { (-1, -1) };
    let (cs, cc) = (as_ + bs, ac + bc);
    let (mut lo, mut hi) = (0i64, i64::MAX);
    for &(s, c) in &lin {
        // s*x + c >= 0
        match s {
            1 => lo = lo.max(-c),
            -1 => hi = hi.min(c),
            _ => unreachable!(),
        }
    }
    if cs == 0 {
        if cc != f[v] {
            return 0;
        }
        assert!(hi != i64::MAX, "unbounded cycle expansion");
        return sign * (hi - lo + 1).max(0);
    }
    let num = f[v] - cc;
    if num % cs != 0 {
        return 0;
    }
    let x = num / cs;
    if x >= lo && x <= hi {
        sign
    } else {
        0
    }
}

impl<C: Ring> fmt::Debug for MultiSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiSeries")
            .field("windows", &self.windows)
            .field("degree_floor", &self.degree_floor)
            .field("terms", &self.terms)
            .finish()
    }
}
