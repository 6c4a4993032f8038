//! Permutation-sum formulas for `k >= 3` correlators.
//!
//! Every factor `1/(λ_a - λ_b)` is expanded in the region `|λ_1| > ... > |λ_k|`.
//! The coefficient of `Π λ_m^{E_m}` only involves resolvent coefficients `R_n`
//! with `Σ n_m = Σ E_m + k`, so each target is a finite sum over compositions.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::ring::Ring;
use crate::algebra::cycle_denominator_coeff;
use crate::error::{Error, Result};
use crate::resolvent::build_gue_resolvent;
use crate::PolyN;

type Mat = [PolyN; 4];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let e = |i: usize, j: usize| {
        let mut s = PolyN::zero();
        s.add_mul_assign(&a[2 * i], &b[j]);
        s.add_mul_assign(&a[2 * i + 1], &b[2 + j]);
        s
    };
    [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
}

fn mat_comm(a: &Mat, b: &Mat) -> Mat {
    let (x, y) = (mat_mul(a, b), mat_mul(b, a));
    [x[0].sub_ref(&y[0]), x[1].sub_ref(&y[1]), x[2].sub_ref(&y[2]), x[3].sub_ref(&y[3])]
}

fn trace_mul(a: &Mat, b: &Mat) -> PolyN {
    let mut s = PolyN::zero();
    s.add_mul_assign(&a[0], &b[0]);
    s.add_mul_assign(&a[1], &b[2]);
    s.add_mul_assign(&a[2], &b[1]);
    s.add_mul_assign(&a[3], &b[3]);
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KPointMethod {
    /// Nested commutators, `(k-2)!` terms.
    AdForm,
    /// Full cyclic permutation sum, `(k-1)!` terms after fixing the first slot.
    PermutationSum,
}

#[derive(Clone, Copy, Debug)]
pub struct KPointOptions {
    pub method: KPointMethod,
    /// Extra room around each target exponent for the cancellation check.
    pub slack: i64,
    pub check_cancellation: bool,
}

impl Default for KPointOptions {
    fn default() -> Self {
        KPointOptions { method: KPointMethod::AdForm, slack: 2, check_cancellation: true }
    }
}

/// Nonzero numerator terms: cycle order, exponent vector of the resolvent coefficients, value.
struct Terms {
    k: usize,
    list: Vec<(Vec<usize>, Vec<i64>, PolyN)>,
}

impl Terms {
    fn build(k: usize, total: i64, method: KPointMethod) -> Result<Self> {
        let depth = (-total).max(1) as usize;
        let r = build_gue_resolvent(depth)?;
        let coeff: Vec<Option<Mat>> = (0..=depth as i64)
            .map(|d| {
                let m = r.coeff_matrix(-d).expect("within depth");
                if m.iter().all(|c| c.is_zero()) {
                    None
                } else {
                    Some(m)
                }
            })
            .collect();
        let mut list = Vec::new();
        let mut n = vec![0i64; k];
        compositions(&mut n, 0, -total, &coeff, &mut |n| {
            let mats: Vec<&Mat> = n.iter().map(|&x| coeff[(-x) as usize].as_ref().unwrap()).collect();
            match method {
                KPointMethod::PermutationSum => {
                    for rest in (1..k).permutations(k - 1) {
                        let cycle: Vec<usize> = std::iter::once(0).chain(rest).collect();
                        let mut p = mats[cycle[0]].clone();
                        for &c in &cycle[1..k - 1] {
                            p = mat_mul(&p, mats[c]);
                        }
                        let v = trace_mul(&p, mats[cycle[k - 1]]);
                        if !v.is_zero() {
                            list.push((cycle, n.to_vec(), v));
                        }
                    }
                }
                KPointMethod::AdForm => {
                    for sigma in (0..k - 2).permutations(k - 2) {
                        let mut inner = mats[k - 2].clone();
                        for &s in sigma.iter().rev() {
                            inner = mat_comm(mats[s], &inner);
                        }
                        let v = trace_mul(mats[k - 1], &inner);
                        if !v.is_zero() {
                            let cycle: Vec<usize> = sigma.into_iter().chain([k - 2, k - 1]).collect();
                            list.push((cycle, n.to_vec(), v));
                        }
                    }
                }
            }
        });
        Ok(Terms { k, list })
    }

    /// Coefficient of `Π λ_m^{e_m}` (before the overall sign).
    fn coeff(&self, e: &[i64]) -> PolyN {
        let mut acc = PolyN::zero();
        let mut f = vec![0i64; self.k];
        for (cycle, n, v) in &self.list {
            for m in 0..self.k {
                f[m] = e[m] - n[m];
            }
            let d = cycle_denominator_coeff(cycle, &f);
            if d != 0 {
                acc.add_assign_ref(&v.scale(&BigInt::from(d)));
            }
        }
        acc
    }
}

/// Calls `f` on every `n` with `n_m <= 0`, `Σ n = -remaining_total` and nonzero coefficient matrices.
fn compositions(n: &mut Vec<i64>, pos: usize, remaining: i64, coeff: &[Option<Mat>], f: &mut dyn FnMut(&[i64])) {
    let k = n.len();
    if pos == k - 1 {
        if coeff.get(remaining as usize).is_some_and(|c| c.is_some()) {
            n[pos] = -remaining;
            f(n);
        }
        return;
    }
    for d in 0..=remaining {
        if coeff[d as usize].is_none() {
            continue;
        }
        n[pos] = -d;
        compositions(n, pos + 1, remaining - d, coeff, f);
    }
}

/// All exponent vectors in the per-variable windows `[-(i_m + 1) - slack, slack]` with total `total`.
fn check_points(exps: &[u32], slack: i64, total: i64) -> Vec<Vec<i64>> {
    let ranges: Vec<(i64, i64)> = exps.iter().map(|&i| (-(i as i64) - 1 - slack, slack)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(exps.len());
    fn rec(ranges: &[(i64, i64)], cur: &mut Vec<i64>, left: i64, out: &mut Vec<Vec<i64>>) {
        let m = cur.len();
        if m == ranges.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_lo: i64 = ranges[m + 1..].iter().map(|r| r.0).sum();
        let rest_hi: i64 = ranges[m + 1..].iter().map(|r| r.1).sum();
        for x in ranges[m].0..=ranges[m].1 {
            let l = left - x;
            if l < rest_lo || l > rest_hi {
                continue;
            }
            cur.push(x);
            rec(ranges, cur, l, out);
            cur.pop();
        }
    }
    rec(&ranges, &mut cur, total, &mut out);
    out
}

/// `<tr M^{i_1} ... tr M^{i_k}>_c` for `k >= 3` with the given formula and checks.
pub fn k_point_with(exps: &[u32], opts: KPointOptions) -> Result<PolyN> {
    let k = exps.len();
    if k < 3 {
        return Err(Error::InvalidInput("k_point needs at least three exponents".into()));
    }
    if exps.contains(&0) {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    let target: Vec<i64> = exps.iter().map(|&i| -(i as i64) - 1).collect();
    let t: i64 = target.iter().sum();
    let terms = Terms::build(k, t + k as i64, opts.method)?;
    if opts.check_cancellation {
        for e in check_points(exps, opts.slack, t) {
            if e.iter().any(|&x| x >= -1) && !terms.coeff(&e).is_zero() {
                return Err(Error::Consistency(format!("uncancelled exponent {e:?}")));
            }
        }
    }
    Ok(terms.coeff(&target).neg_ref())
}

/// `<tr M^{i_1} ... tr M^{i_k}>_c` for `k >= 3` through the nested-commutator formula.
pub fn k_point(exps: &[u32]) -> Result<PolyN> {
    k_point_with(exps, KPointOptions::default())
}
