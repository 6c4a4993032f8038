//! Correlators with two free exponents and a list of fixed valences, via the
//! commutator family `R_K = Σ_{I ⊔ J = K - {k_1}} [(λ^{b_{k_1}} R_J)_+, R_I]`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::ring::{binomial, Ring};
use crate::algebra::{LaurentSeries, MultiSeries};
use crate::error::{Error, Result};
use crate::resolvent::build_gue_resolvent;
use crate::{GueResolvent, PolyN};

/// Multiset of valences as `(value, count)` pairs with increasing values.
type Multiset = Vec<(u32, u32)>;

fn multiset(bs: &[u32]) -> Multiset {
    let mut v = bs.to_vec();
    v.sort_unstable();
    let mut out: Multiset = Vec::new();
    for b in v {
        match out.last_mut() {
            Some((x, c)) if *x == b => *c += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

fn normalize(m: Multiset) -> Multiset {
    m.into_iter().filter(|(_, c)| *c > 0).collect()
}

/// All sub-multisets `I` of `m` with the number of ways to pick them as labelled subsets.
fn splits(m: &Multiset) -> Vec<(Multiset, Multiset, BigInt)> {
    let mut out = vec![(Vec::new(), Vec::new(), BigInt::one())];
    for &(b, c) in m {
        let mut next = Vec::new();
        for (i, j, w) in &out {
            for take in 0..=c {
                let mut i2 = i.clone();
                let mut j2 = j.clone();
                i2.push((b, take));
                j2.push((b, c - take));
                next.push((i2, j2, w * binomial(c as u64, take as u64)));
            }
        }
        out = next;
    }
    out.into_iter().map(|(i, j, w)| (normalize(i), normalize(j), w)).collect()
}

struct Family {
    base: GueResolvent,
    memo: HashMap<Multiset, GueResolvent>,
    plus: HashMap<(u32, Multiset), GueResolvent>,
}

impl Family {
    fn new(depth: usize) -> Result<Self> {
        Ok(Family { base: build_gue_resolvent(depth)?, memo: HashMap::new(), plus: HashMap::new() })
    }

    fn get(&mut self, k: &Multiset) -> Result<GueResolvent> {
        if k.is_empty() {
            return Ok(self.base.clone());
        }
        if let Some(r) = self.memo.get(k) {
            return Ok(r.clone());
        }
        let b1 = k[0].0;
        let mut rest = k.clone();
        rest[0].1 -= 1;
        let rest = normalize(rest);
        let mut acc: Option<GueResolvent> = None;
        for (i, j, w) in splits(&rest) {
            let ri = self.get(&i)?;
            let pj = self.positive(b1, &j)?;
            let term = pj.commutator(&ri).scale(&PolyN::constant(w));
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        let r = acc.expect("nonempty split list");
        self.memo.insert(k.clone(), r.clone());
        Ok(r)
    }

    fn positive(&mut self, b: u32, j: &Multiset) -> Result<GueResolvent> {
        let key = (b, j.clone());
        if let Some(p) = self.plus.get(&key) {
            return Ok(p.clone());
        }
        let p = self.get(j)?.shift(b as i64).positive_part()?;
        self.plus.insert(key, p.clone());
        Ok(p)
    }
}

fn depth_of(r: &GueResolvent) -> i64 {
    -r.known_from().unwrap_or(i64::MIN / 2)
}

fn top_of(r: &GueResolvent) -> i64 {
    r.entries().iter().filter_map(|e| e.support_top()).max().unwrap_or(0).max(0)
}

/// Two-variable series `Σ w · tr R_I(λ_1) R_J(λ_2)` over all splits of `k`, minus `1` when `k` is empty,
/// on the window `[-need, top]` in each variable.
fn pair_sum(fam: &mut Family, k: &Multiset, need: i64) -> Result<MultiSeries<PolyN>> {
    let parts = splits(k);
    let mut rs = Vec::with_capacity(parts.len());
    let mut top = 0;
    for (i, j, w) in parts {
        let (ri, rj) = (fam.get(&i)?, fam.get(&j)?);
        if depth_of(&ri) < need || depth_of(&rj) < need {
            return Err(Error::Truncated { exponent: -need, known_from: -depth_of(&ri).min(depth_of(&rj)) });
        }
        top = top.max(top_of(&ri)).max(top_of(&rj));
        rs.push((ri, rj, w));
    }
    let windows = vec![(-need, top), (-need, top)];
    let mut s = MultiSeries::new(windows.clone());
    for (ri, rj, w) in rs {
        let pairs = [(&ri.e11, &rj.e11), (&ri.e12, &rj.e21), (&ri.e21, &rj.e12), (&ri.e22, &rj.e22)];
        let wc = PolyN::constant(w);
        for (x, y) in pairs {
            let x = x.scale(&wc);
            s = s.add(&MultiSeries::outer_product(&[&x, y], windows.clone())?);
        }
    }
    if k.is_empty() {
        s.add_term(vec![0, 0], &PolyN::one().neg_ref());
    }
    Ok(s)
}

fn check_exponents(bs: &[u32], i: u32, j: u32) -> Result<()> {
    if i == 0 || j == 0 || bs.contains(&0) {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    Ok(())
}

/// `<tr M^{b_1} ... tr M^{b_m} tr M^i tr M^j>_c`.
pub fn general_mixed(bs: &[u32], i: u32, j: u32) -> Result<PolyN> {
    check_exponents(bs, i, j)?;
    let total: u64 = bs.iter().map(|&b| b as u64).sum::<u64>() + i as u64 + j as u64;
    if total % 2 == 1 {
        return Ok(PolyN::zero());
    }
    let k = multiset(bs);
    let need = (i + j) as i64;
    let mut depth = need + bs.iter().map(|&b| b as i64).sum::<i64>() + 2;
    loop {
        let mut fam = Family::new(depth as usize)?;
        match pair_sum(&mut fam, &k, need) {
            Ok(s) => {
                let t = s.divide_by_square_diff()?;
                return t.coeff(&[-(i as i64) - 1, -(j as i64) - 1]);
            }
            Err(Error::Truncated { known_from, .. }) => depth += (known_from + need).max(1),
            Err(e) => return Err(e),
        }
    }
}

/// `<(tr M^b)^m tr M^i tr M^j>_c`.
pub fn mixed_correlator(b: u32, m: u32, i: u32, j: u32) -> Result<PolyN> {
    general_mixed(&vec![b; m as usize], i, j)
}

/// `<tr M^i tr M^j>_c` from the two-point resolvent quotient.
pub fn two_point(i: u32, j: u32) -> Result<PolyN> {
    general_mixed(&[], i, j)
}

/// `R^b_0 ..= R^b_M` from `R^b_m = Σ_i C(m-1, i) [(λ^b R^b_{m-1-i})_+, R^b_i]`, starting at depth `depth`.
pub fn rk_family(b: u32, m: usize, depth: usize) -> Result<Vec<GueResolvent>> {
    let mut out = vec![build_gue_resolvent(depth)?];
    let mut plus: Vec<GueResolvent> = Vec::new();
    for mm in 1..=m {
        plus.push(out[mm - 1].shift(b as i64).positive_part()?);
        let mut acc = GueResolvent::zero();
        for i in 0..mm {
            let c = PolyN::constant(binomial((mm - 1) as u64, i as u64));
            acc = acc.add(&plus[mm - 1 - i].commutator(&out[i]).scale(&c));
        }
        out.push(acc);
    }
    Ok(out)
}

/// The same family through the labelled-subset recursion (used to cross-check [`rk_family`]).
pub fn subset_family(bs: &[u32], depth: usize) -> Result<GueResolvent> {
    Family::new(depth)?.get(&multiset(bs))
}

/// Trace of every member of a family, which vanishes for `m >= 1`.
pub fn traces(family: &[GueResolvent]) -> Vec<LaurentSeries<PolyN>> {
    family.iter().map(|r| r.trace()).collect()
}
