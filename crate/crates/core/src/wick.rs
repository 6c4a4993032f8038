//! Brute-force GUE moments by summing over Wick pairings of half-edges.
//!
//! Stars with valences `i_1..i_k` have their half-edges numbered consecutively;
//! the rotation `γ` cycles each star. A perfect matching `π` contributes
//! `N^{faces}` with faces the cycles of `γ∘π`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::ring::{double_factorial, Ring};
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::PolyN;

pub const DEFAULT_BUDGET: usize = 16;

const FREE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDiagram {
    valences: Vec<u32>,
    gamma: Vec<usize>,
    star: Vec<usize>,
}

impl StarDiagram {
    pub fn new(valences: &[u32]) -> Result<Self> {
        if valences.is_empty() || valences.contains(&0) {
            return Err(Error::InvalidInput("valences must be a nonempty list of positive integers".into()));
        }
        let mut gamma = Vec::new();
        let mut star = Vec::new();
        for (s, &v) in valences.iter().enumerate() {
            let base = gamma.len();
            let v = v as usize;
            for h in 0..v {
                gamma.push(base + (h + 1) % v);
                star.push(s);
            }
        }
        Ok(StarDiagram { valences: valences.to_vec(), gamma, star })
    }

    pub fn valences(&self) -> &[u32] {
        &self.valences
    }

    pub fn half_edges(&self) -> usize {
        self.gamma.len()
    }

    /// The rotation as a map on half-edges.
    pub fn rotation(&self) -> &[usize] {
        &self.gamma
    }

    /// Cycle lengths of the rotation, in star order.
    pub fn cycle_type(&self) -> Vec<usize> {
        cycles(&self.gamma)
    }

    /// Number of faces of the ribbon graph glued by `mate`.
    pub fn faces(&self, mate: &[usize]) -> usize {
        let n = self.gamma.len();
        let mut seen = vec![false; n];
        let mut f = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            f += 1;
            let mut h = s;
            while !seen[h] {
                seen[h] = true;
                h = self.gamma[mate[h]];
            }
        }
        f
    }

    /// Whether the matching connects all stars.
    pub fn is_connected(&self, mate: &[usize]) -> bool {
        let k = self.valences.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut parts = k;
        for (h, &m) in mate.iter().enumerate() {
            if h < m {
                let (a, b) = (find(&mut parent, self.star[h]), find(&mut parent, self.star[m]));
                if a != b {
                    parent[a] = b;
                    parts -= 1;
                }
            }
        }
        parts == 1
    }
}

fn cycles(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut h = s;
        while !seen[h] {
            seen[h] = true;
            h = perm[h];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

/// Visits every perfect matching of `0..n` that pairs `first.0` with `first.1`.
fn for_each_matching(n: usize, first: (usize, usize), mut f: impl FnMut(&[usize])) {
    let mut mate = vec![FREE; n];
    mate[first.0] = first.1;
    mate[first.1] = first.0;
    let next_free = |mate: &[usize], from: usize| (from..n).find(|&x| mate[x] == FREE);
    let mut stack: Vec<(usize, usize)> = Vec::new();
    'outer: loop {
        if let Some(a) = next_free(&mate, 0) {
            let b = next_free(&mate, a + 1).expect("even number of half-edges");
            mate[a] = b;
            mate[b] = a;
            stack.push((a, b));
            continue;
        }
        f(&mate);
        while let Some((a, b)) = stack.pop() {
            mate[a] = FREE;
            mate[b] = FREE;
            if let Some(c) = next_free(&mate, b + 1) {
                mate[a] = c;
                mate[c] = a;
                stack.push((a, c));
                continue 'outer;
            }
        }
        break;
    }
}

/// Face-count histograms over all matchings and over connected matchings.
#[derive(Clone, Debug, Default)]
struct Tally {
    all: Vec<u64>,
    connected: Vec<u64>,
    euler_violation: Option<usize>,
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        for (a, b) in self.all.iter_mut().zip(&o.all) {
            *a += b;
        }
        for (a, b) in self.connected.iter_mut().zip(&o.connected) {
            *a += b;
        }
        self.euler_violation = self.euler_violation.or(o.euler_violation);
        self
    }
}

fn histogram_poly(h: &[u64]) -> PolyN {
    Poly::new(h.iter().map(|&c| BigInt::from(c)).collect())
}

fn tally(d: &StarDiagram) -> Tally {
    let n = d.half_edges();
    let k = d.valences.len();
    let edges = n / 2;
    let size = edges + k + 1;
    let empty = Tally { all: vec![0; size], connected: vec![0; size], euler_violation: None };
    (1..n)
        .into_par_iter()
        .map(|p| {
            let mut t = empty.clone();
            for_each_matching(n, (0, p), |mate| {
                let f = d.faces(mate);
                t.all[f] += 1;
                if d.is_connected(mate) {
                    t.connected[f] += 1;
                    // F = 2 - 2g - k + E
                    let twice_g = (2 + edges) as i64 - k as i64 - f as i64;
                    if twice_g < 0 || twice_g % 2 != 0 {
                        t.euler_violation.get_or_insert(f);
                    }
                }
            });
            t
        })
        .reduce(|| empty.clone(), Tally::merge)
}

/// Moment and connected cumulant of one exponent list.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentResult {
    pub exponents: Vec<u32>,
    pub moment: PolyN,
    pub connected: PolyN,
}

/// Wick-pairing oracle with an enumeration budget on the total degree.
#[derive(Clone, Debug)]
pub struct Oracle {
    budget: usize,
    moments: HashMap<Vec<u32>, PolyN>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_BUDGET)
    }
}

impl Oracle {
    pub fn new(budget: usize) -> Self {
        Oracle { budget, moments: HashMap::new() }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn admit(&self, exps: &[u32]) -> Result<Option<StarDiagram>> {
        let d = StarDiagram::new(exps)?;
        let total = d.half_edges();
        if total % 2 == 1 {
            return Ok(None);
        }
        if total > self.budget {
            return Err(Error::BudgetExceeded {
                required: double_factorial(total as i64 - 1).to_string(),
                budget: self.budget,
            });
        }
        Ok(Some(d))
    }

    /// `<tr M^{i_1} ... tr M^{i_k}>` as a polynomial in `N`.
    pub fn moment(&mut self, exps: &[u32]) -> Result<PolyN> {
        let mut key = exps.to_vec();
        key.sort_unstable();
        if let Some(m) = self.moments.get(&key) {
            return Ok(m.clone());
        }
        let m = match self.admit(&key)? {
            None => PolyN::zero(),
            Some(d) => histogram_poly(&tally(&d).all),
        };
        self.moments.insert(key, m.clone());
        Ok(m)
    }

    /// Connected correlator by moment-cumulant inversion.
    ///
    /// Uses `m(S) = Σ_{B ∋ s_0} c(B) m(S - B)` over blocks containing a fixed element,
    /// grouped by sub-multiset.
    pub fn connected_moment(&mut self, exps: &[u32]) -> Result<PolyN> {
        self.admit(exps)?;
        let mut key = exps.to_vec();
        key.sort_unstable();
        let mut memo = HashMap::new();
        self.cumulant(&key, &mut memo)
    }

    fn cumulant(&mut self, s: &[u32], memo: &mut HashMap<Vec<u32>, PolyN>) -> Result<PolyN> {
        if let Some(c) = memo.get(s) {
            return Ok(c.clone());
        }
        let mut c = self.moment(s)?;
        let first = s[0];
        let rest = &s[1..];
        for (inner, outer, w) in sub_multisets(rest) {
            if outer.is_empty() {
                continue;
            }
            let mut block = vec![first];
            block.extend(inner);
            block.sort_unstable();
            let cb = self.cumulant(&block, memo)?;
            if cb.is_zero() {
                continue;
            }
            let mo = self.moment(&outer)?;
            c.sub_assign_ref(&cb.mul_ref(&mo).scale(&w));
        }
        memo.insert(s.to_vec(), c.clone());
        Ok(c)
    }

    /// Connected correlator by summing only matchings that connect every star.
    pub fn connected_moment_filtered(&mut self, exps: &[u32]) -> Result<PolyN> {
        Ok(self.moment_result(exps)?.connected)
    }

    /// Moment and connected part from one enumeration pass, with the Euler check
    /// on every connected matching.
    pub fn moment_result(&mut self, exps: &[u32]) -> Result<MomentResult> {
        let (moment, connected) = match self.admit(exps)? {
            None => (PolyN::zero(), PolyN::zero()),
            Some(d) => {
                let t = tally(&d);
                if let Some(f) = t.euler_violation {
                    return Err(Error::Consistency(format!("matching with {f} faces violates the Euler formula")));
                }
                (histogram_poly(&t.all), histogram_poly(&t.connected))
            }
        };
        Ok(MomentResult { exponents: exps.to_vec(), moment, connected })
    }
}

/// Sub-multisets `I` of a sorted list with complement and the number of labelled choices.
fn sub_multisets(s: &[u32]) -> Vec<(Vec<u32>, Vec<u32>, BigInt)> {
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &x in s {
        match groups.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => groups.push((x, 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new(), BigInt::from(1))];
    for (v, c) in groups {
        let mut next = Vec::with_capacity(out.len() * (c + 1));
        for (i, o, w) in &out {
            for take in 0..=c {
                let mut i2 = i.clone();
                let mut o2 = o.clone();
                i2.extend(std::iter::repeat(v).take(take));
                o2.extend(std::iter::repeat(v).take(c - take));
                next.push((i2, o2, w * crate::algebra::ring::binomial(c as u64, take as u64)));
            }
        }
        out = next;
    }
    out
}

/// `<tr M^{i_1} ... tr M^{i_k}>` with the default budget.
pub fn moment(exps: &[u32]) -> Result<PolyN> {
    Oracle::default().moment(exps)
}

/// Connected correlator with the default budget (cumulant inversion).
pub fn connected_moment(exps: &[u32]) -> Result<PolyN> {
    Oracle::default().connected_moment(exps)
}

/// Connected correlator with the default budget (connectivity filter).
pub fn connected_moment_filtered(exps: &[u32]) -> Result<PolyN> {
    Oracle::default().connected_moment_filtered(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> PolyN {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn small_moments() {
        assert_eq!(moment(&[4]).unwrap(), p(&[0, 1, 0, 2]));
        assert_eq!(moment(&[3, 3]).unwrap(), p(&[0, 3, 0, 12]));
        assert_eq!(moment(&[6]).unwrap(), p(&[0, 0, 10, 0, 5]));
        assert_eq!(moment(&[1]).unwrap(), PolyN::zero());
        assert_eq!(moment(&[2, 2]).unwrap(), p(&[0, 0, 2, 0, 1]));
    }

    #[test]
    fn connected_values() {
        assert_eq!(connected_moment(&[2, 2]).unwrap(), p(&[0, 0, 2]));
        assert_eq!(connected_moment(&[2]).unwrap(), p(&[0, 0, 1]));
        assert_eq!(connected_moment_filtered(&[2, 2]).unwrap(), p(&[0, 0, 2]));
        assert_eq!(connected_moment(&[2, 4]).unwrap(), p(&[0, 4, 0, 8]));
        assert_eq!(connected_moment(&[2, 2, 2]).unwrap(), p(&[0, 0, 8]));
    }

    #[test]
    fn two_implementations_agree() {
        let mut o = Oracle::default();
        for e in [vec![1, 1], vec![1, 2, 3], vec![2, 2, 2, 2], vec![1, 1, 1, 1, 2], vec![3, 3, 4]] {
            assert_eq!(o.connected_moment(&e).unwrap(), o.connected_moment_filtered(&e).unwrap(), "{e:?}");
        }
    }

    #[test]
    fn rotation_has_the_right_cycle_type() {
        let d = StarDiagram::new(&[3, 1, 4]).unwrap();
        assert_eq!(d.cycle_type(), vec![3, 1, 4]);
    }

    #[test]
    fn budget_is_enforced() {
        let e = Oracle::new(6).moment(&[4, 4]).unwrap_err();
        assert_eq!(e, Error::BudgetExceeded { required: "105".into(), budget: 6 });
    }
}
