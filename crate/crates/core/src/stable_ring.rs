//! Stable computations in Λ(a): the τ relation, row reduction to the
//! staircase, the closed forms K_d / G_d and the Pieri rule.
//!
//! Relation used throughout: τh_p = h_p + a_{2−p}h_{p−1}. Applying τ^{s−1}
//! gives h_{r,s} = h_{r,s−1} + a_{s−r+1}h_{r−1,s−1}, which is the n-variable
//! identity h^{(n)}_{r,s} = h^{(n)}_{r,s−1} + (a_{s−r+1} − a_{n+s})h^{(n)}_{r−1,s−1}
//! with the n-dependent term dropped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::apoly::APoly;
use crate::formal_ring::{formal_pieri_terms, staircase, straighten};
use crate::shapes::{IntegerVector, Partition};

/// Σ c_ν(a)·s_ν with nonzero coefficients only.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurSum {
    terms: BTreeMap<Partition, APoly>,
}

impl SchurSum {
    pub fn zero() -> Self {
        SchurSum::default()
    }

    pub fn single(nu: Partition, c: APoly) -> Self {
        let mut s = SchurSum::zero();
        s.add_term(nu, &c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, nu: &Partition) -> APoly {
        self.terms.get(nu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &APoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, nu: Partition, c: &APoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(nu.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&nu);
        }
    }

    pub fn add(&self, other: &SchurSum) -> SchurSum {
        let mut out = self.clone();
        for (nu, c) in &other.terms {
            out.add_term(nu.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &APoly) -> SchurSum {
        let mut out = SchurSum::zero();
        for (nu, d) in &self.terms {
            out.add_term(nu.clone(), &(d * c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&APoly) -> APoly) -> SchurSum {
        let mut out = SchurSum::zero();
        for (nu, c) in &self.terms {
            out.add_term(nu.clone(), &f(c));
        }
        out
    }
}

impl fmt::Display for SchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (nu, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "s{}", nu)?;
            } else {
                write!(f, "({})*s{}", c, nu)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Serialize, Deserialize)]
struct SchurTermJson {
    nu: Partition,
    coeff: APoly,
}

impl Serialize for SchurSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<SchurTermJson> = self
            .terms
            .iter()
            .map(|(nu, c)| SchurTermJson { nu: nu.clone(), coeff: c.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<SchurTermJson> = Vec::deserialize(d)?;
        let mut out = SchurSum::zero();
        for t in v {
            out.add_term(t.nu, &t.coeff);
        }
        Ok(out)
    }
}

/// h_{r,s} = h_{r,s−1} + a_{s−r+1}·h_{r−1,s−1}, as (r', s', coefficient).
pub fn tau_step(r: i64, s: i64) -> [(i64, i64, APoly); 2] {
    [(r, s - 1, APoly::one()), (r - 1, s - 1, APoly::var(s - r + 1))]
}

/// Moves one determinant row labelled (γ, b) to second index `target`.
///
/// `room` is L − i for row i of an L-row determinant: the row vanishes once
/// γ + room < 0. Returns γ' ↦ coefficient.
pub fn reduce_row(gamma: i64, b: i64, target: i64, room: i64) -> BTreeMap<i64, APoly> {
    let mut cur: BTreeMap<i64, APoly> = BTreeMap::new();
    if gamma + room < 0 {
        return cur;
    }
    cur.insert(gamma, APoly::one());
    let mut b = b;
    while b > target {
        // (g, b) = (g, b−1) + a_{b−g+1}(g−1, b−1)
        let mut next: BTreeMap<i64, APoly> = BTreeMap::new();
        for (&g, c) in &cur {
            *next.entry(g).or_default() += c;
            if g - 1 + room >= 0 {
                next.entry(g - 1).or_default().add_product(c, &APoly::var(b - g + 1));
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
        b -= 1;
    }
    while b < target {
        // (g, b) = (g, b+1) − a_{b−g+2}(g−1, b); the second term stays at
        // level b, so keep expanding it until the row dies
        let mut next: BTreeMap<i64, APoly> = BTreeMap::new();
        let mut work = std::mem::take(&mut cur);
        while let Some((g, c)) = work.pop_last() {
            if g - 1 + room >= 0 {
                work.entry(g - 1)
                    .or_default()
                    .add_product(&c, &-APoly::var(b - g + 2));
            }
            *next.entry(g).or_default() += &c;
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
        b += 1;
    }
    cur
}

/// Rewrites s_{γ,β} as a combination of s_{γ',staircase}; keys are γ'.
pub fn reduce_to_staircase(gamma: &[i64], beta: &[i64]) -> BTreeMap<Vec<i64>, APoly> {
    assert_eq!(gamma.len(), beta.len(), "one second index per row");
    let l = gamma.len();
    let mut acc: BTreeMap<Vec<i64>, APoly> = BTreeMap::new();
    acc.insert(Vec::new(), APoly::one());
    for i in 0..l {
        let row = reduce_row(gamma[i], beta[i], i as i64, (l - 1 - i) as i64);
        let mut next: BTreeMap<Vec<i64>, APoly> = BTreeMap::new();
        for (prefix, c) in &acc {
            for (g, d) in &row {
                let mut key = prefix.clone();
                key.push(*g);
                next.entry(key).or_default().add_product(c, d);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// Straightens staircase-labelled elements into the Schur basis.
pub fn staircase_to_schur(labels: &BTreeMap<Vec<i64>, APoly>) -> SchurSum {
    let mut out = SchurSum::zero();
    for (gamma, c) in labels {
        let st = staircase(gamma.len());
        // with a staircase β every tie in the keys gives two equal rows
        let Some(s) = straighten(gamma, &st).expect("staircase labels always straighten") else {
            continue;
        };
        if s.mu.last().is_some_and(|&x| x < 0) {
            continue;
        }
        let nu = IntegerVector::new(s.mu)
            .to_partition()
            .expect("sorted keys give a partition");
        out.add_term(nu, &c.scale(&BigInt::from(s.sign)));
    }
    out
}

/// K_d(a) exactly as printed: Σ over j+d ≤ b_d ≤ … ≤ b_1 ≤ j+m−1 of
/// Π a_{b_i−μ_j−m+1}. Kept for comparison only; see [`k_d_recursive`].
pub fn k_d_closed(j: i64, mu_j: i64, m: i64, d: usize) -> APoly {
    let lo = j + d as i64;
    let hi = j + m - 1;
    weakly_monotone_sum(d, lo, hi, |b, _| APoly::var(b - mu_j - m + 1))
}

/// K_d(a) from the row recursion: coefficient of (μ_j+m−d) when row j,
/// labelled (μ_j+m, j−1+m), is brought down to second index j−1.
pub fn k_d_recursive(j: i64, mu_j: i64, m: i64, d: i64) -> APoly {
    // room is irrelevant here since γ never drops below μ_j
    reduce_row(mu_j + m, j - 1 + m, j - 1, i64::MAX / 4)
        .get(&(mu_j + m - d))
        .cloned()
        .unwrap_or_default()
}

/// G_d(a) as printed: (−1)^d Σ over e−k ≤ b_1 ≤ … ≤ b_d ≤ l−1 of
/// Π_i a_{b_i−p+k+i+1}.
pub fn g_d_closed(p: i64, k: i64, e: i64, l: i64, d: usize) -> APoly {
    let s = weakly_monotone_sum(d, e - k, l - 1, |b, i| APoly::var(b - p + k + i as i64 + 1));
    if d % 2 == 1 {
        -s
    } else {
        s
    }
}

/// G_d(a) from the row recursion (row l+1 moved from e−k up to l).
pub fn g_d_recursive(p: i64, k: i64, e: i64, l: i64, d: i64) -> APoly {
    reduce_row(p - k, e - k, l, 0)
        .get(&(p - k - d))
        .cloned()
        .unwrap_or_default()
}

/// Σ over lo ≤ b_1 ≤ … ≤ b_d ≤ hi of Π_i f(b_i, i) (i is 1-based).
fn weakly_monotone_sum(d: usize, lo: i64, hi: i64, f: impl Fn(i64, usize) -> APoly) -> APoly {
    fn rec(
        i: usize,
        d: usize,
        from: i64,
        hi: i64,
        acc: &APoly,
        f: &dyn Fn(i64, usize) -> APoly,
        out: &mut APoly,
    ) {
        if i > d {
            *out += acc;
            return;
        }
        for b in from..=hi {
            let next = acc * &f(b, i);
            rec(i + 1, d, b, hi, &next, f, out);
        }
    }
    let mut out = APoly::zero();
    rec(1, d, lo, hi, &APoly::one(), &f, &mut out);
    out
}

/// h_{p,e}·s_μ in the double Schur basis.
pub fn pieri_stable(p: usize, e: i64, mu: &Partition) -> SchurSum {
    if p == 0 {
        return SchurSum::single(mu.clone(), APoly::one());
    }
    let l = mu.len();
    let terms = formal_pieri_terms(p, e, &mu.to_vector(), &staircase(l))
        .expect("staircase has the right length");
    let mut labels: BTreeMap<Vec<i64>, APoly> = BTreeMap::new();
    for (g, b) in terms {
        for (gamma, c) in reduce_to_staircase(&g, &b) {
            *labels.entry(gamma).or_default() += &c;
        }
    }
    labels.retain(|_, c| !c.is_zero());
    staircase_to_schur(&labels)
}

/// APoly-linear extension of [`pieri_stable`]; h_{p,e} = 0 for p < 0.
pub fn multiply_by_h(p: i64, e: i64, s: &SchurSum) -> SchurSum {
    PieriTable::new().multiply_by_h(p, e, s)
}

/// Memoized Pieri products, shareable across threads.
#[derive(Default)]
pub struct PieriTable {
    memo: Mutex<HashMap<(usize, i64, Partition), Arc<SchurSum>>>,
}

impl PieriTable {
    pub fn new() -> Self {
        PieriTable::default()
    }

    pub fn pieri(&self, p: usize, e: i64, mu: &Partition) -> Arc<SchurSum> {
        let key = (p, e, mu.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(pieri_stable(p, e, mu));
        self.memo.lock().unwrap().insert(key, v.clone());
        v
    }

    pub fn multiply_by_h(&self, p: i64, e: i64, s: &SchurSum) -> SchurSum {
        if p < 0 {
            return SchurSum::zero();
        }
        let mut out = SchurSum::zero();
        for (mu, c) in s.iter() {
            out = out.add(&self.pieri(p as usize, e, mu).scale(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{is_horizontal_strip, partitions_up_to};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tau_step_examples() {
        let [a, b] = tau_step(3, 1);
        assert_eq!((a.0, a.1, a.2), (3, 0, APoly::one()));
        assert_eq!((b.0, b.1, b.2), (2, 0, APoly::var(2 - 3)));
        let [_, b] = tau_step(1, 1);
        assert_eq!(b.2, APoly::var(1));
    }

    #[test]
    fn staircase_is_identity() {
        let m = reduce_to_staircase(&[3, 1, 0], &[0, 1, 2]);
        assert_eq!(m.len(), 1);
        assert_eq!(m[&vec![3, 1, 0]], APoly::one());
    }

    #[test]
    fn pieri_examples() {
        let s = pieri_stable(1, 0, &p(&[1]));
        let mut expect = SchurSum::single(p(&[2]), APoly::one());
        expect.add_term(p(&[1, 1]), &APoly::one());
        expect.add_term(p(&[1]), &APoly::binomial(0, 1));
        assert_eq!(s, expect);
        assert_eq!(pieri_stable(1, 0, &Partition::empty()), SchurSum::single(p(&[1]), APoly::one()));
        assert_eq!(pieri_stable(2, 0, &Partition::empty()), SchurSum::single(p(&[2]), APoly::one()));
    }

    #[test]
    fn classical_limit_is_horizontal_strip() {
        for mu in partitions_up_to(3) {
            for pp in 1..=3 {
                for e in 0..=2 {
                    let s = pieri_stable(pp, e, &mu);
                    for (nu, c) in s.iter() {
                        let top = nu.size() == mu.size() + pp;
                        if top {
                            assert!(is_horizontal_strip(nu, &mu));
                            assert_eq!(c, &APoly::one());
                        }
                        assert_eq!(c.at_zero() != BigInt::from(0), top);
                    }
                }
            }
        }
    }

    #[test]
    fn multiply_by_h_examples() {
        let empty = SchurSum::single(Partition::empty(), APoly::one());
        assert_eq!(multiply_by_h(2, 0, &empty), SchurSum::single(p(&[2]), APoly::one()));
        assert!(multiply_by_h(2, 0, &SchurSum::zero()).is_zero());
        let c = APoly::binomial(3, -1);
        let s = SchurSum::single(p(&[2, 1]), c.clone());
        assert_eq!(multiply_by_h(1, 1, &s), pieri_stable(1, 1, &p(&[2, 1])).scale(&c));
        assert!(multiply_by_h(-1, 0, &s).is_zero());
    }

    #[test]
    fn k_d_printed_bounds_disagree_at_m1() {
        // the row recursion forces K_1 = a_{j−μ_j} for m = 1
        assert_eq!(k_d_recursive(2, 3, 1, 1), APoly::var(2 - 3));
        assert!(k_d_closed(2, 3, 1, 1).is_zero());
        assert_eq!(k_d_closed(2, 3, 4, 0), APoly::one());
    }

    #[test]
    fn g_d_matches_recursion() {
        for pp in 1..=4 {
            for k in 0..=pp {
                for l in 1..=3 {
                    for e in 0..l {
                        for d in 0..=(pp - k) {
                            assert_eq!(
                                g_d_closed(pp, k, e, l, d as usize),
                                g_d_recursive(pp, k, e, l, d),
                                "p={pp} k={k} e={e} l={l} d={d}"
                            );
                        }
                    }
                }
            }
        }
        assert_eq!(g_d_closed(3, 1, 2, 2, 1), -APoly::var(2 - 1 - 3 + 1 + 2));
    }

    #[test]
    fn json_shape() {
        let s = SchurSum::single(p(&[2, 1]), APoly::binomial(0, 1));
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"[{"nu":[2,1],"coeff":[{"coeff":"1","vars":[[0,1]]},{"coeff":"-1","vars":[[1,1]]}]}]"#
        );
        assert_eq!(serde_json::from_str::<SchurSum>(&j).unwrap(), s);
    }
}
