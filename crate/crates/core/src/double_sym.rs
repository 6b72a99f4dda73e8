//! Concrete double symmetric polynomials in finitely many variables, the
//! evaluation map x_n ↦ a_n, Schur-basis decomposition, and the brute-force
//! coefficient oracle.
//!
//! Two representations are used. [`XPoly`] stores every x-monomial and is
//! meant for small n (symmetry and stability checks). [`SymPoly`] keeps only
//! the coefficients of x^α for partitions α; for a symmetric polynomial that
//! determines everything, and it is what the oracle multiplies with.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::apoly::{AMonomial, APoly};
use crate::error::{Error, Result};
use crate::shapes::{partitions_containing, partitions_up_to, permutation_sign, permutations, Partition};
use crate::stable_ring::SchurSum;

/// Polynomial in x_1..x_n with coefficients in ℤ[a].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, APoly>,
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        XPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(c: APoly, n: usize) -> Self {
        let mut p = XPoly::zero(n);
        p.add_term(vec![0; n], &c);
        p
    }

    pub fn one(n: usize) -> Self {
        XPoly::constant(APoly::one(), n)
    }

    /// x_i (1-based).
    pub fn x(i: usize, n: usize) -> Self {
        assert!(1 <= i && i <= n);
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = XPoly::zero(n);
        p.add_term(e, &APoly::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &APoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> APoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &APoly) {
        assert_eq!(exps.len(), self.n);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> XPoly {
        XPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        assert_eq!(self.n, other.n);
        let mut acc: BTreeMap<Vec<u32>, APoly> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                acc.entry(e).or_default().add_product(c1, c2);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        XPoly { n: self.n, terms: acc }
    }

    pub fn scale(&self, c: &APoly) -> XPoly {
        let mut out = XPoly::zero(self.n);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), &(d * c));
        }
        out
    }

    /// τ^k applied to every coefficient.
    pub fn shift_indices(&self, k: i64) -> XPoly {
        XPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.shift_indices(k)))
                .collect(),
        }
    }

    /// Exchange x_i and x_j (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> XPoly {
        XPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, j - 1);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// Total x-degree of the top monomial.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

impl Serialize for XPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            x: &'a [u32],
            coeff: &'a APoly,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            terms: Vec<Term<'a>>,
        }
        Doc {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| Term { x: e, coeff: c }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for XPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            x: Vec<u32>,
            coeff: APoly,
        }
        #[derive(Deserialize)]
        struct Doc {
            n: usize,
            terms: Vec<Term>,
        }
        let doc = Doc::deserialize(d)?;
        let mut p = XPoly::zero(doc.n);
        for t in doc.terms {
            if t.x.len() != doc.n {
                return Err(serde::de::Error::custom("exponent vector length differs from n"));
            }
            p.add_term(t.x, &t.coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for XPoly {
    /// Readable form, e.g. `x_1 + x_2 - a_1 - a_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let xs: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x_{}", i + 1) } else { format!("x_{}^{}", i + 1, k) })
                .collect();
            let xpart = xs.join("*");
            // split c into its terms so signs read naturally
            for (m, coef) in c.terms() {
                let neg = coef < &BigInt::from(0);
                let mag = if neg { -coef } else { coef.clone() };
                let mut body = Vec::new();
                if mag != BigInt::from(1) || (m.is_one() && xpart.is_empty()) {
                    body.push(mag.to_string());
                }
                if !m.is_one() {
                    body.push(m.to_string());
                }
                if !xpart.is_empty() {
                    body.push(xpart.clone());
                }
                let body = body.join("*");
                if first {
                    write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
                    first = false;
                } else {
                    write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
                }
            }
        }
        Ok(())
    }
}

/// Determinant by expansion over column subsets (rows taken in order).
fn subset_det<T: Clone>(
    l: usize,
    entry: impl Fn(usize, usize) -> T,
    one: T,
    is_zero: impl Fn(&T) -> bool,
    mul: impl Fn(&T, &T) -> T,
    add: impl Fn(&T, &T) -> T,
    neg: impl Fn(&T) -> T,
    zero: T,
) -> T {
    let full = (1usize << l) - 1;
    let mut dp: Vec<Option<T>> = vec![None; full + 1];
    dp[0] = Some(one);
    for mask in 1..=full {
        let row = mask.count_ones() as usize - 1;
        let mut acc = zero.clone();
        for j in 0..l {
            if mask & (1 << j) == 0 {
                continue;
            }
            let rest = mask & !(1 << j);
            let Some(sub) = dp[rest].as_ref() else { continue };
            if is_zero(sub) {
                continue;
            }
            let e = entry(row, j);
            if is_zero(&e) {
                continue;
            }
            let mut term = mul(&e, sub);
            if (rest >> j).count_ones() % 2 == 1 {
                term = neg(&term);
            }
            acc = add(&acc, &term);
        }
        dp[mask] = Some(acc);
    }
    dp[full].take().unwrap_or(zero)
}

/// h_p(x_1..x_n‖a) = Σ_{n≥i_1≥…≥i_p≥1} Π_k (x_{i_k} − a_{i_k−k+1}).
///
/// Built from the split on whether i_1 = n:
/// h_p(n) = h_p(n−1) + (x_n − a_n)·τ^{−1}h_{p−1}(n).
pub fn h_n(p: usize, n: usize) -> XPoly {
    let mut memo: HashMap<(usize, usize), XPoly> = HashMap::new();
    h_rec(p, n, n, &mut memo)
}

fn h_rec(p: usize, m: usize, n: usize, memo: &mut HashMap<(usize, usize), XPoly>) -> XPoly {
    if p == 0 {
        return XPoly::one(n);
    }
    if m == 0 {
        return XPoly::zero(n);
    }
    if let Some(v) = memo.get(&(p, m)) {
        return v.clone();
    }
    let rest = h_rec(p, m - 1, n, memo);
    let lower = h_rec(p - 1, m, n, memo).shift_indices(-1);
    let factor = XPoly::x(m, n).sub(&XPoly::constant(APoly::var(m as i64), n));
    let out = rest.add(&factor.mul(&lower));
    memo.insert((p, m), out.clone());
    out
}

/// h^{(n)}_{r,s} = τ^s h_r(x_1..x_n‖a); zero for r < 0, one for r = 0.
pub fn h_n_shifted(r: i64, s: i64, n: usize) -> XPoly {
    if r < 0 {
        return XPoly::zero(n);
    }
    h_n(r as usize, n).shift_indices(s)
}

/// s_λ(x_1..x_n‖a) = det(h^{(n)}_{λ_i+j−i, j−1}).
pub fn double_schur_n(lambda: &Partition, n: usize) -> XPoly {
    let l = lambda.len();
    if l > n {
        return XPoly::zero(n);
    }
    if l == 0 {
        return XPoly::one(n);
    }
    let mut cache: HashMap<(i64, i64), XPoly> = HashMap::new();
    for i in 0..l {
        for j in 0..l {
            let r = lambda.parts()[i] as i64 + j as i64 - i as i64;
            cache
                .entry((r, j as i64))
                .or_insert_with(|| h_n_shifted(r, j as i64, n));
        }
    }
    subset_det(
        l,
        |i, j| cache[&(lambda.parts()[i] as i64 + j as i64 - i as i64, j as i64)].clone(),
        XPoly::one(n),
        XPoly::is_zero,
        XPoly::mul,
        XPoly::add,
        XPoly::neg,
        XPoly::zero(n),
    )
}

/// φ_n: x_n ↦ a_n, landing in n−1 variables.
pub fn phi_n(p: &XPoly) -> XPoly {
    let n = p.n;
    assert!(n >= 1, "phi_n needs at least one variable");
    let mut out = XPoly::zero(n - 1);
    for (e, c) in &p.terms {
        let k = e[n - 1];
        let c = if k == 0 {
            c.clone()
        } else {
            c * &APoly::term(1, AMonomial::from_factors([(n as i64, k)]))
        };
        out.add_term(e[..n - 1].to_vec(), &c);
    }
    out
}

/// Greedy elimination in the basis s_ν(x_1..x_n‖a), directly on an XPoly.
pub fn decompose(p: &XPoly) -> Result<SchurSum> {
    let n = p.n;
    let mut rest = p.clone();
    let mut out = SchurSum::zero();
    let mut basis: HashMap<Partition, XPoly> = HashMap::new();
    while let Some((lead, c)) = leading_term(&rest) {
        let trimmed: Vec<i64> = lead.iter().map(|&x| x as i64).collect();
        let nu = Partition::try_from(trimmed)
            .map_err(|_| Error::NotInSpan(format!("leading exponent {:?} is not a partition", lead)))?;
        let s = basis
            .entry(nu.clone())
            .or_insert_with(|| double_schur_n(&nu, n));
        rest = rest.sub(&s.scale(&c));
        out.add_term(nu, &c);
    }
    Ok(out)
}

fn leading_term(p: &XPoly) -> Option<(Vec<u32>, APoly)> {
    p.terms
        .iter()
        .max_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        })
        .map(|(e, c)| (e.clone(), c.clone()))
}

/// Symmetric polynomial in n variables, stored by its coefficients on x^α
/// for partitions α with at most n parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, APoly>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut p = SymPoly::zero(n);
        p.terms.insert(Vec::new(), APoly::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of x^α for α a partition (trimmed).
    pub fn coefficient(&self, alpha: &[u32]) -> APoly {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &APoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, alpha: Vec<u32>, c: &APoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(alpha.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    /// Reads off the partition-exponent coefficients of a symmetric XPoly.
    pub fn from_xpoly(p: &XPoly) -> SymPoly {
        let mut out = SymPoly::zero(p.n);
        for (e, c) in &p.terms {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let mut a = e.clone();
                while a.last() == Some(&0) {
                    a.pop();
                }
                out.add_term(a, c);
            }
        }
        out
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &APoly) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (a, d) in &self.terms {
            out.add_term(a.clone(), &(d * c));
        }
        out
    }

    pub fn shift_indices(&self, k: i64) -> SymPoly {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.shift_indices(k)))
                .collect(),
        }
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|a| a.iter().sum()).max()
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        self.mul_from_degree(other, 0)
    }

    /// Product, keeping only x-monomials of total degree ≥ `min_degree`.
    ///
    /// In the monomial basis: m_κ·m_ρ = Σ_α N^α_{κρ} m_α, where N counts the
    /// ways to write α = β + γ with β a rearrangement of κ and γ one of ρ.
    pub fn mul_from_degree(&self, other: &SymPoly, min_degree: u32) -> SymPoly {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = SymPoly::zero(n);
        for (k, cp) in &self.terms {
            let dk: u32 = k.iter().sum();
            for (r, cq) in &other.terms {
                let dr: u32 = r.iter().sum();
                if dk + dr < min_degree {
                    continue;
                }
                let prod = cp * cq;
                for (alpha, mult) in monomial_product(n, k, r).iter() {
                    let e = out.terms.entry(alpha.clone()).or_default();
                    if *mult == 1 {
                        *e += &prod;
                    } else {
                        e.add_scaled(&prod, &BigInt::from(*mult));
                    }
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

/// Distinct rearrangements of κ padded to length n.
fn rearrangements(n: usize, kappa: &[u32]) -> Vec<Vec<u32>> {
    let mut v = kappa.to_vec();
    v.resize(n, 0);
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(v.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| v[i - 1] < v[i]) else { break };
        let j = (i..n).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}

type Expansion = Arc<Vec<(Vec<u32>, u32)>>;

/// N^α_{κρ} for the partitions α with at most n parts, cached.
fn monomial_product(n: usize, kappa: &[u32], rho: &[u32]) -> Expansion {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Vec<u32>, Vec<u32>), Expansion>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let (k, r) = if kappa <= rho { (kappa, rho) } else { (rho, kappa) };
    let key = (n, k.to_vec(), r.to_vec());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut counts: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    let gammas = rearrangements(n, r);
    for beta in rearrangements(n, k) {
        for gamma in &gammas {
            let s: Vec<u32> = beta.iter().zip(gamma).map(|(x, y)| x + y).collect();
            if s.windows(2).all(|w| w[0] >= w[1]) {
                *counts.entry(sorted_key(&s)).or_default() += 1;
            }
        }
    }
    let v: Expansion = Arc::new(counts.into_iter().collect());
    cache.lock().unwrap().insert(key, v.clone());
    v
}

fn sorted_key(v: &[u32]) -> Vec<u32> {
    let mut s: Vec<u32> = v.iter().copied().filter(|&x| x > 0).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// e_k of the given variables.
fn elementary(k: usize, vars: &[i64]) -> APoly {
    // dp[j] = e_j of the prefix
    let mut dp = vec![APoly::zero(); k + 1];
    dp[0] = APoly::one();
    for &v in vars {
        for j in (1..=k).rev() {
            let add = &dp[j - 1] * &APoly::var(v);
            dp[j] += &add;
        }
    }
    dp[k].clone()
}

/// h_r(x_1..x_n‖a) in compressed form, straight from the defining sum.
///
/// Group the weakly decreasing index tuple by value m. The indices equal to
/// m occupy positions k0+1..k0+c where k0 counts the indices above m, and
/// contribute Π_{t=1..c}(x_m − a_{m−k0−t+1}); the coefficient of x_m^α there
/// is (−1)^{c−α} e_{c−α}(a_{m−k0}, …, a_{m−k0−c+1}).
pub fn sym_h(r: usize, n: usize) -> SymPoly {
    sym_h_from_degree(r, n, 0)
}

/// [`sym_h`] without the x-monomials of degree below `min_degree`.
pub fn sym_h_from_degree(r: usize, n: usize, min_degree: u32) -> SymPoly {
    let mut out = SymPoly::zero(n);
    for alpha in partitions_up_to(r) {
        if alpha.len() > n || (alpha.size() as u32) < min_degree {
            continue;
        }
        let a: Vec<u32> = alpha.parts().iter().map(|&x| x as u32).collect();
        let c = h_coefficient(r, n, &a);
        out.add_term(a, &c);
    }
    out
}

fn h_coefficient(r: usize, n: usize, alpha: &[u32]) -> APoly {
    // states: k0 (indices used so far, by values > m) → accumulated coefficient
    let mut states: BTreeMap<usize, APoly> = BTreeMap::new();
    states.insert(0, APoly::one());
    for m in (1..=n).rev() {
        let am = alpha.get(m - 1).copied().unwrap_or(0) as usize;
        let mut next: BTreeMap<usize, APoly> = BTreeMap::new();
        for (&k0, acc) in &states {
            for c in am..=(r - k0) {
                let vars: Vec<i64> = (0..c).map(|t| m as i64 - k0 as i64 - t as i64).collect();
                let mut e = elementary(c - am, &vars);
                if (c - am) % 2 == 1 {
                    e = -e;
                }
                if e.is_zero() {
                    continue;
                }
                next.entry(k0 + c).or_default().add_product(acc, &e);
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    states.remove(&r).unwrap_or_default()
}

/// Thread-safe memo of compressed h's and double Schur polynomials.
#[derive(Default)]
pub struct Oracle {
    h: Mutex<HashMap<(usize, usize, u32), Arc<SymPoly>>>,
    schur: Mutex<HashMap<(Partition, usize, u32), Arc<SymPoly>>>,
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    pub fn h(&self, r: usize, n: usize) -> Arc<SymPoly> {
        self.h_from_degree(r, n, 0)
    }

    pub fn h_from_degree(&self, r: usize, n: usize, min_degree: u32) -> Arc<SymPoly> {
        let key = (r, n, min_degree.min(r as u32 + 1));
        if let Some(v) = self.h.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(sym_h_from_degree(r, n, key.2));
        self.h.lock().unwrap().insert(key, v.clone());
        v
    }

    /// τ^s h_r in n variables.
    pub fn h_shifted(&self, r: i64, s: i64, n: usize) -> SymPoly {
        self.h_shifted_from_degree(r, s, n, 0)
    }

    pub fn h_shifted_from_degree(&self, r: i64, s: i64, n: usize, min_degree: u32) -> SymPoly {
        if r < 0 {
            return SymPoly::zero(n);
        }
        self.h_from_degree(r as usize, n, min_degree).shift_indices(s)
    }

    pub fn schur(&self, lambda: &Partition, n: usize) -> Arc<SymPoly> {
        self.schur_from_degree(lambda, n, 0)
    }

    /// s_λ in n variables with x-monomials of degree < `min_degree` dropped.
    pub fn schur_from_degree(&self, lambda: &Partition, n: usize, min_degree: u32) -> Arc<SymPoly> {
        let key = (lambda.clone(), n, min_degree);
        if let Some(v) = self.schur.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(self.compute_schur(lambda, n, min_degree as i64));
        self.schur.lock().unwrap().insert(key, v.clone());
        v
    }

    // Jacobi–Trudi, expanded from the bottom row up over column subsets
    // (the matrix is close to lower Hessenberg, so bottom minors stay small).
    // Every term of the rows still to come has x-degree at most
    // Σ_{i<row}(λ_i − i) + Σ_{j∉mask} j, so partial minors can be cut that far
    // below min_degree.
    fn compute_schur(&self, lambda: &Partition, n: usize, min_degree: i64) -> SymPoly {
        let l = lambda.len();
        if l > n {
            return SymPoly::zero(n);
        }
        let lam = |i: usize| lambda.parts()[i] as i64;
        let size = lambda.size() as i64;
        // entry (i,j) has degree r = λ_i + j − i and is needed from r − (|λ| − min_degree)
        let entries: Vec<Vec<SymPoly>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let r = lam(i) + j as i64 - i as i64;
                        let from = (min_degree - size + r).max(0) as u32;
                        self.h_shifted_from_degree(r, j as i64, n, from)
                    })
                    .collect()
            })
            .collect();
        let full = (1usize << l) - 1;
        let mut dp: Vec<SymPoly> = vec![SymPoly::zero(n); full + 1];
        dp[0] = SymPoly::one(n);
        for mask in 1..=full {
            let row = l - mask.count_ones() as usize;
            let rest_rows: i64 = (0..row).map(|i| lam(i) - i as i64).sum();
            let rest_cols: i64 = (0..l).filter(|j| mask & (1 << j) == 0).map(|j| j as i64).sum();
            let keep = (min_degree - rest_rows - rest_cols).max(0) as u32;
            let mut acc = SymPoly::zero(n);
            for j in 0..l {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let rest = mask & !(1 << j);
                if dp[rest].is_zero() || entries[row][j].is_zero() {
                    continue;
                }
                let term = entries[row][j].mul_from_degree(&dp[rest], keep);
                acc = if (rest & ((1 << j) - 1)).count_ones() % 2 == 1 {
                    acc.add(&term.neg())
                } else {
                    acc.add(&term)
                };
            }
            dp[mask] = acc;
        }
        std::mem::replace(&mut dp[full], SymPoly::zero(n))
    }

    /// Coefficients of s_ν for all |ν| ≥ min_degree in the expansion of p.
    pub fn decompose_from_degree(&self, p: &SymPoly, min_degree: u32) -> Result<SchurSum> {
        let n = p.n;
        let mut rest = p.clone();
        let mut out = SchurSum::zero();
        loop {
            let lead = rest
                .terms
                .iter()
                .filter(|(a, _)| a.iter().sum::<u32>() >= min_degree)
                .max_by(|x, y| {
                    let dx: u32 = x.0.iter().sum();
                    let dy: u32 = y.0.iter().sum();
                    dx.cmp(&dy).then_with(|| x.0.cmp(y.0))
                })
                .map(|(a, c)| (a.clone(), c.clone()));
            let Some((alpha, c)) = lead else { break };
            let nu = Partition::new(alpha.iter().map(|&x| x as usize).collect())?;
            if nu.len() > n {
                return Err(Error::NotInSpan(format!("{} has more than {} rows", nu, n)));
            }
            let s = self.schur_from_degree(&nu, n, min_degree);
            // only degrees ≥ min_degree matter from here on
            for (a, d) in &s.terms {
                if a.iter().sum::<u32>() >= min_degree {
                    rest.add_term(a.clone(), &-(d * &c));
                }
            }
            out.add_term(nu, &c);
        }
        Ok(out)
    }

    /// Coefficients of s_λ·s_μ in n variables, for |ν| ≥ min_degree.
    pub fn product_at(&self, lambda: &Partition, mu: &Partition, n: usize, min_degree: u32) -> Result<SchurSum> {
        let dl = min_degree.saturating_sub(mu.size() as u32);
        let dm = min_degree.saturating_sub(lambda.size() as u32);
        let prod = self
            .schur_from_degree(lambda, n, dl)
            .mul_from_degree(&self.schur_from_degree(mu, n, dm), min_degree);
        self.decompose_from_degree(&prod, min_degree)
    }

    /// Stable coefficients c^ν_{λμ}(a) for all ν ⊇ μ with |ν| ≤ |λ|+|μ|.
    ///
    /// φ_n is a ring map killing exactly the s_ν with l(ν) = n, so the
    /// coefficient of s_ν is the same for every n ≥ l(ν). Each ν is read at
    /// n = max(l(ν), 1) and checked against n+1.
    pub fn product(&self, lambda: &Partition, mu: &Partition) -> Result<SchurSum> {
        let nus = partitions_containing(mu, lambda.size() + mu.size());
        self.coefficients(lambda, mu, &nus)
    }

    pub fn c_oracle(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<APoly> {
        Ok(self.coefficients(lambda, mu, std::slice::from_ref(nu))?.get(nu))
    }

    fn coefficients(&self, lambda: &Partition, mu: &Partition, nus: &[Partition]) -> Result<SchurSum> {
        let mut by_len: BTreeMap<usize, Vec<&Partition>> = BTreeMap::new();
        for nu in nus {
            if nu.contains(mu) && nu.size() <= lambda.size() + mu.size() {
                by_len.entry(nu.len().max(1)).or_default().push(nu);
            }
        }
        let mut out = SchurSum::zero();
        for (n, group) in by_len {
            let d = group.iter().map(|nu| nu.size()).min().unwrap() as u32;
            let first = self.product_at(lambda, mu, n, d)?;
            let second = self.product_at(lambda, mu, n + 1, d)?;
            for nu in group {
                let c = first.get(nu);
                if c != second.get(nu) {
                    return Err(Error::UnstableAtN(n));
                }
                out.add_term(nu.clone(), &c);
            }
        }
        Ok(out)
    }

    /// h_{p,e}·s_μ in n variables with a_i ↦ 0 for i > n, for |ν| ≥ |μ|.
    ///
    /// For e ≥ 1 the finite-n coefficients carry terms a_{n+s} that die in
    /// the stable limit; killing every a_i with i > n removes exactly those.
    pub fn pieri_at(&self, p: usize, e: i64, mu: &Partition, n: usize) -> Result<SchurSum> {
        let h = self.h_shifted(p as i64, e, n);
        let s = self.schur_from_degree(mu, n, (mu.size() as u32).saturating_sub(p as u32));
        let prod = h.mul_from_degree(&s, mu.size() as u32);
        let raw = self.decompose_from_degree(&prod, mu.size() as u32)?;
        Ok(raw.map_coeffs(|c| c.truncate_above(n as i64)))
    }

    /// Stable h_{p,e}·s_μ via two consecutive n starting at |μ|+p+1.
    pub fn pieri(&self, p: usize, e: i64, mu: &Partition) -> Result<SchurSum> {
        let n0 = mu.size() + p + 1;
        let first = self.pieri_at(p, e, mu, n0)?;
        let second = self.pieri_at(p, e, mu, n0 + 1)?;
        if first != second {
            return Err(Error::UnstableAtN(n0));
        }
        Ok(first)
    }
}

/// Convenience wrapper with a throwaway cache.
pub fn c_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<APoly> {
    Oracle::new().c_oracle(lambda, mu, nu)
}

/// All ways to add a horizontal strip of k boxes to μ.
pub fn add_horizontal_strips(mu: &Partition, k: usize) -> Vec<Partition> {
    fn rec(i: usize, rem: usize, mu: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        // row i (0-based); the row above caps the new length
        if rem == 0 {
            let mut v = cur.clone();
            v.extend((i..mu.len()).map(|r| mu.parts()[r]));
            out.push(Partition::from_sorted(v));
            return;
        }
        if i > mu.len() {
            return;
        }
        let old = mu.part(i + 1);
        let cap = if i == 0 { old + rem } else { mu.part(i).min(old + rem) };
        for new in (old..=cap).rev() {
            cur.push(new);
            rec(i + 1, rem - (new - old), mu, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, mu, &mut Vec::new(), &mut out);
    out
}

/// Classical s_λ·s_μ: expand s_λ = Σ_ω sgn(ω) h_{λ^ω} (Jacobi–Trudi at a = 0)
/// and apply the integer Pieri rule part by part.
pub fn classical_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let l = lambda.len();
    let mut total: BTreeMap<Partition, i64> = BTreeMap::new();
    for w in permutations(l) {
        let kappa: Vec<i64> = (0..l)
            .map(|i| lambda.parts()[i] as i64 + w[i] as i64 - i as i64)
            .collect();
        if kappa.iter().any(|&k| k < 0) {
            continue;
        }
        let mut cur: BTreeMap<Partition, i64> = BTreeMap::new();
        cur.insert(mu.clone(), 1);
        for &k in &kappa {
            let mut next: BTreeMap<Partition, i64> = BTreeMap::new();
            for (nu, c) in &cur {
                for bigger in add_horizontal_strips(nu, k as usize) {
                    *next.entry(bigger).or_insert(0) += c;
                }
            }
            cur = next;
        }
        let sgn = permutation_sign(&w) as i64;
        for (nu, c) in cur {
            *total.entry(nu).or_insert(0) += sgn * c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

pub fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let v = classical_product(lambda, mu).get(nu).copied().unwrap_or(0);
    assert!(v >= 0, "negative classical coefficient");
    v as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn xa(n: usize, i: usize, a: i64) -> XPoly {
        XPoly::x(i, n).sub(&XPoly::constant(APoly::var(a), n))
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_n(1, 1), xa(1, 1, 1));
        let expect = xa(2, 2, 2)
            .mul(&xa(2, 2, 1))
            .add(&xa(2, 2, 2).mul(&xa(2, 1, 0)))
            .add(&xa(2, 1, 1).mul(&xa(2, 1, 0)));
        assert_eq!(h_n(2, 2), expect);
        assert!(h_n(3, 0).is_zero());
        assert_eq!(h_n(0, 3), XPoly::one(3));
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(h_n_shifted(1, 1, 1), xa(1, 1, 2));
        assert_eq!(h_n_shifted(2, 0, 3), h_n(2, 3));
        assert!(h_n_shifted(-1, 4, 2).is_zero());
    }

    #[test]
    fn schur_examples() {
        let s1 = double_schur_n(&p(&[1]), 2);
        assert_eq!(s1, xa(2, 1, 1).add(&xa(2, 2, 2)));
        assert_eq!(s1.to_string(), "x_1 + x_2 - a_1 - a_2");
        assert!(double_schur_n(&p(&[1, 1]), 1).is_zero());
    }

    #[test]
    fn phi_examples() {
        assert!(phi_n(&xa(1, 1, 1)).is_zero());
        assert_eq!(phi_n(&h_n(2, 3)), h_n(2, 2));
        assert_eq!(phi_n(&double_schur_n(&p(&[2, 1]), 3)), double_schur_n(&p(&[2, 1]), 2));
    }

    #[test]
    fn decompose_examples() {
        let lam = p(&[2, 1]);
        let d = decompose(&double_schur_n(&lam, 3)).unwrap();
        assert_eq!(d, SchurSum::single(lam, APoly::one()));
        assert!(decompose(&XPoly::zero(2)).unwrap().is_zero());
        assert_eq!(decompose(&h_n(3, 2)).unwrap(), SchurSum::single(p(&[3]), APoly::one()));
        // x_1 alone is not symmetric
        assert!(decompose(&XPoly::x(2, 2)).is_err());
    }

    #[test]
    fn compressed_h_matches_expansion() {
        for n in 1..=4 {
            for r in 0..=4 {
                assert_eq!(sym_h(r, n), SymPoly::from_xpoly(&h_n(r, n)), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn compressed_schur_matches_expansion() {
        let o = Oracle::new();
        for lam in partitions_up_to(4) {
            for n in 1..=3 {
                let full = double_schur_n(&lam, n);
                assert_eq!(*o.schur(&lam, n), SymPoly::from_xpoly(&full), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn compressed_product_matches_expansion() {
        let a = double_schur_n(&p(&[2, 1]), 3);
        let b = double_schur_n(&p(&[1, 1]), 3);
        let full = SymPoly::from_xpoly(&a.mul(&b));
        let fast = SymPoly::from_xpoly(&a).mul(&SymPoly::from_xpoly(&b));
        assert_eq!(full, fast);
        let o = Oracle::new();
        assert_eq!(o.decompose_from_degree(&fast, 0).unwrap(), decompose(&a.mul(&b)).unwrap());
    }

    #[test]
    fn oracle_small_values() {
        let one = p(&[1]);
        assert_eq!(c_oracle(&one, &one, &one).unwrap(), APoly::binomial(0, 1));
        assert_eq!(c_oracle(&one, &one, &p(&[2])).unwrap(), APoly::one());
        assert!(c_oracle(&one, &p(&[2]), &p(&[1, 1])).unwrap().is_zero());
        assert_eq!(
            c_oracle(&p(&[1, 1]), &one, &p(&[1, 1])).unwrap(),
            APoly::binomial(0, 2)
        );
    }

    #[test]
    fn hand_check_one_variable() {
        // (x − a_1)² = (x − a_1)(x − a_0) + (a_0 − a_1)(x − a_1) in one variable
        let s1 = double_schur_n(&p(&[1]), 1);
        let d = decompose(&s1.mul(&s1)).unwrap();
        assert_eq!(d.get(&p(&[2])), APoly::one());
        assert_eq!(d.get(&p(&[1])), APoly::binomial(0, 1));
    }

    #[test]
    fn pieri_oracle_truncation() {
        let o = Oracle::new();
        let one = p(&[1]);
        // finite n: a_0 − a_{n+1}; stable: a_0
        let raw = {
            let n = 3;
            let h = o.h_shifted(1, 1, n);
            let prod = h.mul(&o.schur(&one, n));
            o.decompose_from_degree(&prod, 0).unwrap()
        };
        assert_eq!(raw.get(&one), APoly::binomial(0, 4));
        assert_eq!(o.pieri(1, 1, &one).unwrap().get(&one), APoly::var(0));
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_lr(&p(&[1, 1]), &p(&[1]), &p(&[2, 1])), 1);
        assert_eq!(classical_lr(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        let lam = p(&[3, 1]);
        assert_eq!(classical_lr(&lam, &Partition::empty(), &lam), 1);
        assert_eq!(add_horizontal_strips(&p(&[1]), 1).len(), 2);
        assert_eq!(add_horizontal_strips(&p(&[2, 1]), 2).len(), 4);
    }
}
