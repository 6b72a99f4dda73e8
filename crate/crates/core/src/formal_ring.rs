//! The free commutative ring on indeterminates h_{r,s}: determinant
//! expansion, straightening and the formal Pieri identity.
//!
//! Conventions: h_{r,s} = 0 for r < 0 and h_{0,s} = 1, so stored words only
//! ever contain factors with r ≥ 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{permutation_sign, permutations, weak_compositions, IntegerVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPair {
    pub r: i64,
    pub s: i64,
}

/// Sorted multiset of h_{r,s} with r ≥ 1; empty word is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HWord(Vec<HPair>);

impl HWord {
    pub fn one() -> Self {
        HWord(Vec::new())
    }

    /// `None` when some factor has r < 0 (the word is zero).
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Option<Self> {
        let mut v = Vec::new();
        for (r, s) in pairs {
            if r < 0 {
                return None;
            }
            if r > 0 {
                v.push(HPair { r, s });
            }
        }
        v.sort();
        Some(HWord(v))
    }

    pub fn factors(&self) -> &[HPair] {
        &self.0
    }

    pub fn mul(&self, other: &HWord) -> HWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort();
        HWord(v)
    }
}

impl fmt::Display for HWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, h) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "h[{},{}]", h.r, h.s)?;
        }
        Ok(())
    }
}

/// Integer combination of h-words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SignedHSum {
    terms: BTreeMap<HWord, i64>,
}

impl SignedHSum {
    pub fn zero() -> Self {
        SignedHSum::default()
    }

    pub fn one() -> Self {
        SignedHSum::word(HWord::one())
    }

    pub fn word(w: HWord) -> Self {
        let mut s = SignedHSum::zero();
        s.add_word(w, 1);
        s
    }

    /// A single h_{r,s}, with the zero/unit conventions.
    pub fn h(r: i64, s: i64) -> Self {
        match HWord::from_pairs([(r, s)]) {
            Some(w) => SignedHSum::word(w),
            None => SignedHSum::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HWord, &i64)> {
        self.terms.iter()
    }

    pub fn add_word(&mut self, w: HWord, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SignedHSum) -> SignedHSum {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_word(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> SignedHSum {
        if c == 0 {
            return SignedHSum::zero();
        }
        SignedHSum {
            terms: self.terms.iter().map(|(w, &v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SignedHSum) -> SignedHSum {
        let mut out = SignedHSum::zero();
        for (w1, &c1) in &self.terms {
            for (w2, &c2) in &other.terms {
                out.add_word(w1.mul(w2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SignedHSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, &c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{}", w)?;
        }
        Ok(())
    }
}

/// (0, 1, …, l−1)
pub fn staircase(l: usize) -> Vec<i64> {
    (0..l as i64).collect()
}

fn check_len(mu_len: usize, beta: &[i64]) -> Result<()> {
    if beta.len() < mu_len {
        return Err(Error::LengthMismatch {
            needed: mu_len,
            got: beta.len(),
        });
    }
    Ok(())
}

/// Π_i h_{μ_i, β_i}.
pub fn h_word(mu: &IntegerVector, beta: &[i64]) -> Result<SignedHSum> {
    check_len(mu.len(), beta)?;
    let pairs = mu.entries().iter().zip(beta).map(|(&m, &b)| (m, b));
    Ok(match HWord::from_pairs(pairs) {
        Some(w) => SignedHSum::word(w),
        None => SignedHSum::zero(),
    })
}

/// det(h_{μ_i+j−i, β_i+j−i}) of size l(μ), expanded over S_l.
pub fn jacobi_trudi(mu: &IntegerVector, beta: &[i64]) -> Result<SignedHSum> {
    jacobi_trudi_slice(mu.entries(), beta)
}

/// Same, with the size taken from the (untrimmed) slice length.
pub fn jacobi_trudi_slice(mu: &[i64], beta: &[i64]) -> Result<SignedHSum> {
    let l = mu.len();
    check_len(l, beta)?;
    let mut out = SignedHSum::zero();
    for w in permutations(l) {
        let pairs = (0..l).map(|i| {
            let shift = w[i] as i64 - i as i64;
            (mu[i] + shift, beta[i] + shift)
        });
        if let Some(word) = HWord::from_pairs(pairs) {
            out.add_word(word, permutation_sign(&w) as i64);
        }
    }
    Ok(out)
}

/// Outcome of straightening a labelled Schur element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Straightened {
    pub sign: i32,
    pub mu: Vec<i64>,
    pub beta: Vec<i64>,
}

/// Sorts the keys μ_i − i into strictly decreasing order by adjacent R̄
/// swaps, one sign flip per swap. `Ok(None)` means two determinant rows
/// coincide.
pub fn straighten(mu: &[i64], beta: &[i64]) -> Result<Option<Straightened>> {
    let l = mu.len();
    check_len(l, beta)?;
    // R̄_{i,i+1} on (μ, β) swaps the pairs (μ_i − i, β_i − i) and (μ_{i+1} − i − 1, β_{i+1} − i − 1)
    let mut keys: Vec<(i64, i64)> = (0..l)
        .map(|i| (mu[i] - i as i64, beta[i] - i as i64))
        .collect();
    let mut sign = 1;
    for pass in 0..l {
        let mut swapped = false;
        for i in 0..l.saturating_sub(1 + pass) {
            if keys[i].0 < keys[i + 1].0 {
                keys.swap(i, i + 1);
                sign = -sign;
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    for i in 0..l.saturating_sub(1) {
        if keys[i].0 == keys[i + 1].0 {
            if keys[i].1 == keys[i + 1].1 {
                return Ok(None);
            }
            return Err(Error::NotStraightenable(i + 1, i + 2));
        }
    }
    Ok(Some(Straightened {
        sign,
        mu: keys.iter().enumerate().map(|(i, k)| k.0 + i as i64).collect(),
        beta: keys.iter().enumerate().map(|(i, k)| k.1 + i as i64).collect(),
    }))
}

/// One labelled Schur element s_{μ+σ, β′+σ} per composition σ of p with
/// at most l+1 parts, β′ = (β_1, …, β_l, e_val − p). Both vectors have
/// length l+1.
pub fn formal_pieri_terms(
    p: usize,
    e_val: i64,
    mu: &IntegerVector,
    beta: &[i64],
) -> Result<Vec<(Vec<i64>, Vec<i64>)>> {
    let l = mu.len();
    check_len(l, beta)?;
    let mut base_mu = mu.padded(l + 1);
    base_mu[l] = 0;
    let mut base_beta: Vec<i64> = beta[..l].to_vec();
    base_beta.push(e_val - p as i64);
    Ok(weak_compositions(p, l + 1)
        .into_iter()
        .map(|sigma| {
            let m = base_mu.iter().zip(&sigma).map(|(a, &s)| a + s as i64).collect();
            let b = base_beta.iter().zip(&sigma).map(|(a, &s)| a + s as i64).collect();
            (m, b)
        })
        .collect())
}
