//! Coefficient computations: tableau Pieri, K^ν_{κμ}(a), and c^ν_{λμ}(a)
//! three ways.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::apoly::APoly;
use crate::error::{Error, Result};
use crate::shapes::{lambda_omega, partitions_containing, permutations, IntegerVector, Partition};
use crate::stable_ring::{PieriTable, SchurSum};
use crate::tableaux::{
    enumerate_k_tableaux, enumerate_lr_tableaux, enumerate_pieri_tableaux, weight_sum,
    ReadingOrder,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KostkaMethod {
    Recursion,
    Tableaux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LrMethod {
    Theorem,
    Corollary,
    Alternating,
    Oracle,
}

impl LrMethod {
    pub const ALL: [LrMethod; 4] = [
        LrMethod::Theorem,
        LrMethod::Corollary,
        LrMethod::Alternating,
        LrMethod::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LrMethod::Theorem => "theorem",
            LrMethod::Corollary => "corollary",
            LrMethod::Alternating => "alternating",
            LrMethod::Oracle => "oracle",
        }
    }
}

/// h_{p,e}·s_μ by summing row-order weights of Yamanouchi Pieri tableaux.
/// Only claimed for e < l(μ). Plain entries are capped as in
/// [`kostka_tableaux`] and the a_{cap+1} telescoping tail dropped.
pub fn pieri_tableau(p: usize, e: usize, mu: &Partition) -> Result<SchurSum> {
    if e >= mu.len() {
        return Err(Error::UnsupportedHypothesis(format!(
            "tableau Pieri rule needs e < l(mu), got e={e}, l(mu)={}",
            mu.len()
        )));
    }
    let mut out = SchurSum::zero();
    for nu in partitions_containing(mu, mu.size() + p) {
        let cap = (mu.len() + e + 1).max(nu.len()) as u32;
        let ts = enumerate_pieri_tableaux(p, e, mu, &nu, Some(cap));
        out.add_term(nu, &weight_sum(&ts, mu, ReadingOrder::Row).truncate_above(cap as i64));
    }
    Ok(out)
}

/// Memoizing engine for the Pieri fold behind K and the alternating sum.
#[derive(Default)]
pub struct LrEngine {
    pieri: PieriTable,
    kostka: Mutex<HashMap<(IntegerVector, Partition), Arc<SchurSum>>>,
}

impl LrEngine {
    pub fn new() -> Self {
        LrEngine::default()
    }

    /// h_κ·s_μ, folding h_{κ_i, i−1} from the last row up.
    pub fn kostka_all(&self, kappa: &IntegerVector, mu: &Partition) -> Arc<SchurSum> {
        let key = (kappa.clone(), mu.clone());
        if let Some(v) = self.kostka.lock().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc = SchurSum::single(mu.clone(), APoly::one());
        if kappa.entries().iter().any(|&k| k < 0) {
            acc = SchurSum::zero();
        }
        for i in (1..=kappa.len()).rev() {
            if acc.is_zero() {
                break;
            }
            acc = self.pieri.multiply_by_h(kappa.get(i), i as i64 - 1, &acc);
        }
        let v = Arc::new(acc);
        self.kostka.lock().unwrap().insert(key, v.clone());
        v
    }

    /// Σ_ω sgn(ω) h_{λ^ω}·s_μ; its ν-coefficients are c^ν_{λμ}(a).
    pub fn alternating_all(&self, lambda: &Partition, mu: &Partition) -> SchurSum {
        let l = lambda.len();
        let mut out = SchurSum::zero();
        for omega in permutations(l) {
            let (kappa, sgn) = lambda_omega(lambda, &omega);
            let k = self.kostka_all(&kappa, mu);
            out = out.add(&k.scale(&APoly::constant(sgn as i64)));
        }
        out
    }

    pub fn c_alternating(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> APoly {
        self.alternating_all(lambda, mu).get(nu)
    }
}

/// K^ν_{κμ}(a).
///
/// The tableau method caps plain entries per row and drops every a_i whose
/// index only the capped top entries can reach. Rows with e ≥ l(current
/// shape) otherwise leave a_{cap+…} tails, the analogue of the finite-n
/// a_{n+s} terms. The recursion is the reference.
pub fn kostka(kappa: &IntegerVector, mu: &Partition, nu: &Partition, method: KostkaMethod) -> APoly {
    match method {
        KostkaMethod::Recursion => LrEngine::new().kostka_all(kappa, mu).get(nu),
        KostkaMethod::Tableaux => kostka_tableaux(kappa, mu, nu, default_kostka_cap(kappa, mu, nu)),
    }
}

/// l(μ) + l(κ), or l(ν) if larger.
pub fn default_kostka_cap(kappa: &IntegerVector, mu: &Partition, nu: &Partition) -> u32 {
    (mu.len() + kappa.len()).max(nu.len()) as u32
}

/// Tableau side of K with every plain entry at most `cap`, then a_i ↦ 0
/// for i > cap.
pub fn kostka_tableaux(kappa: &IntegerVector, mu: &Partition, nu: &Partition, cap: u32) -> APoly {
    if kappa.entries().iter().any(|&k| k < 0) {
        return APoly::zero();
    }
    let shape: Vec<usize> = kappa.entries().iter().map(|&k| k as usize).collect();
    let ts = enumerate_k_tableaux(&shape, mu, nu, cap);
    weight_sum(&ts, mu, ReadingOrder::Row).truncate_above(cap as i64)
}

pub fn c_alternating(lambda: &Partition, mu: &Partition, nu: &Partition) -> APoly {
    LrEngine::new().c_alternating(lambda, mu, nu)
}

/// Column-word Yamanouchi, column-strict λ-tableaux; weights by ρ^r.
pub fn c_theorem(lambda: &Partition, mu: &Partition, nu: &Partition) -> APoly {
    let ts = enumerate_lr_tableaux(lambda, mu, nu, None);
    weight_sum(&ts, mu, ReadingOrder::Row)
}

/// Same tableaux, weights by ρ^c.
pub fn c_corollary(lambda: &Partition, mu: &Partition, nu: &Partition) -> APoly {
    let ts = enumerate_lr_tableaux(lambda, mu, nu, None);
    weight_sum(&ts, mu, ReadingOrder::Column)
}

/// s_λ·s_μ = Σ_ν c^ν_{λμ}(a) s_ν via the tableau rule.
pub fn expand_product(lambda: &Partition, mu: &Partition) -> SchurSum {
    let nus = partitions_containing(mu, lambda.size() + mu.size());
    let coeffs: Vec<(Partition, APoly)> = nus
        .into_par_iter()
        .map(|nu| {
            let c = c_theorem(lambda, mu, &nu);
            (nu, c)
        })
        .collect();
    let mut out = SchurSum::zero();
    for (nu, c) in coeffs {
        out.add_term(nu, &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pieri_tableau_small() {
        let s = pieri_tableau(1, 0, &p(&[1])).unwrap();
        assert_eq!(s.get(&p(&[2])), APoly::one());
        assert_eq!(s.get(&p(&[1, 1])), APoly::one());
        assert_eq!(s.get(&p(&[1])), APoly::binomial(0, 1));
        assert_eq!(s.len(), 3);
        assert!(matches!(pieri_tableau(1, 5, &p(&[1])), Err(Error::UnsupportedHypothesis(_))));
    }

    #[test]
    fn kostka_examples() {
        let k11 = IntegerVector::new(vec![1, 1]);
        let e = Partition::empty();
        assert_eq!(kostka(&k11, &e, &p(&[2]), KostkaMethod::Recursion).at_zero(), num_bigint::BigInt::from(1));
        assert!(kostka(&IntegerVector::new(vec![2, -1]), &e, &p(&[1]), KostkaMethod::Recursion).is_zero());
        assert!(kostka(&IntegerVector::new(vec![2, -1]), &e, &p(&[1]), KostkaMethod::Tableaux).is_zero());
    }

    #[test]
    fn lr_examples() {
        let (l11, one) = (p(&[1, 1]), p(&[1]));
        assert_eq!(c_alternating(&l11, &one, &p(&[2, 1])), APoly::one());
        assert_eq!(c_alternating(&l11, &one, &p(&[1, 1])), APoly::binomial(0, 2));
        assert_eq!(c_theorem(&l11, &one, &p(&[1, 1])), APoly::binomial(0, 2));
        assert_eq!(c_corollary(&l11, &one, &p(&[1, 1])), APoly::binomial(0, 2));
        assert!(c_theorem(&l11, &p(&[2]), &p(&[1, 1])).is_zero());
        let s = expand_product(&one, &one);
        assert_eq!(s.len(), 3);
        assert_eq!(s.get(&one), APoly::binomial(0, 1));
        let s = expand_product(&Partition::empty(), &p(&[2, 1]));
        assert_eq!(s, SchurSum::single(p(&[2, 1]), APoly::one()));
    }
}
