//! Exhaustive identity checks over size-bounded grids. Shared by the CLI
//! `verify` subcommands and the acceptance tests.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::apoly::{AMonomial, APoly};
use crate::double_sym::{classical_product, double_schur_n, h_n_shifted, phi_n, Oracle, XPoly};
use crate::formal_ring::{formal_pieri_terms, jacobi_trudi, jacobi_trudi_slice, staircase, SignedHSum};
use crate::involutions::{
    classify_bad, monomial_involution, monomial_is_good, one_row_fillings, pieri_bad_pair_with,
    psi_trace, bad_pair_row, row_target, signed_monomial,
};
use crate::lr::{c_corollary, c_theorem, pieri_tableau, LrEngine};
use crate::shapes::{
    is_horizontal_strip, lambda_omega, partitions_containing, partitions_up_to, permutations, Partition,
};
use crate::stable_ring::pieri_stable;
use crate::tableaux::{enumerate_k_tableaux, expand_monomials, tableau_weight, ReadingOrder, Tableau};

/// Failures listed in a report before the rest are only counted.
const SHOWN: usize = 20;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &str) -> Self {
        Report { name: name.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < SHOWN {
                self.failures.push(msg());
            }
        }
    }

    fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = SHOWN.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    /// Runs `f` on every case in parallel and merges in case order.
    fn par_cases<T: Sync>(name: &str, cases: &[T], f: impl Fn(&T, &mut Report) + Sync) -> Report {
        let parts: Vec<Report> = cases
            .par_iter()
            .map(|c| {
                let mut r = Report::new(name);
                f(c, &mut r);
                r
            })
            .collect();
        let mut out = Report::new(name);
        for p in parts {
            out.absorb(p);
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks, {} failures", self.name, self.checked, self.failed)?;
        for m in &self.failures {
            write!(f, "\n  {}", m.replace('\n', "\n    "))?;
        }
        Ok(())
    }
}

fn up_to_len(max_size: usize, max_len: usize) -> Vec<Partition> {
    partitions_up_to(max_size).into_iter().filter(|p| p.len() <= max_len).collect()
}

fn pairs(a: usize, b: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for l in partitions_up_to(a) {
        for m in partitions_up_to(b) {
            out.push((l.clone(), m));
        }
    }
    out
}

/// h_{p,e}·JT(μ) = Σ_σ JT(μ+σ, β′+σ) in the free ring, β the staircase.
pub fn free_ring_pieri(max_mu: usize, max_len: usize, max_p: usize, max_e: i64) -> Report {
    let mut cases = Vec::new();
    for mu in up_to_len(max_mu, max_len) {
        for p in 1..=max_p {
            for e in 0..=max_e {
                cases.push((mu.clone(), p, e));
            }
        }
    }
    Report::par_cases("free-ring pieri", &cases, |(mu, p, e), r| {
        let beta = staircase(mu.len());
        let lhs = SignedHSum::h(*p as i64, *e).mul(&jacobi_trudi(&mu.to_vector(), &beta).unwrap());
        let mut rhs = SignedHSum::zero();
        for (m, b) in formal_pieri_terms(*p, *e, &mu.to_vector(), &beta).unwrap() {
            rhs = rhs.add(&jacobi_trudi_slice(&m, &b).unwrap());
        }
        r.check(lhs == rhs, || format!("p={p} e={e} mu={mu}"));
    })
}

fn random_apoly(rng: &mut StdRng, max_deg: u32) -> APoly {
    let mut p = APoly::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let deg = rng.gen_range(0..=max_deg);
        let m = AMonomial::from_factors((0..deg).map(|_| (rng.gen_range(-3..=4), 1)));
        p.add_term(m, &BigInt::from(rng.gen_range(-5..=5)));
    }
    p
}

/// Ring axioms on random triples, symbolically and at three random rational
/// points each. Deterministic in `seed`.
pub fn ring_axioms(seed: u64, trials: usize, max_deg: u32) -> Report {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rep = Report::new("ring axioms");
    for t in 0..trials {
        let (p, q, r) = (random_apoly(&mut rng, max_deg), random_apoly(&mut rng, max_deg), random_apoly(&mut rng, max_deg));
        let sides = [
            (&(&p * &q) * &r, &p * &(&q * &r)),
            (&p * &q, &q * &p),
            (&p + &q, &q + &p),
            (&p * &(&q + &r), &(&p * &q) + &(&p * &r)),
        ];
        for (k, (l, rt)) in sides.iter().enumerate() {
            rep.check(l == rt, || format!("trial {t} identity {k}: p={p} q={q} r={r}"));
        }
        for _ in 0..3 {
            let sigma: HashMap<i64, BigRational> = (-3..=4)
                .map(|i| (i, BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into())))
                .collect();
            let ev = |x: &APoly| x.substitute(&sigma).unwrap();
            let (a, b, c) = (ev(&p), ev(&q), ev(&r));
            for (k, (l, rt)) in sides.iter().enumerate() {
                rep.check(ev(l) == ev(rt), || format!("trial {t} identity {k} at a point: p={p} q={q} r={r}"));
            }
            rep.check(ev(&sides[0].0) == &(&a * &b) * &c, || format!("trial {t} evaluation of p*q*r"));
            rep.check(ev(&sides[3].0) == &a * &(&b + &c), || format!("trial {t} evaluation of p*(q+r)"));
        }
    }
    rep
}

/// h^{(n)}_{r,s} = h^{(n)}_{r,s−1} + (a_{s−r+1} − a_{n+s}) h^{(n)}_{r−1,s−1}.
pub fn shifted_h_recursion(max_r: i64, max_s: i64, max_n: usize) -> Report {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for r in 1..=max_r {
            for s in 1..=max_s {
                cases.push((r, s, n));
            }
        }
    }
    Report::par_cases("shifted h recursion", &cases, |&(r, s, n), rep| {
        let lhs = h_n_shifted(r, s, n);
        let a = APoly::binomial(s - r + 1, n as i64 + s);
        let rhs = h_n_shifted(r, s - 1, n).add(&h_n_shifted(r - 1, s - 1, n).scale(&a));
        rep.check(lhs == rhs, || format!("r={r} s={s} n={n}"));
    })
}

/// φ_n(s_λ(x_1..x_n‖a)) = s_λ(x_1..x_{n−1}‖a).
pub fn stability(max_size: usize, min_n: usize, max_n: usize) -> Report {
    let lams = partitions_up_to(max_size);
    Report::par_cases("stability", &lams, |lam, rep| {
        let mut prev: Option<XPoly> = None;
        for n in (min_n - 1)..=max_n {
            let cur = double_schur_n(lam, n);
            if let Some(p) = &prev {
                // p is s_λ in n−1 variables, cur in n
                rep.check(phi_n(&cur) == *p, || format!("lambda={lam} n={n}"));
            }
            prev = Some(cur);
        }
    })
}

/// pieri_stable, the oracle and (for e < l(μ)) the tableau rule agree.
pub fn pieri_agreement(max_p: usize, max_mu: usize) -> Report {
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_mu) {
        for p in 1..=max_p {
            for e in 0..=mu.len() {
                cases.push((mu.clone(), p, e));
            }
        }
    }
    let oracle = Oracle::new();
    Report::par_cases("pieri agreement", &cases, |(mu, p, e), rep| {
        let s = pieri_stable(*p, *e as i64, mu);
        let o = oracle.pieri(*p, *e as i64, mu);
        rep.check(o.as_ref() == Ok(&s), || format!("oracle: p={p} e={e} mu={mu}"));
        if *e < mu.len() {
            let t = pieri_tableau(*p, *e, mu).unwrap();
            rep.check(t == s, || format!("tableau: p={p} e={e} mu={mu}"));
        }
    })
}

/// Every ν in the support of h_{p,e}·s_μ contains μ with ν/μ a horizontal
/// strip, for e ≤ l(μ).
pub fn pieri_cancellation(max_p: usize, max_mu: usize) -> Report {
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_mu) {
        for p in 1..=max_p {
            for e in 0..=mu.len() {
                cases.push((mu.clone(), p, e));
            }
        }
    }
    Report::par_cases("pieri cancellation", &cases, |(mu, p, e), rep| {
        let s = pieri_stable(*p, *e as i64, mu);
        for nu in partitions_containing(&Partition::empty(), mu.size() + p) {
            if nu.contains(mu) && is_horizontal_strip(&nu, mu) {
                continue;
            }
            let c = s.get(&nu);
            rep.check(c.is_zero(), || format!("p={p} e={e} mu={mu} nu={nu}: {c}"));
        }
    })
}

/// Four-way agreement of c^ν_{λμ}(a), plus homogeneity of degree
/// |λ|+|μ|−|ν| and vanishing for μ ⊄ ν.
pub fn lr_agreement(max_lambda: usize, max_mu: usize) -> (Report, Report) {
    let cases = pairs(max_lambda, max_mu);
    let oracle = Oracle::new();
    let engine = LrEngine::new();
    let parts: Vec<(Report, Report)> = cases
        .par_iter()
        .map(|(lam, mu)| {
            let mut agree = Report::new("four-way lr");
            let mut homog = Report::new("homogeneity");
            let size = lam.size() + mu.size();
            let product = oracle.product(lam, mu);
            if let Err(e) = &product {
                agree.check(false, || format!("oracle lambda={lam} mu={mu}: {e}"));
            }
            let alt = engine.alternating_all(lam, mu);
            for nu in partitions_up_to(size) {
                let t = c_theorem(lam, mu, &nu);
                let c = c_corollary(lam, mu, &nu);
                let a = alt.get(&nu);
                let o = product.as_ref().map(|p| p.get(&nu)).unwrap_or_default();
                if nu.contains(mu) {
                    let ok = t == c && c == a && a == o;
                    agree.check(ok, || {
                        format!("lambda={lam} mu={mu} nu={nu}: theorem={t} corollary={c} alternating={a} oracle={o}")
                    });
                    let d = (size - nu.size()) as u32;
                    homog.check(t.is_homogeneous_of(d), || {
                        format!("lambda={lam} mu={mu} nu={nu}: {t} not of degree {d}")
                    });
                } else {
                    let zero = [&t, &c, &a, &o].iter().all(|x| x.is_zero());
                    homog.check(zero, || format!("lambda={lam} mu={mu} nu={nu}: nonzero with mu not in nu"));
                }
            }
            (agree, homog)
        })
        .collect();
    let (mut agree, mut homog) = (Report::new("four-way lr"), Report::new("homogeneity"));
    for (a, h) in parts {
        agree.absorb(a);
        homog.absorb(h);
    }
    (agree, homog)
}

/// c^ν_{λμ}(0) from the tableau rule against the integer Pieri expansion.
pub fn classical(max_lambda: usize, max_mu: usize) -> Report {
    let cases = pairs(max_lambda, max_mu);
    Report::par_cases("classical", &cases, |(lam, mu), rep| {
        let table = classical_product(lam, mu);
        for nu in partitions_containing(mu, lam.size() + mu.size()) {
            if nu.size() != lam.size() + mu.size() {
                let t = c_theorem(lam, mu, &nu).at_zero();
                rep.check(t == 0.into(), || format!("lambda={lam} mu={mu} nu={nu}: {t} at a=0"));
                continue;
            }
            let want = table.get(&nu).copied().unwrap_or(0);
            let got = c_theorem(lam, mu, &nu).at_zero();
            rep.check(got == want.into(), || format!("lambda={lam} mu={mu} nu={nu}: {got} vs {want}"));
        }
    })
}

/// Results of the ψ grid: ψ∘ψ = id per tableau, and per (i, j) the
/// summed weights of bad tableaux of shape κ and R̄_{i,i+1}κ agree.
pub struct PsiGrid {
    pub involution: Report,
    pub aggregate: Report,
    /// "λ μ ν (i,j) κ: Σ" lines in canonical order.
    pub sums: Vec<String>,
}

fn rbar(kappa: &[usize], i: usize) -> Option<Vec<usize>> {
    let mut k = kappa.to_vec();
    let (a, b) = (k[i - 1], k[i]);
    k[i - 1] = b.checked_sub(1)?;
    k[i] = a + 1;
    Some(k)
}

/// Over κ = λ^ω for every λ of length `len` with |λ| ≤ max_lambda and
/// every |μ| ≤ max_mu. Plain entries are capped at l(μ)+l(λ)+extra_cap (at
/// least l(ν)); ψ never changes the set of values.
pub fn psi_grid(max_lambda: usize, max_mu: usize, len: usize, extra_cap: u32) -> PsiGrid {
    let mut cases = Vec::new();
    for lam in partitions_up_to(max_lambda).into_iter().filter(|l| l.len() == len) {
        for mu in partitions_up_to(max_mu) {
            for nu in partitions_containing(&mu, mu.size() + lam.size()) {
                cases.push((lam.clone(), mu.clone(), nu));
            }
        }
    }
    let parts: Vec<(Report, Report, Vec<String>)> = cases
        .par_iter()
        .map(|(lam, mu, nu)| {
            let mut inv = Report::new("psi involution");
            let mut agg = Report::new("psi aggregate");
            let mut sums: BTreeMap<(usize, usize, Vec<usize>), APoly> = BTreeMap::new();
            let cap = ((mu.len() + lam.len()) as u32 + extra_cap).max(nu.len() as u32);
            for omega in permutations(lam.len()) {
                let (kappa, _) = lambda_omega(lam, &omega);
                if kappa.entries().iter().any(|&k| k < 0) {
                    continue;
                }
                let shape: Vec<usize> = kappa.entries().iter().map(|&k| k as usize).collect();
                for t in enumerate_k_tableaux(&shape, mu, nu, cap) {
                    let cell = match classify_bad(&t, mu, nu) {
                        Ok(Some(c)) => c,
                        Ok(None) => continue,
                        Err(e) => {
                            inv.check(false, || format!("classify failed on\n{t}\n{e}"));
                            continue;
                        }
                    };
                    let w = tableau_weight(&t, mu, ReadingOrder::Row);
                    *sums.entry((cell.row, cell.col, shape.clone())).or_default() += &w;
                    let round = psi_trace(&t, mu, nu).and_then(|tr| {
                        let back = psi_trace(&tr.result, mu, nu)?;
                        Ok((tr.result, back))
                    });
                    match round {
                        Ok((image, back)) => {
                            let same_cell = (back.cell.row, back.cell.col) == (cell.row, cell.col);
                            inv.check(back.result == t && same_cell, || {
                                format!(
                                    "mu={mu} nu={nu}: psi(psi(T)) != T for T =\n{t}\npsi(T) =\n{image}\npsi(psi(T)) =\n{}",
                                    back.result
                                )
                            });
                        }
                        Err(e) => inv.check(false, || format!("mu={mu} nu={nu}: psi failed on\n{t}\n{e}")),
                    }
                }
            }
            let mut lines = Vec::new();
            for ((i, j, k), w) in &sums {
                let Some(k2) = rbar(k, *i) else { continue };
                let other = sums.get(&(*i, *j, k2.clone())).cloned().unwrap_or_default();
                lines.push(format!("lambda={lam} mu={mu} nu={nu} ({i},{j}) {k:?}: {w}"));
                agg.check(*w == other, || {
                    format!("lambda={lam} mu={mu} nu={nu} ({i},{j}): {k:?} sums to {w}, {k2:?} to {other}")
                });
            }
            (inv, agg, lines)
        })
        .collect();
    let mut out = PsiGrid {
        involution: Report::new("psi involution"),
        aggregate: Report::new("psi aggregate"),
        sums: Vec::new(),
    };
    for (a, b, l) in parts {
        out.involution.absorb(a);
        out.aggregate.absorb(b);
        out.sums.extend(l);
    }
    out
}

fn one_row_cases(max_mu: usize, max_p: usize, max_e_extra: usize) -> Vec<(Partition, usize, usize)> {
    let mut cases = Vec::new();
    for mu in partitions_up_to(max_mu).into_iter().filter(|m| !m.is_empty()) {
        for e in 0..mu.len() + max_e_extra {
            for p in 1..=max_p {
                cases.push((mu.clone(), e, p));
            }
        }
    }
    cases
}

fn monomials(mu: &Partition, e: usize, p: usize) -> Vec<(Tableau, APoly)> {
    let l = mu.len() as u32;
    one_row_fillings(e, p, l + 1, l + 2)
        .iter()
        .flat_map(|t| expand_monomials(t, mu, ReadingOrder::Row))
        .collect()
}

/// On every bad one-row monomial tableau (row e+1 with e < l(μ), barred
/// entries ≤ l(μ)+1, plain ≤ l(μ)+2): the image is bad, has the opposite
/// monomial and the same barred word, and maps back.
pub fn monomial_grid(max_mu: usize, max_p: usize) -> Report {
    let cases = one_row_cases(max_mu, max_p, 0);
    Report::par_cases("monomial involution", &cases, |(mu, e, p), rep| {
        for (u, w) in monomials(mu, *e, *p) {
            if monomial_is_good(&u, mu).unwrap() {
                continue;
            }
            let res = monomial_involution(&u, mu).and_then(|v| {
                let back = monomial_involution(&v, mu)?;
                Ok((v, back))
            });
            match res {
                Ok((v, back)) => {
                    let ok = signed_monomial(&v, mu) == -w.clone()
                        && !monomial_is_good(&v, mu).unwrap()
                        && row_target(&v, mu) == row_target(&u, mu)
                        && back == u;
                    rep.check(ok, || format!("mu={mu}: {u} -> {v} -> {back}"));
                }
                Err(err) => rep.check(false, || format!("mu={mu}: {u}: {err}")),
            }
        }
    })
}

/// On every one-row monomial tableau with a bad target ν (d ≠ 0): the
/// image targets R̄_{i,i+1}ν, has the same monomial, and the map at the
/// same i sends it back.
pub fn pairing_grid(max_mu: usize, max_p: usize) -> Report {
    let cases = one_row_cases(max_mu, max_p, 1);
    Report::par_cases("pieri pairing", &cases, |(mu, e, p), rep| {
        for (u, w) in monomials(mu, *e, *p) {
            let nu = row_target(&u, mu);
            let Some(i) = bad_pair_row(&nu, mu) else { continue };
            let at = |k: usize| nu.get(k - 1).copied().unwrap_or(0);
            if at(i + 1) == at(i) + 1 {
                continue;
            }
            let mut want = nu.clone();
            want.resize(want.len().max(i + 1), 0);
            want.swap(i - 1, i);
            want[i - 1] -= 1;
            want[i] += 1;
            while want.last() == Some(&0) {
                want.pop();
            }
            let res = pieri_bad_pair_with(&u, mu, i).and_then(|v| {
                let back = pieri_bad_pair_with(&v, mu, i)?;
                Ok((v, back))
            });
            match res {
                Ok((v, back)) => {
                    let ok = signed_monomial(&v, mu) == w && row_target(&v, mu) == want && back == u;
                    rep.check(ok, || format!("mu={mu} i={i}: {u} -> {v} -> {back}"));
                }
                Err(err) => rep.check(false, || format!("mu={mu} i={i}: {u}: {err}")),
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Pieri,
    Lr,
    Involutions,
    Ring,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "pieri" => Suite::Pieri,
            "lr" => Suite::Lr,
            "involutions" => Suite::Involutions,
            "ring" => Suite::Ring,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

/// The suites behind `verify`, every grid bounded by `w`.
pub fn run_suite(suite: Suite, w: usize, seed: u64) -> Vec<Report> {
    let w3 = w.min(3);
    let mut out = Vec::new();
    if matches!(suite, Suite::Ring | Suite::All) {
        out.push(ring_axioms(seed, 50 * w.max(1), w.max(1) as u32));
        out.push(free_ring_pieri(w, 3, w3, 3));
        out.push(shifted_h_recursion(w as i64, w3 as i64, w));
        out.push(stability(w, 2, w.max(2)));
    }
    if matches!(suite, Suite::Pieri | Suite::All) {
        out.push(pieri_agreement(w3, w));
        out.push(pieri_cancellation(w3, w));
    }
    if matches!(suite, Suite::Lr | Suite::All) {
        let (a, h) = lr_agreement(w, w);
        out.push(a);
        out.push(h);
        out.push(classical(w, w));
    }
    if matches!(suite, Suite::Involutions | Suite::All) {
        let g = psi_grid(w, w, 2, 0);
        out.push(g.involution);
        out.push(g.aggregate);
        out.push(monomial_grid(w, w));
        out.push(pairing_grid(w, w));
    }
    out
}
