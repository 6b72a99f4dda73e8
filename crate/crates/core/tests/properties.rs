use proptest::prelude::*;

use lrpoly::apoly::AMonomial;
use lrpoly::formal_ring::{jacobi_trudi_slice, staircase, straighten};
use lrpoly::lr::{c_alternating, c_corollary, c_theorem};
use lrpoly::shapes::*;
use lrpoly::stable_ring::pieri_stable;
use lrpoly::tableaux::*;
use lrpoly::APoly;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn apoly() -> impl Strategy<Value = APoly> {
    let term = (-3i64..=3, prop::collection::vec((-3i64..=4, 1u32..=2), 0..3));
    prop::collection::vec(term, 0..4).prop_map(|ts| {
        let mut p = APoly::zero();
        for (c, f) in ts {
            p += &APoly::term(c, AMonomial::from_factors(f));
        }
        p
    })
}

fn one_row() -> impl Strategy<Value = Tableau> {
    prop::collection::vec((1u32..=4, any::<bool>()), 0..6).prop_map(|mut v| {
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let row = v
            .into_iter()
            .map(|(x, bar)| if bar { Entry::barred(x) } else { Entry::plain(x) })
            .collect();
        Tableau::new(vec![Vec::new(), row])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn apoly_ring_laws(p in apoly(), q in apoly(), r in apoly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
        let shifted = (&p * &q).shift_indices(3);
        prop_assert_eq!(shifted, &p.shift_indices(3) * &q.shift_indices(3));
    }

    #[test]
    fn rbar_is_an_involution(v in prop::collection::vec(-4i64..6, 2..5), i in 1usize..4) {
        prop_assume!(i < v.len());
        let a = IntegerVector::new(v);
        prop_assert_eq!(apply_rbar(i, i + 1, &apply_rbar(i, i + 1, &a)), a.clone());
    }

    #[test]
    fn straightening_preserves_the_determinant(v in prop::collection::vec(-1i64..5, 1..4)) {
        let beta = staircase(v.len());
        let jt = jacobi_trudi_slice(&v, &beta).unwrap();
        match straighten(&v, &beta).unwrap() {
            None => prop_assert!(jt.is_zero()),
            Some(s) => {
                let straight = jacobi_trudi_slice(&s.mu, &s.beta).unwrap();
                prop_assert_eq!(jt, straight.scale(s.sign as i64));
            }
        }
    }

    #[test]
    fn lr_methods_agree_and_are_homogeneous(lam in partition(3), mu in partition(3), k in 0usize..40) {
        let nus = partitions_containing(&mu, lam.size() + mu.size());
        let nu = nus[k % nus.len()].clone();
        let t = c_theorem(&lam, &mu, &nu);
        prop_assert_eq!(&t, &c_corollary(&lam, &mu, &nu));
        prop_assert_eq!(&t, &c_alternating(&lam, &mu, &nu));
        prop_assert!(t.is_homogeneous_of((lam.size() + mu.size() - nu.size()) as u32));
    }

    #[test]
    fn empty_lambda_is_the_unit(mu in partition(4)) {
        // s_∅·s_μ = s_μ
        let nus = partitions_containing(&mu, mu.size());
        for nu in nus {
            let want = if nu == mu { APoly::one() } else { APoly::zero() };
            prop_assert_eq!(c_theorem(&Partition::empty(), &mu, &nu), want);
        }
    }

    #[test]
    fn pieri_leading_terms_are_classical(mu in partition(4), p in 1usize..4, e in 0i64..3) {
        let s = pieri_stable(p, e, &mu);
        for (nu, c) in s.iter() {
            prop_assert!(nu.contains(&mu) && is_horizontal_strip(nu, &mu));
            if nu.size() == mu.size() + p {
                prop_assert!(c.is_one());
            }
        }
    }

    #[test]
    fn tableau_text_round_trip(t in one_row()) {
        let back: Tableau = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn monomials_sum_to_the_weight(t in one_row(), mu in partition(3)) {
        for order in [ReadingOrder::Row, ReadingOrder::Column] {
            let s: APoly = expand_monomials(&t, &mu, order).into_iter().map(|(_, w)| w).sum();
            prop_assert_eq!(s, tableau_weight(&t, &mu, order));
        }
    }
}
