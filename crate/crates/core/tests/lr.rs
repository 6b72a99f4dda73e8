use lrpoly::double_sym::Oracle;
use lrpoly::lr::*;
use lrpoly::shapes::*;
use lrpoly::stable_ring::pieri_stable;
use lrpoly::verify;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

// Values first produced by the polynomial oracle alone.
const FROZEN: &[(&[usize], &[usize], &[usize], &str)] = &[
    (&[1], &[1], &[1], "a_0 - a_1"),
    (&[1], &[1], &[2], "1"),
    (&[1, 1], &[1], &[1, 1], "a_0 - a_2"),
    (&[2], &[1], &[2], "a_{-1} - a_1"),
    (&[2, 1], &[1], &[2, 1], "a_{-1} - a_2"),
    (
        &[2, 1],
        &[2, 1],
        &[2, 1],
        "-a_{-1}*a_0*a_1 + a_{-1}*a_0*a_2 - a_{-1}*a_1*a_2 + a_{-1}*a_2^2 + a_{-1}^2*a_1 - a_{-1}^2*a_2 + a_0*a_1*a_2 - a_0*a_2^2",
    ),
    (&[2, 1], &[2, 1], &[3, 2, 1], "2"),
    (&[2], &[2], &[2], "-a_{-1}*a_0 - a_{-1}*a_1 + a_{-1}^2 + a_0*a_1"),
    (&[1, 1], &[1, 1], &[2, 1], "a_1 - a_2"),
    (
        &[3, 1],
        &[2, 2],
        &[3, 2, 1],
        "a_{-2}*a_0 - a_{-2}*a_1 - a_{-2}*a_2 - a_{-2}*a_3 + a_{-2}^2 - a_0*a_1 + a_1*a_2 + a_1*a_3",
    ),
];

#[test]
fn frozen_values_all_methods() {
    let oracle = Oracle::new();
    for (l, m, n, want) in FROZEN {
        let (l, m, n) = (p(l), p(m), p(n));
        assert_eq!(oracle.c_oracle(&l, &m, &n).unwrap().to_string(), *want, "oracle {l} {m} {n}");
        assert_eq!(c_theorem(&l, &m, &n).to_string(), *want, "theorem {l} {m} {n}");
        assert_eq!(c_corollary(&l, &m, &n).to_string(), *want, "corollary {l} {m} {n}");
        assert_eq!(c_alternating(&l, &m, &n).to_string(), *want, "alternating {l} {m} {n}");
    }
}

#[test]
fn frozen_pieri() {
    let s = pieri_stable(2, 1, &p(&[2, 1]));
    assert_eq!(
        s.to_string(),
        "s(4,1) + s(3,2) + s(3,1,1) + (a_{-2} + a_{-1} - a_2)*s(3,1) + s(2,2,1) + (a_{-1} + a_0 - a_2)*s(2,2) + (a_{-1})*s(2,1,1) + (-a_{-1}*a_2 + a_{-1}^2)*s(2,1)"
    );
    assert_eq!(Oracle::new().pieri(2, 1, &p(&[2, 1])).unwrap(), s);
}

#[test]
fn pieri_methods_agree() {
    let r = verify::pieri_agreement(3, 4);
    assert!(r.passed(), "{r}");
}

#[test]
fn tableau_pieri_matches_stable_on_larger_grid() {
    for mu in partitions_up_to(5) {
        for p in 1..=4 {
            for e in 0..mu.len() {
                assert_eq!(pieri_tableau(p, e, &mu).unwrap(), pieri_stable(p, e as i64, &mu), "p={p} e={e} mu={mu}");
            }
        }
    }
}

#[test]
fn kostka_recursion_matches_tableaux() {
    let engine = LrEngine::new();
    for lam in partitions_up_to(4) {
        for mu in partitions_up_to(4) {
            for omega in permutations(lam.len()) {
                let (kappa, _) = lambda_omega(&lam, &omega);
                if kappa.entries().iter().any(|&x| x < 0) {
                    continue;
                }
                let all = engine.kostka_all(&kappa, &mu);
                for nu in partitions_containing(&mu, lam.size() + mu.size()) {
                    let base = default_kostka_cap(&kappa, &mu, &nu);
                    let want = all.get(&nu);
                    assert_eq!(kostka_tableaux(&kappa, &mu, &nu, base), want, "{kappa} {mu} {nu}");
                    // a larger cap only moves the dropped tail
                    assert_eq!(kostka_tableaux(&kappa, &mu, &nu, base + 2), want, "{kappa} {mu} {nu} cap+2");
                }
            }
        }
    }
}

#[test]
fn lr_grid_small() {
    let (a, h) = verify::lr_agreement(3, 3);
    assert!(a.passed(), "{a}");
    assert!(h.passed(), "{h}");
    let c = verify::classical(4, 4);
    assert!(c.passed(), "{c}");
}
