use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use lrpoly::involutions::*;
use lrpoly::shapes::*;
use lrpoly::tableaux::*;
use lrpoly::{APoly, Cell};
use lrpoly::verify;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn t(s: &str) -> Tableau {
    s.parse().unwrap()
}

fn weight(t: &Tableau, mu: &Partition, r: usize, c: usize) -> Option<APoly> {
    let e = t.get(Cell::new(r, c))?;
    if e.is_barred() {
        return None;
    }
    Some(entry_weight(t, mu, Cell::new(r, c), ReadingOrder::Row).unwrap())
}

/// Entry-level equalities for the boxes the column fix and the barred
/// exchange pair up. Returns the number of comparisons made.
fn paired_weights(t: &Tableau, mu: &Partition, nu: &Partition) -> usize {
    let tr = psi_trace(t, mu, nu).unwrap();
    let (i, j) = (tr.cell.row, tr.cell.col);
    let tt = &tr.result;
    let mut n = 0;
    if let Some(f) = &tr.fix {
        if f.q + 1 != f.r {
            for q in j..=f.q {
                if let Some(w) = weight(t, mu, i, q) {
                    assert_eq!(Some(w), weight(tt, mu, i + 1, q), "column fix (row i)\n{t}");
                    n += 1;
                }
            }
            for r in j + 1..=f.r {
                if let Some(w) = weight(t, mu, i + 1, r) {
                    assert_eq!(Some(w), weight(tt, mu, i, r), "column fix (row i+1)\n{t}");
                    n += 1;
                }
            }
        }
    }
    // boxes of T¹ traced back through the tail swap
    let (src, sc) = match &tr.fix {
        None => (t.clone(), j),
        Some(f) if f.case1() => (tr.half.clone().unwrap(), f.r),
        Some(f) => (t.clone(), f.q + 1),
    };
    let from_top = |c: usize| if c >= sc { (i + 1, c + 1) } else { (i, c) };
    let from_low = |c: usize| if c > sc { (i, c - 1) } else { (i + 1, c) };
    let product = |tab: &Tableau, boxes: &mut dyn Iterator<Item = (usize, usize)>| {
        boxes.fold(APoly::one(), |acc, (r, c)| match weight(tab, mu, r, c) {
            Some(w) => &acc * &w,
            None => acc,
        })
    };
    for x in &tr.exchanges {
        let before = product(&src, &mut (x.p.0..=x.p.1).map(from_top));
        let after = product(tt, &mut (x.p.0..=x.p.1).map(|c| (i, c)));
        assert_eq!(before, after, "P_{} against its replacement\n{t}", x.k);
        let before = product(&src, &mut (x.q.0..=x.q.1).map(from_low));
        let after = product(tt, &mut (x.q.0..=x.q.1).map(|c| (i + 1, c)));
        assert_eq!(before, after, "Q_{} against its replacement\n{t}", x.k);
        n += 2;
    }
    n
}

#[test]
fn worked_example_paired_weights() {
    let (mu, nu) = (p(&[2, 2]), p(&[4, 3, 2, 1]));
    let big = t("4~ 4 4 4 3 2 2~ 2 2\n3 3 3~ 3 3~ 3 1 1~ 1~");
    // q = 4 ≠ r − 1 = 2: three plain 4's and one plain 3, plus P_2/Q_2
    assert_eq!(paired_weights(&big, &mu, &nu), 6);
    let back = psi(&big, &mu, &nu).unwrap();
    assert!(paired_weights(&back, &mu, &nu) > 0);
}

#[test]
fn sampled_paired_weights() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut pool = Vec::new();
    for lam in partitions_up_to(5).into_iter().filter(|l| l.len() == 2) {
        for mu in partitions_up_to(4) {
            for nu in partitions_containing(&mu, mu.size() + lam.size()) {
                for omega in permutations(2) {
                    let (kappa, _) = lambda_omega(&lam, &omega);
                    if kappa.entries().iter().any(|&k| k < 0) {
                        continue;
                    }
                    let shape: Vec<usize> = kappa.entries().iter().map(|&k| k as usize).collect();
                    let cap = (mu.len() + 2).max(nu.len()) as u32;
                    for tab in enumerate_k_tableaux(&shape, &mu, &nu, cap) {
                        if classify_bad(&tab, &mu, &nu).unwrap().is_some() {
                            pool.push((tab, mu.clone(), nu.clone()));
                        }
                    }
                }
            }
        }
    }
    pool.shuffle(&mut rng);
    let mut compared = 0;
    for (tab, mu, nu) in pool.iter().take(5000) {
        compared += paired_weights(tab, mu, nu);
    }
    assert!(compared > 100, "only {compared} paired entries sampled");
}

#[test]
fn psi_grid_two_rows_wider() {
    let g = verify::psi_grid(5, 4, 2, 1);
    assert!(g.involution.passed(), "{}", g.involution);
    assert!(g.aggregate.passed(), "{}", g.aggregate);
}

#[test]
fn psi_grid_three_rows_up_to_five_boxes() {
    let g = verify::psi_grid(5, 3, 3, 0);
    assert!(g.involution.passed(), "{}", g.involution);
    assert!(g.aggregate.passed(), "{}", g.aggregate);
}

// With three rows the swap in rows 1-2 can create a new bad pair in rows
// 2-3, so ψ(T) is bad in a lower row and ψ(ψ(T)) ≠ T. First seen at
// λ = (2,2,2).
#[test]
fn three_row_counterexample() {
    let e = Partition::empty();
    let tab = t("2 2\n3 3\n2 2");
    let cell = classify_bad(&tab, &e, &e).unwrap().unwrap();
    assert_eq!((cell.row, cell.col, cell.kind), (1, 1, BadKind::C2b));
    let image = psi(&tab, &e, &e).unwrap();
    assert_eq!(image.to_string(), "3\n3 2 2\n2 2");
    let again = classify_bad(&image, &e, &e).unwrap().unwrap();
    assert_eq!((again.row, again.col), (2, 2));
    assert_ne!(psi(&image, &e, &e).unwrap(), tab);

    let g = verify::psi_grid(6, 0, 3, 0);
    assert!(!g.involution.passed());
    assert!(!g.aggregate.passed());
}

#[test]
fn one_row_grids_wider() {
    let m = verify::monomial_grid(5, 5);
    assert!(m.passed(), "{m}");
    let q = verify::pairing_grid(5, 5);
    assert!(q.passed(), "{q}");
}

#[test]
fn precondition_errors() {
    let mu = p(&[2, 1]);
    assert_eq!(monomial_involution(&t("\n\n2 1"), &mu), Err(lrpoly::Error::TableauIsGood));
    assert_eq!(pieri_bad_pair(&t("1~ 1"), &p(&[3, 2])), Err(lrpoly::Error::NuIsGood));
    let e = Partition::empty();
    assert_eq!(psi(&t("2\n1"), &e, &e), Err(lrpoly::Error::TableauIsGood));
    assert!(matches!(classify_bad(&t("1~"), &e, &e), Err(lrpoly::Error::Invariant(_))));
}
