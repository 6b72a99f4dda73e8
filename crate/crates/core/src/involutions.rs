//! Cancellation machinery: the good/bad monomial involution on one-row
//! monomial tableaux, the pairing of bad Pieri targets, and ψ = ψ₂∘ψ₁ on
//! bad reverse tableaux.

use std::collections::BTreeMap;

use crate::apoly::APoly;
use crate::error::{Error, Result};
use crate::shapes::{is_horizontal_strip, Partition};
use crate::tableaux::{apply_word, row_word, Entry, Mark, ReadingOrder, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BadKind {
    C2a,
    C2b,
    C2c,
}

impl BadKind {
    pub fn name(self) -> &'static str {
        match self {
            BadKind::C2a => "C2a",
            BadKind::C2b => "C2b",
            BadKind::C2c => "C2c",
        }
    }
}

/// Row i and column j (1-based) where a tableau is bad. For C2c the column
/// is κ_i + 1, one past the end of row i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BadCell {
    pub row: usize,
    pub col: usize,
    pub kind: BadKind,
}

fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invariant(msg.into()))
}

fn mu_part(mu: &Partition, k: u32) -> i64 {
    if k == 0 {
        return 0;
    }
    mu.part(k as usize) as i64
}

/// First column j of row i at which the column word of rows ≥ i, columns
/// 1..j, stops being Yamanouchi on μ.
fn first_p1_column(t: &Tableau, mu: &Partition, i: usize) -> Option<usize> {
    let below = &t.rows[i - 1..];
    let width = t.rows[i - 1].len();
    let mut word = Vec::new();
    for j in 0..width {
        for r in below.iter().rev() {
            if let Some(e) = r.get(j) {
                if e.is_barred() {
                    word.push(e.value);
                }
            }
        }
        if !apply_word(mu, &word).1 {
            return Some(j + 1);
        }
    }
    None
}

fn row_word_ok(t: &Tableau, mu: &Partition, nu: &Partition) -> bool {
    let (rho, yam) = apply_word(mu, &row_word(t));
    yam && rho == nu.parts()
}

/// None iff T is good: shape a partition, columns strict, column word
/// Yamanouchi. Otherwise the bad cell picked by (C1) and (C2).
pub fn classify_bad(t: &Tableau, mu: &Partition, nu: &Partition) -> Result<Option<BadCell>> {
    if t.has_primes() {
        return Err(Error::Parse("reverse tableaux have no primed entries".into()));
    }
    if !row_word_ok(t, mu, nu) {
        return invariant(format!("row word of\n{t}\ndoes not take {mu:?} to {nu:?}"));
    }
    let kappa = t.shape();
    for i in (1..=kappa.len()).rev() {
        let p1 = first_p1_column(t, mu, i);
        let next = kappa.get(i).copied().unwrap_or(0);
        let common = kappa[i - 1].min(next);
        let p2 = (1..=common).find(|&j| t.at(i, j).value <= t.at(i + 1, j).value);
        let p3 = kappa[i - 1] < next;
        if p1.is_none() && p2.is_none() && !p3 {
            continue;
        }
        let p2a = p1.and_then(|j1| {
            (j1..=common).find(|&j| t.at(i, j).value > t.at(i + 1, j).value)
        });
        let cell = match (p2a, p2) {
            (Some(a), Some(b)) if a < b => BadCell { row: i, col: a, kind: BadKind::C2a },
            (_, Some(b)) => BadCell { row: i, col: b, kind: BadKind::C2b },
            (Some(a), None) => BadCell { row: i, col: a, kind: BadKind::C2a },
            (None, None) if p3 => BadCell { row: i, col: kappa[i - 1] + 1, kind: BadKind::C2c },
            (None, None) => {
                return invariant(format!("row {i} of\n{t}\nhas (P1) but no bad column pair"));
            }
        };
        return Ok(Some(cell));
    }
    Ok(None)
}

/// Rows i and i+1 become row_i[..col−1] ++ row_{i+1}[col..] and
/// row_{i+1}[..col] ++ row_i[col−1..].
fn tail_swap(t: &Tableau, i: usize, col: usize) -> Result<Tableau> {
    let (a, b) = (&t.rows[i - 1], &t.rows[i]);
    if a.len() + 1 < col || b.len() < col {
        return invariant(format!("tail swap at ({i},{col}) outside the shape"));
    }
    let mut out = t.clone();
    out.rows[i - 1] = a[..col - 1].iter().chain(&b[col..]).copied().collect();
    out.rows[i] = b[..col].iter().chain(&a[col - 1..]).copied().collect();
    Ok(out)
}

/// `bars` blocks, each a barred v followed by `sizes[t]` plain v's.
fn bar_then_plain(v: u32, sizes: &[usize]) -> Vec<Entry> {
    let mut out = Vec::new();
    for &n in sizes {
        out.push(Entry::barred(v));
        out.extend(std::iter::repeat(Entry::plain(v)).take(n));
    }
    out
}

/// Blocks of `sizes[t]` plain v's, each followed by a barred v.
fn plain_then_bar(v: u32, sizes: &[usize]) -> Vec<Entry> {
    let mut out = Vec::new();
    for &n in sizes {
        out.extend(std::iter::repeat(Entry::plain(v)).take(n));
        out.push(Entry::barred(v));
    }
    out
}

/// Sizes of the plain runs after each bar in a bar-led segment.
fn runs_after_bars(seg: &[Entry]) -> Vec<usize> {
    let mut out = Vec::new();
    for e in seg {
        if e.is_barred() {
            out.push(0);
        } else if let Some(last) = out.last_mut() {
            *last += 1;
        }
    }
    out
}

/// Sizes of the plain runs before each bar in a bar-terminated segment.
fn runs_before_bars(seg: &[Entry]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut run = 0;
    for e in seg {
        if e.is_barred() {
            out.push(run);
            run = 0;
        } else {
            run += 1;
        }
    }
    out
}

fn write_row(t: &mut Tableau, row: usize, from_col: usize, entries: &[Entry]) {
    for (k, e) in entries.iter().enumerate() {
        t.rows[row - 1][from_col - 1 + k] = *e;
    }
}

/// The numbers behind the C2a column fix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnFix {
    pub b: u32,
    pub c: u32,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl ColumnFix {
    pub fn case1(&self) -> bool {
        self.q >= self.r
    }
}

pub fn column_fix_data(t: &Tableau, cell: BadCell) -> Result<ColumnFix> {
    let (i, j) = (cell.row, cell.col);
    let top = t.at(i, j);
    let c = t.at(i + 1, j).value;
    let b = top.value;
    if !top.is_barred() || b != c + 1 {
        return invariant(format!("C2a pair at ({i},{j}) is not a barred c+1 over c"));
    }
    let row = &t.rows[i - 1];
    let q = row.iter().rposition(|e| e.value == b).unwrap() + 1;
    let x = runs_after_bars(&row[j - 1..q]);
    let s = x.len();
    let below = &t.rows[i];
    let mut seen = 0;
    let mut r = None;
    for col in j + 1..=below.len() {
        let e = below[col - 1];
        if e.value != c {
            break;
        }
        if e.is_barred() {
            seen += 1;
            if seen == s {
                r = Some(col);
                break;
            }
        }
    }
    let Some(r) = r else {
        return invariant(format!("row {} lacks {s} barred {c}'s after column {j}", i + 1));
    };
    let y = runs_before_bars(&below[j..r]);
    Ok(ColumnFix { b, c, q, r, s, x, y })
}

/// ψ₁: the tail swap, with the column fix for C2a. Returns (T^{1/2}, T¹);
/// T^{1/2} is only produced for C2a.
pub fn psi1(t: &Tableau, cell: BadCell) -> Result<(Option<Tableau>, Tableau)> {
    let i = cell.row;
    let out = match cell.kind {
        BadKind::C2b | BadKind::C2c => (None, tail_swap(t, i, cell.col)?),
        BadKind::C2a => {
            let f = column_fix_data(t, cell)?;
            let j = cell.col;
            let plain_b = bar_then_plain(f.b, &f.y);
            let plain_c = plain_then_bar(f.c, &f.x);
            if f.case1() {
                let mut half = t.clone();
                write_row(&mut half, i, j, &plain_b);
                // σ: (i+1, j+1..r) then (i, r..q), in row order
                let lower = f.r - j;
                write_row(&mut half, i + 1, j + 1, &plain_c[..lower]);
                write_row(&mut half, i, f.r, &plain_c[lower..]);
                let t1 = tail_swap(&half, i, f.r)?;
                (Some(half), t1)
            } else {
                let half = tail_swap(t, i, f.q + 1)?;
                let mut t1 = half.clone();
                if f.q + 1 < f.r {
                    write_row(&mut t1, i, j, &plain_b);
                    write_row(&mut t1, i + 1, j + 1, &plain_c);
                }
                (Some(half), t1)
            }
        }
    };
    if !out.1.rows_weakly_decrease() {
        return invariant(format!("ψ₁ broke the row order:\n{}", out.1));
    }
    Ok(out)
}

/// c for the ψ₂ loop: the lower entry of the bad column pair.
fn pair_c(t: &Tableau, cell: BadCell) -> u32 {
    t.at(cell.row + 1, cell.col).value
}

/// n_k for k = 2..=c, computed on T¹.
pub fn reorder_counts(t1: &Tableau, cell: BadCell, c: u32, mu: &Partition) -> Vec<(u32, usize)> {
    let i = cell.row;
    let count = |rows: &[Vec<Entry>], k: u32| -> i64 {
        rows.iter().flatten().filter(|e| e.is_barred() && e.value == k).count() as i64
    };
    let from_i = &t1.rows[i - 1..];
    let below = if t1.rows.len() > i + 1 { &t1.rows[i + 1..] } else { &[][..] };
    (2..=c)
        .map(|k| {
            let n = mu_part(mu, k) + count(from_i, k) - mu_part(mu, k - 1) - count(below, k - 1);
            (k, n.max(0) as usize)
        })
        .collect()
}

/// Boxes exchanged by ψ₂ for one k: P_k in row i (columns p.0..=p.1) and
/// Q_k in row i+1 (columns q.0..=q.1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exchange {
    pub k: u32,
    pub n: usize,
    pub p: (usize, usize),
    pub q: (usize, usize),
}

pub fn reorder_regions(t1: &Tableau, cell: BadCell, c: u32, mu: &Partition) -> Result<Vec<Exchange>> {
    let i = cell.row;
    let mut out = Vec::new();
    for (k, n) in reorder_counts(t1, cell, c, mu) {
        if n == 0 {
            continue;
        }
        let top = &t1.rows[i - 1];
        let Some(start) = top.iter().position(|e| e.value == k - 1) else {
            return invariant(format!("row {i} has no {}", k - 1));
        };
        let mut bars = 0;
        let mut end = None;
        for (p, e) in top.iter().enumerate().skip(start) {
            if e.value != k - 1 {
                break;
            }
            if e.is_barred() {
                bars += 1;
                if bars == n {
                    end = Some(p);
                    break;
                }
            }
        }
        let Some(end) = end else {
            return invariant(format!("row {i} lacks {n} barred {}'s", k - 1));
        };

        let low = &t1.rows[i];
        let Some(last) = low.iter().rposition(|e| e.value == k) else {
            return invariant(format!("row {} has no {k}", i + 1));
        };
        let mut bars = 0;
        let mut begin = None;
        for p in (0..=last).rev() {
            let e = low[p];
            if e.value != k {
                break;
            }
            if e.is_barred() {
                bars += 1;
                if bars == n {
                    begin = Some(p);
                    break;
                }
            }
        }
        let Some(begin) = begin else {
            return invariant(format!("row {} lacks {n} barred {k}'s", i + 1));
        };
        out.push(Exchange { k, n, p: (start + 1, end + 1), q: (begin + 1, last + 1) });
    }
    Ok(out)
}

/// ψ₂: exchanges n_k barred k's of row i+1 with barred k−1's of row i.
pub fn psi2(t1: &Tableau, cell: BadCell, c: u32, mu: &Partition) -> Result<Tableau> {
    let i = cell.row;
    let mut out = t1.clone();
    for x in reorder_regions(t1, cell, c, mu)? {
        let v = runs_before_bars(&t1.rows[i - 1][x.p.0 - 1..x.p.1]);
        let w = runs_after_bars(&t1.rows[i][x.q.0 - 1..x.q.1]);
        write_row(&mut out, i, x.p.0, &bar_then_plain(x.k, &v));
        write_row(&mut out, i + 1, x.q.0, &plain_then_bar(x.k - 1, &w));
    }
    Ok(out)
}

/// Every intermediate of ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTrace {
    pub cell: BadCell,
    pub fix: Option<ColumnFix>,
    pub half: Option<Tableau>,
    pub t1: Tableau,
    pub c: u32,
    pub counts: Vec<(u32, usize)>,
    pub exchanges: Vec<Exchange>,
    pub result: Tableau,
}

pub fn psi_trace(t: &Tableau, mu: &Partition, nu: &Partition) -> Result<PsiTrace> {
    let Some(cell) = classify_bad(t, mu, nu)? else {
        return Err(Error::TableauIsGood);
    };
    let fix = match cell.kind {
        BadKind::C2a => Some(column_fix_data(t, cell)?),
        _ => None,
    };
    let c = pair_c(t, cell);
    let (half, t1) = psi1(t, cell)?;
    let counts = reorder_counts(&t1, cell, c, mu);
    let exchanges = reorder_regions(&t1, cell, c, mu)?;
    let result = psi2(&t1, cell, c, mu)?;
    if !row_word_ok(&result, mu, nu) {
        return invariant(format!("ψ of\n{t}\nis\n{result}\nwhose row word misses {nu:?}"));
    }
    Ok(PsiTrace { cell, fix, half, t1, c, counts, exchanges, result })
}

/// ψ = ψ₂∘ψ₁ on a bad tableau.
pub fn psi(t: &Tableau, mu: &Partition, nu: &Partition) -> Result<Tableau> {
    Ok(psi_trace(t, mu, nu)?.result)
}

// ---------------------------------------------------------------------
// One-row monomial tableaux (shape (0,…,0,p), entries in row e+1).

fn single_row(u: &Tableau) -> Result<(usize, &[Entry])> {
    let e = u.rows.iter().position(|r| !r.is_empty()).unwrap_or(u.rows.len().saturating_sub(1));
    if u.rows.iter().skip(e + 1).any(|r| !r.is_empty()) {
        return Err(Error::Parse("expected a single nonempty row".into()));
    }
    Ok((e, u.rows.get(e).map(Vec::as_slice).unwrap_or(&[])))
}

fn with_row(e: usize, row: Vec<Entry>) -> Tableau {
    let mut rows = vec![Vec::new(); e];
    rows.push(row);
    Tableau::new(rows)
}

/// Weight subscript of each unbarred entry (k − ρ_k or k − c), None for
/// barred ones.
fn subscripts(e: usize, row: &[Entry], mu: &Partition) -> Vec<Option<i64>> {
    let mut bars: BTreeMap<u32, i64> = BTreeMap::new();
    row.iter()
        .enumerate()
        .map(|(col, x)| {
            let k = x.value as i64;
            match x.mark {
                Mark::Barred => {
                    *bars.entry(x.value).or_default() += 1;
                    None
                }
                Mark::Plain => Some(k - mu_part(mu, x.value) - bars.get(&x.value).copied().unwrap_or(0)),
                Mark::Primed => Some(k - (col as i64 + 1 - (e as i64 + 1))),
            }
        })
        .collect()
}

fn bad_entries(row: &[Entry], subs: &[Option<i64>], l: i64, y: i64) -> Vec<usize> {
    (0..row.len())
        .filter(|&p| match row[p].mark {
            Mark::Barred => false,
            Mark::Plain => row[p].value as i64 > l,
            Mark::Primed => subs[p].unwrap() > l - y,
        })
        .collect()
}

/// Good iff no unbarred unprimed entry exceeds l = l(μ) and no primed
/// entry has subscript above l − y, y the number of barred (l+1)'s.
pub fn monomial_is_good(u: &Tableau, mu: &Partition) -> Result<bool> {
    let (e, row) = single_row(u)?;
    let l = mu.len() as i64;
    let y = row.iter().filter(|x| x.is_barred() && x.value as i64 == l + 1).count() as i64;
    let subs = subscripts(e, row, mu);
    Ok(bad_entries(row, &subs, l, y).is_empty())
}

/// Sign-reversing involution on bad one-row monomial tableaux.
pub fn monomial_involution(u: &Tableau, mu: &Partition) -> Result<Tableau> {
    let (e, row) = single_row(u)?;
    let l = mu.len() as i64;
    let y = row.iter().filter(|x| x.is_barred() && x.value as i64 == l + 1).count() as i64;
    let subs = subscripts(e, row, mu);
    let bad = bad_entries(row, &subs, l, y);
    let Some(k) = bad.iter().map(|&p| subs[p].unwrap()).max() else {
        return Err(Error::TableauIsGood);
    };
    let content = |col: usize| col as i64 - e as i64; // 0-based col
    let primed = (0..row.len()).find(|&p| row[p].mark == Mark::Primed && subs[p] == Some(k));
    let mut out = row.to_vec();
    if let Some(j) = primed {
        out.remove(j);
        if k > l + 1 {
            out.insert(0, Entry::plain(k as u32));
        } else {
            let yp = l + 1 - k;
            if yp < 0 || yp > y {
                return invariant(format!("primed subscript {k} outside [l+1−y, l+1]"));
            }
            let mut seen = 0;
            let mut at = 0;
            while seen < yp {
                let x = row[at];
                if x.is_barred() && x.value as i64 == l + 1 {
                    seen += 1;
                }
                at += 1;
            }
            if at > j {
                return invariant("insertion point right of the primed entry");
            }
            out.insert(at, Entry::plain((l + 1) as u32));
        }
    } else {
        let j = (0..row.len())
            .find(|&p| row[p].mark == Mark::Plain && subs[p] == Some(k))
            .unwrap();
        let jp = (j..row.len())
            .find(|&p| {
                let next = row.get(p + 1).map_or(0, |x| x.value as i64);
                k + content(p) >= next
            })
            .unwrap();
        let m = k + content(jp);
        if m <= 0 {
            return invariant(format!("Case 1 produced nonpositive entry {m}"));
        }
        out.remove(j);
        out.insert(jp, Entry::primed(m as u32));
    }
    let res = with_row(e, out);
    if !res.rows_weakly_decrease() {
        return invariant(format!("monomial involution broke the row order:\n{res}"));
    }
    Ok(res)
}

// ---------------------------------------------------------------------
// Pairing monomial tableaux with bad targets ν and ν̃ = R̄_{i,i+1}ν.

/// Target composition of a one-row filling: μ plus its barred entries.
pub fn row_target(u: &Tableau, mu: &Partition) -> Vec<usize> {
    let mut nu = mu.parts().to_vec();
    for x in u.rows.iter().flatten().filter(|x| x.is_barred()) {
        let s = x.value as usize;
        if nu.len() < s {
            nu.resize(s, 0);
        }
        nu[s - 1] += 1;
    }
    nu
}

/// Minimal i with ν_{i+1} > μ_i, if any.
pub fn bad_pair_row(nu: &[usize], mu: &Partition) -> Option<usize> {
    (1..nu.len()).find(|&i| nu[i] > mu.part(i))
}

/// The pairing at the minimal bad row of ν.
pub fn pieri_bad_pair(u: &Tableau, mu: &Partition) -> Result<Tableau> {
    let nu = row_target(u, mu);
    if let Ok(p) = Partition::new(nu.clone()) {
        if is_horizontal_strip(&p, mu) {
            return Err(Error::NuIsGood);
        }
    }
    let Some(i) = bad_pair_row(&nu, mu) else {
        return Err(Error::NuIsGood);
    };
    pieri_bad_pair_with(u, mu, i)
}

/// The pairing at an explicit row i, with d = ν_{i+1} − ν_i − 1. d > 0
/// turns the last d barred (i+1)'s (and what follows them) into i's; d < 0
/// undoes that with |d| barred i's. d = 0 is the identity.
pub fn pieri_bad_pair_with(u: &Tableau, mu: &Partition, i: usize) -> Result<Tableau> {
    let (e, row) = single_row(u)?;
    let nu = row_target(u, mu);
    let at = |k: usize| nu.get(k - 1).copied().unwrap_or(0) as i64;
    let d = at(i + 1) - at(i) - 1;
    let (lo, hi) = (i as u32, i as u32 + 1);
    let mut out = row.to_vec();
    if d == 0 {
        return Ok(u.clone());
    }
    let unprimed = |x: &Entry| x.mark != Mark::Primed;
    if d > 0 {
        // X starts at the d-th barred (i+1) from the right.
        let bars: Vec<usize> = (0..row.len())
            .filter(|&p| row[p].is_barred() && row[p].value == hi)
            .collect();
        if bars.len() < d as usize {
            return invariant(format!("fewer than {d} barred {hi}'s"));
        }
        let x_start = bars[bars.len() - d as usize];
        let mut holes = Vec::new();
        let mut fill = Vec::new();
        let mut moved = Vec::new();
        for (p, x) in row.iter().enumerate() {
            if !unprimed(x) {
                continue;
            }
            if p >= x_start && x.value == hi {
                holes.push(p);
                moved.push(Entry { value: lo, mark: x.mark });
            } else if x.value == lo {
                holes.push(p);
                fill.push(*x);
            }
        }
        fill.extend(moved);
        for (p, x) in holes.into_iter().zip(fill) {
            out[p] = x;
        }
        // primed (i+1)'s now right of an i: step one box left as primed i's
        for p in 0..out.len() {
            if out[p].mark == Mark::Primed && out[p].value == hi && p > 0 && out[p - 1].value == lo {
                if out[p - 1].mark == Mark::Primed {
                    return invariant("primed neighbour while fixing primed entries");
                }
                out[p] = out[p - 1];
                out[p - 1] = Entry::primed(lo);
            }
        }
    } else {
        let need = (-d) as usize;
        let bars: Vec<usize> = (0..row.len())
            .filter(|&p| row[p].is_barred() && row[p].value == lo)
            .collect();
        if bars.len() < need {
            return invariant(format!("fewer than {need} barred {lo}'s"));
        }
        let x_start = bars[bars.len() - need];
        let mut holes = Vec::new();
        let mut moved = Vec::new();
        let mut rest = Vec::new();
        for (p, x) in row.iter().enumerate() {
            if unprimed(x) && x.value == lo {
                holes.push(p);
                if p >= x_start {
                    moved.push(Entry { value: hi, mark: x.mark });
                } else {
                    rest.push(*x);
                }
            }
        }
        moved.extend(rest);
        for (p, x) in holes.into_iter().zip(moved) {
            out[p] = x;
        }
        // primed i's now left of an i+1: step one box right as primed (i+1)'s
        for p in (0..out.len()).rev() {
            if out[p].mark == Mark::Primed
                && out[p].value == lo
                && p + 1 < out.len()
                && out[p + 1].value == hi
            {
                if out[p + 1].mark == Mark::Primed {
                    return invariant("primed neighbour while fixing primed entries");
                }
                out[p] = out[p + 1];
                out[p + 1] = Entry::primed(hi);
            }
        }
    }
    let res = with_row(e, out);
    if !res.rows_weakly_decrease() {
        return invariant(format!("pairing broke the row order:\n{res}"));
    }
    Ok(res)
}

/// Every row (0,…,0,p) with entries in row e+1, weakly decreasing, barred
/// values at most `barred_max`, plain values at most `plain_max`. No
/// condition on the row word.
pub fn one_row_fillings(e: usize, p: usize, barred_max: u32, plain_max: u32) -> Vec<Tableau> {
    fn rec(left: usize, hi: u32, bm: u32, pm: u32, cur: &mut Vec<Entry>, out: &mut Vec<Vec<Entry>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=hi).rev() {
            if v <= bm {
                cur.push(Entry::barred(v));
                rec(left - 1, v, bm, pm, cur, out);
                cur.pop();
            }
            if v <= pm {
                cur.push(Entry::plain(v));
                rec(left - 1, v, bm, pm, cur, out);
                cur.pop();
            }
        }
    }
    let mut rows = Vec::new();
    rec(p, barred_max.max(plain_max), barred_max, plain_max, &mut Vec::new(), &mut rows);
    rows.into_iter().map(|r| with_row(e, r)).collect()
}

/// Weight of a monomial tableau (row order).
pub fn signed_monomial(u: &Tableau, mu: &Partition) -> APoly {
    crate::tableaux::monomial_weight(u, mu, ReadingOrder::Row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn golden_psi() {
        let (mu, nu) = (p(&[2, 2]), p(&[4, 3, 2, 1]));
        let big = t("4~ 4 4 4 3 2 2~ 2 2\n3 3 3~ 3 3~ 3 1 1~ 1~");
        let tr = psi_trace(&big, &mu, &nu).unwrap();
        assert_eq!(tr.cell, BadCell { row: 1, col: 1, kind: BadKind::C2a });
        let f = tr.fix.clone().unwrap();
        assert_eq!((f.b, f.c, f.q, f.r, f.s), (4, 3, 4, 3, 1));
        assert_eq!((f.x.clone(), f.y.clone()), (vec![3], vec![1]));
        assert_eq!(tr.half.as_ref().unwrap().to_string(), "4~ 4 3 3~ 3 2 2~ 2 2\n3 3 3 3 3~ 3 1 1~ 1~");
        assert_eq!(tr.t1.to_string(), "4~ 4 3 3~ 3 1 1~ 1~\n3 3 3 3 3~ 3 2 2~ 2 2");
        assert_eq!(tr.t1.shape(), vec![8, 10]);
        assert_eq!(tr.counts, vec![(2, 1), (3, 0)]);
        assert_eq!(tr.result.to_string(), "4~ 4 3 3~ 3 2~ 2 1~\n3 3 3 3 3~ 3 2 1 1 1~");
        let back = psi_trace(&tr.result, &mu, &nu).unwrap();
        assert_eq!(back.cell, tr.cell);
        assert!(!back.fix.unwrap().case1());
        assert_eq!(back.result, big);
    }

    #[test]
    fn classify_small() {
        let e = Partition::empty();
        let two = t("\n1 1");
        let cell = classify_bad(&two, &e, &e).unwrap().unwrap();
        assert_eq!(cell, BadCell { row: 1, col: 1, kind: BadKind::C2c });
        assert_eq!(classify_bad(&t("2\n1"), &e, &e).unwrap(), None);
        assert!(classify_bad(&t("1~"), &e, &e).is_err());
    }

    #[test]
    fn golden_monomial() {
        let mu = p(&[2, 1]);
        let u = t("\n\n3~ 3~ 3 3~ 2");
        let v = monomial_involution(&u, &mu).unwrap();
        assert_eq!(v.to_string(), "\n\n3~ 3~ 3~ 2' 2");
        assert_eq!(monomial_involution(&v, &mu).unwrap(), u);
        let wu = signed_monomial(&u, &mu);
        assert_eq!(wu, APoly::var(1).pow(2));
        assert_eq!(signed_monomial(&v, &mu), -wu);
        assert_eq!(monomial_involution(&t("\n\n2 1"), &mu), Err(Error::TableauIsGood));
    }

    #[test]
    fn golden_pairing() {
        let mu = p(&[3, 2]);
        let u = t("2~ 2~ 2~ 2' 2 1' 1 1'");
        let v = pieri_bad_pair(&u, &mu).unwrap();
        assert_eq!(v.to_string(), "2~ 2~ 1' 1 1~ 1' 1 1'");
        assert_eq!(row_target(&v, &mu), vec![4, 4]);
        assert_eq!(signed_monomial(&u, &mu), signed_monomial(&v, &mu));
        assert_eq!(pieri_bad_pair_with(&v, &mu, 1).unwrap(), u);
        assert_eq!(pieri_bad_pair(&t("1~ 1"), &mu), Err(Error::NuIsGood));
    }
}
