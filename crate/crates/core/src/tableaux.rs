//! Reverse tableaux with barred/plain (and, after expansion, primed)
//! entries; reading orders, words, ρ-labels, weights and enumeration.

use std::fmt;
use std::str::FromStr;

use crate::apoly::{AMonomial, APoly};
use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Barred,
    Plain,
    /// A plain entry chosen to contribute its −a_{k−c} half.
    Primed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub value: u32,
    pub mark: Mark,
}

impl Entry {
    pub fn barred(value: u32) -> Self {
        Entry { value, mark: Mark::Barred }
    }

    pub fn plain(value: u32) -> Self {
        Entry { value, mark: Mark::Plain }
    }

    pub fn primed(value: u32) -> Self {
        Entry { value, mark: Mark::Primed }
    }

    pub fn is_barred(&self) -> bool {
        self.mark == Mark::Barred
    }

    /// Plain or primed: both carry a weight.
    pub fn is_unbarred(&self) -> bool {
        self.mark != Mark::Barred
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mark {
            Mark::Barred => write!(f, "{}~", self.value),
            Mark::Plain => write!(f, "{}", self.value),
            Mark::Primed => write!(f, "{}'", self.value),
        }
    }
}

impl FromStr for Entry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (digits, mark) = if let Some(d) = s.strip_suffix('~') {
            (d, Mark::Barred)
        } else if let Some(d) = s.strip_suffix('\'') {
            (d, Mark::Primed)
        } else {
            (s, Mark::Plain)
        };
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad tableau entry {:?}", s)))?;
        if value == 0 {
            return Err(Error::Parse("tableau entries are positive".into()));
        }
        Ok(Entry { value, mark })
    }
}

/// Filling of a composition shape, rows listed top to bottom (row 1
/// first). Rows may be empty. Reverse tableaux have no primed entries;
/// monomial tableaux (from [`expand_monomials`]) may.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    pub rows: Vec<Vec<Entry>>,
}

pub type ReverseTableau = Tableau;
pub type MonomialTableau = Tableau;

impl Tableau {
    pub fn new(rows: Vec<Vec<Entry>>) -> Self {
        Tableau { rows }
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// 1-based box access.
    pub fn get(&self, c: Cell) -> Option<Entry> {
        self.rows.get(c.row.checked_sub(1)?)?.get(c.col.checked_sub(1)?).copied()
    }

    pub fn at(&self, row: usize, col: usize) -> Entry {
        self.rows[row - 1][col - 1]
    }

    pub fn rows_weakly_decrease(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0].value >= w[1].value))
    }

    pub fn has_primes(&self) -> bool {
        self.rows.iter().flatten().any(|e| e.mark == Mark::Primed)
    }

    pub fn count_unbarred(&self) -> usize {
        self.rows.iter().flatten().filter(|e| e.is_unbarred()).count()
    }
}

impl fmt::Display for Tableau {
    /// Rows top to bottom separated by newlines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let parts: Vec<String> = row.iter().map(Entry::to_string).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;
    /// Accepts rows separated by newlines or by '/'.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(['\n', '/'])
            .map(|line| line.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { rows })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingOrder {
    /// Rows bottom to top, each left to right.
    Row,
    /// Columns left to right, each bottom to top.
    Column,
}

pub fn row_order(shape: &[usize]) -> Vec<Cell> {
    let mut out = Vec::new();
    for i in (1..=shape.len()).rev() {
        for j in 1..=shape[i - 1] {
            out.push(Cell::new(i, j));
        }
    }
    out
}

pub fn column_order(shape: &[usize]) -> Vec<Cell> {
    let width = shape.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    for j in 1..=width {
        for i in (1..=shape.len()).rev() {
            if shape[i - 1] >= j {
                out.push(Cell::new(i, j));
            }
        }
    }
    out
}

pub fn reading_order(shape: &[usize], order: ReadingOrder) -> Vec<Cell> {
    match order {
        ReadingOrder::Row => row_order(shape),
        ReadingOrder::Column => column_order(shape),
    }
}

fn word(t: &Tableau, order: ReadingOrder) -> Vec<u32> {
    reading_order(&t.shape(), order)
        .into_iter()
        .map(|c| t.get(c).unwrap())
        .filter(Entry::is_barred)
        .map(|e| e.value)
        .collect()
}

/// Barred values in row order.
pub fn row_word(t: &Tableau) -> Vec<u32> {
    word(t, ReadingOrder::Row)
}

/// Barred values in column order.
pub fn column_word(t: &Tableau) -> Vec<u32> {
    word(t, ReadingOrder::Column)
}

/// Adds a box to row s for each letter s; reports whether every stage was
/// a partition.
pub fn apply_word(mu: &Partition, w: &[u32]) -> (Vec<usize>, bool) {
    let longest = w.iter().copied().max().unwrap_or(0) as usize;
    let mut rho = mu.parts().to_vec();
    rho.resize(rho.len().max(longest), 0);
    let mut yam = true;
    for &s in w {
        let s = s as usize;
        rho[s - 1] += 1;
        if s >= 2 && rho[s - 1] > rho[s - 2] {
            yam = false;
        }
    }
    while rho.last() == Some(&0) {
        rho.pop();
    }
    (rho, yam)
}

/// ρ(α): μ advanced by the barred entries up to and including α.
pub fn rho_at(t: &Tableau, mu: &Partition, alpha: Cell, order: ReadingOrder) -> Vec<usize> {
    let mut prefix = Vec::new();
    for c in reading_order(&t.shape(), order) {
        let e = t.get(c).unwrap();
        if e.is_barred() {
            prefix.push(e.value);
        }
        if c == alpha {
            return apply_word(mu, &prefix).0;
        }
    }
    panic!("box {:?} is not in the shape", alpha);
}

fn part(rho: &[usize], k: u32) -> i64 {
    rho.get(k as usize - 1).copied().unwrap_or(0) as i64
}

/// a_{k−ρ(α)_k} − a_{k−c(α)} for an unbarred entry k.
pub fn entry_weight(t: &Tableau, mu: &Partition, alpha: Cell, order: ReadingOrder) -> Result<APoly> {
    let e = t.get(alpha).expect("box in shape");
    if e.is_barred() {
        return Err(Error::BarredEntryHasNoWeight(alpha.row, alpha.col));
    }
    let rho = rho_at(t, mu, alpha, order);
    let k = e.value as i64;
    Ok(APoly::binomial(k - part(&rho, e.value), k - alpha.content()))
}

/// Walks the order once, handing each box its entry and current ρ.
fn walk(t: &Tableau, mu: &Partition, order: ReadingOrder, mut f: impl FnMut(Cell, Entry, &[usize]) -> bool) {
    let mut rho = mu.parts().to_vec();
    for c in reading_order(&t.shape(), order) {
        let e = t.get(c).unwrap();
        if e.is_barred() {
            let s = e.value as usize;
            if rho.len() < s {
                rho.resize(s, 0);
            }
            rho[s - 1] += 1;
        }
        if !f(c, e, &rho) {
            return;
        }
    }
}

/// Product of the weights of all unbarred entries (1 if there are none).
pub fn tableau_weight(t: &Tableau, mu: &Partition, order: ReadingOrder) -> APoly {
    let mut w = APoly::one();
    walk(t, mu, order, |c, e, rho| {
        if e.is_unbarred() {
            let k = e.value as i64;
            let b = APoly::binomial(k - part(rho, e.value), k - c.content());
            w = &w * &b;
        }
        !w.is_zero()
    });
    w
}

/// Signed monomial of a monomial tableau: unprimed k gives a_{k−ρ_k},
/// primed k gives −a_{k−c}.
pub fn monomial_weight(u: &Tableau, mu: &Partition, order: ReadingOrder) -> APoly {
    let mut factors = Vec::new();
    let mut sign = 1i64;
    walk(u, mu, order, |c, e, rho| {
        let k = e.value as i64;
        match e.mark {
            Mark::Barred => {}
            Mark::Plain => factors.push((k - part(rho, e.value), 1)),
            Mark::Primed => {
                factors.push((k - c.content(), 1));
                sign = -sign;
            }
        }
        true
    });
    APoly::term(sign, AMonomial::from_factors(factors))
}

/// All 2^(#plain) ways of priming plain entries, with their monomials.
pub fn expand_monomials(t: &Tableau, mu: &Partition, order: ReadingOrder) -> Vec<(Tableau, APoly)> {
    let plain: Vec<Cell> = reading_order(&t.shape(), order)
        .into_iter()
        .filter(|&c| t.get(c).unwrap().mark == Mark::Plain)
        .collect();
    assert!(plain.len() < 31, "too many plain entries to expand");
    let mut out = Vec::with_capacity(1 << plain.len());
    for mask in 0u32..(1 << plain.len()) {
        let mut u = t.clone();
        for (b, c) in plain.iter().enumerate() {
            if mask & (1 << b) != 0 {
                u.rows[c.row - 1][c.col - 1].mark = Mark::Primed;
            }
        }
        let w = monomial_weight(&u, mu, order);
        out.push((u, w));
    }
    out
}

/// Backtracking over fillings of `shape` read in `order`, with the row
/// condition, optional column strictness, and a Yamanouchi word μ → ν.
struct Filler<'a> {
    shape: Vec<usize>,
    order: Vec<Cell>,
    column_strict: bool,
    plain_cap: &'a dyn Fn(usize) -> u32,
    barred_cap: u32,
    nu: Vec<usize>,
    needed: usize,
}

impl Filler<'_> {
    fn run(&self, mu: &Partition) -> Vec<Tableau> {
        let mut grid: Vec<Vec<Entry>> = self
            .shape
            .iter()
            .map(|&r| vec![Entry::plain(1); r])
            .collect();
        let mut rho = mu.parts().to_vec();
        rho.resize(self.nu.len().max(rho.len()), 0);
        let mut out = Vec::new();
        self.rec(0, 0, &mut grid, &mut rho, &mut out);
        out
    }

    fn rec(
        &self,
        pos: usize,
        placed_bars: usize,
        grid: &mut Vec<Vec<Entry>>,
        rho: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        let remaining_boxes = self.order.len() - pos;
        if self.needed - placed_bars > remaining_boxes {
            return;
        }
        if pos == self.order.len() {
            out.push(Tableau { rows: grid.clone() });
            return;
        }
        let c = self.order[pos];
        let (i, j) = (c.row - 1, c.col - 1);
        let mut hi = if j > 0 { grid[i][j - 1].value } else { u32::MAX };
        let lo = if self.column_strict && i + 1 < self.shape.len() && self.shape[i + 1] > j {
            grid[i + 1][j].value + 1
        } else {
            1
        };
        hi = hi.min(self.barred_cap.max((self.plain_cap)(c.row)));
        for v in (lo..=hi).rev() {
            // barred v
            if placed_bars < self.needed && v <= self.barred_cap {
                let s = v as usize - 1;
                let fits = rho[s] < self.nu[s] && (s == 0 || rho[s] < rho[s - 1]);
                if fits {
                    rho[s] += 1;
                    grid[i][j] = Entry::barred(v);
                    self.rec(pos + 1, placed_bars + 1, grid, rho, out);
                    rho[s] -= 1;
                }
            }
            if v <= (self.plain_cap)(c.row) {
                grid[i][j] = Entry::plain(v);
                self.rec(pos + 1, placed_bars, grid, rho, out);
            }
        }
    }
}

fn target_ok(mu: &Partition, nu: &Partition, boxes: usize) -> bool {
    nu.contains(mu) && nu.size() - mu.size() <= boxes
}

/// Shape-λ fillings: rows weakly decreasing, columns strictly decreasing
/// (absolute values), column word Yamanouchi from μ to ν. Plain entries are
/// capped at `plain_cap` (default l(ν)); barred ones are at most l(ν).
pub fn enumerate_lr_tableaux(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    plain_cap: Option<u32>,
) -> Vec<Tableau> {
    if !target_ok(mu, nu, lambda.size()) {
        return Vec::new();
    }
    let cap = plain_cap.unwrap_or(nu.len() as u32);
    let shape = lambda.parts().to_vec();
    Filler {
        order: column_order(&shape),
        shape,
        column_strict: true,
        plain_cap: &|_| cap,
        barred_cap: nu.len() as u32,
        nu: nu.parts().to_vec(),
        needed: nu.size() - mu.size(),
    }
    .run(mu)
}

/// Shape (0,…,0,p) with the p boxes in row e+1; row word Yamanouchi μ → ν.
pub fn enumerate_pieri_tableaux(
    p: usize,
    e: usize,
    mu: &Partition,
    nu: &Partition,
    plain_cap: Option<u32>,
) -> Vec<Tableau> {
    if !target_ok(mu, nu, p) {
        return Vec::new();
    }
    let cap = plain_cap.unwrap_or(nu.len() as u32);
    let mut shape = vec![0; e];
    shape.push(p);
    Filler {
        order: row_order(&shape),
        shape,
        column_strict: false,
        plain_cap: &|_| cap,
        barred_cap: nu.len() as u32,
        nu: nu.parts().to_vec(),
        needed: nu.size() - mu.size(),
    }
    .run(mu)
}

/// Shape-κ fillings (κ a composition, one entry per row of the
/// determinant), row word Yamanouchi μ → ν, no column condition, plain
/// entries at most `plain_cap`.
pub fn enumerate_k_tableaux(kappa: &[usize], mu: &Partition, nu: &Partition, plain_cap: u32) -> Vec<Tableau> {
    let total: usize = kappa.iter().sum();
    if !target_ok(mu, nu, total) {
        return Vec::new();
    }
    Filler {
        order: row_order(kappa),
        shape: kappa.to_vec(),
        column_strict: false,
        plain_cap: &|_| plain_cap,
        barred_cap: nu.len() as u32,
        nu: nu.parts().to_vec(),
        needed: nu.size() - mu.size(),
    }
    .run(mu)
}

/// Σ of weights over a list of tableaux.
pub fn weight_sum(ts: &[Tableau], mu: &Partition, order: ReadingOrder) -> APoly {
    let mut s = APoly::zero();
    for t in ts {
        s += &tableau_weight(t, mu, order);
    }
    s
}
