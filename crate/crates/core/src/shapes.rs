//! Integer vectors, partitions, boxes, raising operators and λ^ω.
//!
//! Indices in the public API are 1-based, matching the usual diagram
//! conventions (row 1 is the top row).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite integer sequence with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntegerVector(Vec<i64>);

impl From<Vec<i64>> for IntegerVector {
    fn from(v: Vec<i64>) -> Self {
        IntegerVector::new(v)
    }
}

impl From<IntegerVector> for Vec<i64> {
    fn from(v: IntegerVector) -> Self {
        v.0
    }
}

impl IntegerVector {
    pub fn new(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        IntegerVector(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Index of the last nonzero entry.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based access; zero past the end.
    pub fn get(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn padded(&self, l: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        if v.len() < l {
            v.resize(l, 0);
        }
        v
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_composition(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_partition(&self) -> bool {
        self.is_composition() && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_partition() {
            Some(Partition(self.0.iter().map(|&x| x as usize).collect()))
        } else {
            None
        }
    }
}

impl fmt::Debug for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    it: impl Iterator<Item = T>,
) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in it.enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", x)?;
    }
    write!(f, ")")
}

/// Weakly decreasing sequence of nonnegative integers, zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        IntegerVector::new(v.clone())
            .to_partition()
            .ok_or(Error::NotAPartition(v))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Partition::try_from(parts.into_iter().map(|x| x as i64).collect::<Vec<_>>())
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn to_vector(&self) -> IntegerVector {
        IntegerVector::new(self.0.iter().map(|&x| x as i64).collect())
    }

    pub fn padded(&self, l: usize) -> Vec<i64> {
        self.to_vector().padded(l)
    }

    pub fn boxes(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &r) in self.0.iter().enumerate() {
            for j in 1..=r {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// A box (i, j) of a diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// ν/μ is a horizontal strip (and μ ⊆ ν).
pub fn is_horizontal_strip(nu: &Partition, mu: &Partition) -> bool {
    if !nu.contains(mu) {
        return false;
    }
    (1..nu.len()).all(|i| nu.part(i + 1) <= mu.part(i))
}

/// R_{st}: raise entry s, lower entry t.
pub fn apply_raising(s: usize, t: usize, alpha: &IntegerVector) -> IntegerVector {
    assert!(1 <= s && s < t, "raising operator needs 1 <= s < t");
    let mut v = alpha.padded(t);
    v[s - 1] += 1;
    v[t - 1] -= 1;
    IntegerVector::new(v)
}

/// R̄_{ij}: swap entries i and j, then lower entry i and raise entry j.
pub fn apply_rbar(i: usize, j: usize, alpha: &IntegerVector) -> IntegerVector {
    let mut v = alpha.padded(j);
    rbar_in_place(i, j, &mut v);
    IntegerVector::new(v)
}

/// R̄_{ij} on an untrimmed slice (the slice must have length ≥ j).
pub fn rbar_in_place(i: usize, j: usize, v: &mut [i64]) {
    assert!(1 <= i && i < j && j <= v.len());
    v.swap(i - 1, j - 1);
    v[i - 1] -= 1;
    v[j - 1] += 1;
}

/// (ω(λ+π) − π, sgn ω) with π = (l−1, …, 0) and (ωv)_k = v_{ω(k)}.
///
/// `omega` is a permutation of 0..l in one-line notation.
pub fn lambda_omega(lambda: &Partition, omega: &[usize]) -> (IntegerVector, i32) {
    let l = omega.len();
    assert!(l >= lambda.len(), "permutation shorter than the partition");
    let shifted: Vec<i64> = (0..l)
        .map(|k| lambda.part(k + 1) as i64 + (l - 1 - k) as i64)
        .collect();
    let out: Vec<i64> = (0..l)
        .map(|k| shifted[omega[k]] - (l - 1 - k) as i64)
        .collect();
    (IntegerVector::new(out), permutation_sign(omega))
}

pub fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = p[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Weak compositions of `total` into exactly `len` nonnegative parts,
/// in reverse lexicographic order.
pub fn weak_compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=rem).rev() {
            cur.push(x);
            rec(rem - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, len, &mut Vec::new(), &mut out);
    out
}

/// Partitions of n, largest first lexicographically.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for x in (1..=rem.min(max)).rev() {
            cur.push(x);
            rec(rem - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size ≤ n, by size then as in [`partitions_of`].
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions ν ⊇ μ with |μ| ≤ |ν| ≤ max_size.
pub fn partitions_containing(mu: &Partition, max_size: usize) -> Vec<Partition> {
    partitions_up_to(max_size)
        .into_iter()
        .filter(|nu| nu.contains(mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn iv(v: &[i64]) -> IntegerVector {
        IntegerVector::new(v.to_vec())
    }

    #[test]
    fn horizontal_strips() {
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[2])));
        assert!(!is_horizontal_strip(&p(&[4, 3]), &p(&[2, 1])));
        assert!(is_horizontal_strip(&p(&[2, 2]), &p(&[2, 2])));
        assert!(!is_horizontal_strip(&p(&[2]), &p(&[1, 1])));
    }

    #[test]
    fn raising() {
        assert_eq!(apply_raising(1, 2, &iv(&[3, 1])), iv(&[4]));
        assert_eq!(apply_raising(1, 3, &iv(&[2, 2, 2])), iv(&[3, 2, 1]));
        let mu = iv(&[5, 4, 3]);
        assert_eq!(
            apply_raising(1, 2, &apply_raising(2, 3, &mu)),
            apply_raising(1, 3, &mu)
        );
    }

    #[test]
    fn rbar_examples() {
        assert_eq!(apply_rbar(1, 2, &iv(&[3, 5])), iv(&[4, 4]));
        assert_eq!(apply_rbar(1, 2, &iv(&[9, 9])), iv(&[8, 10]));
        assert_eq!(apply_rbar(1, 2, &apply_rbar(1, 2, &iv(&[9, 9]))), iv(&[9, 9]));
        assert_eq!(apply_rbar(1, 3, &iv(&[1, 2, 3])), iv(&[2, 2, 2]));
    }

    #[test]
    fn lambda_omega_examples() {
        assert_eq!(lambda_omega(&p(&[2, 1]), &[0, 1]), (iv(&[2, 1]), 1));
        assert_eq!(lambda_omega(&p(&[2, 1]), &[1, 0]), (iv(&[0, 3]), -1));
        assert_eq!(lambda_omega(&p(&[1]), &[1, 0]), (iv(&[-1, 2]), -1));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(weak_compositions(2, 3).len(), 6);
        assert_eq!(weak_compositions(0, 0).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_up_to(4).len(), 1 + 1 + 2 + 3 + 5);
        let signs: i32 = permutations(3).iter().map(|w| permutation_sign(w)).sum();
        assert_eq!(signs, 0);
    }

    #[test]
    fn json_round_trip() {
        let lam = p(&[3, 2, 1]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[3,2,1]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn trimming() {
        assert_eq!(iv(&[1, 0, 0]).len(), 1);
        assert_eq!(iv(&[0, 0]).len(), 0);
        assert_eq!(iv(&[0, 2]).len(), 2);
    }
}
