//! Sparse polynomials in the variables a_i (i ∈ ℤ) with big-integer
//! coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Product of powers a_i^e, indices strictly increasing, exponents ≥ 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AMonomial(Vec<(i64, u32)>);

impl AMonomial {
    pub fn one() -> Self {
        AMonomial(Vec::new())
    }

    pub fn var(i: i64) -> Self {
        AMonomial(vec![(i, 1)])
    }

    /// Normalizes an arbitrary factor list.
    pub fn from_factors(factors: impl IntoIterator<Item = (i64, u32)>) -> Self {
        let mut m: BTreeMap<i64, u32> = BTreeMap::new();
        for (i, e) in factors {
            if e > 0 {
                *m.entry(i).or_insert(0) += e;
            }
        }
        AMonomial(m.into_iter().collect())
    }

    pub fn factors(&self) -> &[(i64, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &AMonomial) -> AMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        AMonomial(out)
    }

    pub fn shift(&self, k: i64) -> AMonomial {
        AMonomial(self.0.iter().map(|&(i, e)| (i + k, e)).collect())
    }
}

impl Ord for AMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, i: i64, e: u32) -> fmt::Result {
    if i < 0 {
        write!(f, "a_{{{}}}", i)?;
    } else {
        write!(f, "a_{}", i)?;
    }
    if e > 1 {
        write!(f, "^{}", e)?;
    }
    Ok(())
}

impl fmt::Display for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(i, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            fmt_var(f, i, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Element of ℤ[a]. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct APoly {
    terms: BTreeMap<AMonomial, BigInt>,
}

impl APoly {
    pub fn zero() -> Self {
        APoly::default()
    }

    pub fn one() -> Self {
        APoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        APoly::term(c, AMonomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: AMonomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        APoly { terms }
    }

    /// a_i
    pub fn var(i: i64) -> Self {
        APoly::term(1, AMonomial::var(i))
    }

    /// a_i − a_j (zero when i = j).
    pub fn binomial(i: i64, j: i64) -> Self {
        let mut p = APoly::var(i);
        p.add_term(AMonomial::var(j), &BigInt::from(-1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: AMonomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, other: &APoly, c: &BigInt) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), &(d * c));
        }
    }

    /// self += p · q, without building the intermediate product.
    pub fn add_product(&mut self, p: &APoly, q: &APoly) {
        for (m1, c1) in &p.terms {
            for (m2, c2) in &q.terms {
                self.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> APoly {
        if c.is_zero() {
            return APoly::zero();
        }
        APoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// Total degree of the leading monomial; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(AMonomial::degree).max()
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn indices(&self) -> BTreeSet<i64> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(i, _)| i))
            .collect()
    }

    /// τ^k: a_i ↦ a_{i+k}.
    pub fn shift_indices(&self, k: i64) -> APoly {
        if k == 0 {
            return self.clone();
        }
        APoly {
            terms: self.terms.iter().map(|(m, c)| (m.shift(k), c.clone())).collect(),
        }
    }

    pub fn substitute(&self, sigma: &HashMap<i64, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for &(i, e) in &m.0 {
                let x = sigma.get(&i).ok_or(Error::MissingAssignment(i))?;
                v *= num_traits::pow(x.clone(), e as usize);
            }
            total += v;
        }
        Ok(total)
    }

    /// Constant term: every a_i ↦ 0.
    pub fn at_zero(&self) -> BigInt {
        self.terms
            .get(&AMonomial::one())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Sends a_i ↦ 0 for every i > n.
    pub fn truncate_above(&self, n: i64) -> APoly {
        APoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.iter().all(|&(i, _)| i <= n))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> APoly {
        let mut out = APoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl fmt::Display for APoly {
    /// Highest degree first, then lexicographic on the factor lists.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<(&AMonomial, &BigInt)> = self.terms.iter().collect();
        order.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0 .0.cmp(&b.0 .0)));
        for (k, (m, c)) in order.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for APoly {
    fn from(c: i64) -> Self {
        APoly::constant(c)
    }
}

impl From<BigInt> for APoly {
    fn from(c: BigInt) -> Self {
        APoly::constant(c)
    }
}

impl AddAssign<&APoly> for APoly {
    fn add_assign(&mut self, rhs: &APoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&APoly> for APoly {
    fn sub_assign(&mut self, rhs: &APoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl Add<&APoly> for &APoly {
    type Output = APoly;
    fn add(self, rhs: &APoly) -> APoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&APoly> for &APoly {
    type Output = APoly;
    fn sub(self, rhs: &APoly) -> APoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&APoly> for &APoly {
    type Output = APoly;
    fn mul(self, rhs: &APoly) -> APoly {
        let mut out = APoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        APoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<APoly> for APoly {
            type Output = APoly;
            fn $f(self, rhs: APoly) -> APoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&APoly> for APoly {
            type Output = APoly;
            fn $f(self, rhs: &APoly) -> APoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        -&self
    }
}

impl std::iter::Sum for APoly {
    fn sum<I: Iterator<Item = APoly>>(iter: I) -> APoly {
        let mut out = APoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    vars: Vec<(i64, u32)>,
}

impl Serialize for APoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                vars: m.0.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for APoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<TermJson> = Vec::deserialize(d)?;
        let mut p = APoly::zero();
        for t in v {
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            p.add_term(AMonomial::from_factors(t.vars), &c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: i64) -> APoly {
        APoly::var(i)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&APoly::binomial(0, 1) + &APoly::binomial(1, 2), APoly::binomial(0, 2));
        assert!((&APoly::binomial(0, 1) * &APoly::zero()).is_zero());
        let sq = &a(-1) * &a(-1);
        assert_eq!(sq, APoly::term(1, AMonomial::from_factors([(-1, 2)])));
        assert_eq!(sq.to_string(), "a_{-1}^2");
        assert!(APoly::binomial(3, 3).is_zero());
    }

    #[test]
    fn shifting() {
        let p = APoly::binomial(0, 1);
        assert_eq!(p.shift_indices(1), APoly::binomial(1, 2));
        assert_eq!(p.shift_indices(0), p);
        let r = &(&p * &a(-4)) + &APoly::constant(7);
        assert_eq!(r.shift_indices(3).shift_indices(-3), r);
    }

    #[test]
    fn substitution() {
        let mut s = HashMap::new();
        s.insert(0, q(1, 1));
        s.insert(1, q(1, 1));
        assert_eq!(APoly::binomial(0, 1).substitute(&s).unwrap(), q(0, 1));
        let mut s = HashMap::new();
        s.insert(-2, q(2, 1));
        s.insert(3, q(1, 2));
        assert_eq!((&a(-2) * &a(3)).substitute(&s).unwrap(), q(1, 1));
        assert_eq!(APoly::one().substitute(&HashMap::new()).unwrap(), q(1, 1));
        assert_eq!(a(5).substitute(&HashMap::new()), Err(Error::MissingAssignment(5)));
    }

    #[test]
    fn constant_terms() {
        assert_eq!(APoly::binomial(0, 1).at_zero(), BigInt::zero());
        assert_eq!((&APoly::constant(3) + &a(2)).at_zero(), BigInt::from(3));
        assert_eq!(APoly::zero().at_zero(), BigInt::zero());
    }

    #[test]
    fn display() {
        assert_eq!(APoly::binomial(0, 1).to_string(), "a_0 - a_1");
        assert_eq!(APoly::zero().to_string(), "0");
        assert_eq!(APoly::one().to_string(), "1");
        let p = &(&a(0) * &a(1)).scale(&BigInt::from(-2)) + &APoly::constant(3);
        assert_eq!(p.to_string(), "-2*a_0*a_1 + 3");
    }

    #[test]
    fn json() {
        let p = &(&a(-1) * &a(2)).scale(&BigInt::from(3)) - &APoly::one();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"coeff":"-1","vars":[]},{"coeff":"3","vars":[[-1,1],[2,1]]}]"#);
        let back: APoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn truncation() {
        let p = &APoly::binomial(0, 3) * &a(1);
        assert_eq!(p.truncate_above(2), &a(0) * &a(1));
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_homogeneous_of(2));
    }
}
