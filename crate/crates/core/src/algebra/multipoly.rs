use std::collections::HashMap;
use std::fmt;

use super::rat::Rat;
use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_ARITY: usize = 15;
/// Largest supported total degree bound.
pub const MAX_DEGREE: u32 = 255;

const BITS: u32 = 8;
const DEG_SHIFT: u32 = BITS * MAX_ARITY as u32;

/// Packed exponent vector: eight bits per variable, total degree in the top byte.
///
/// Adding two keys multiplies the monomials, and key order sorts by total
/// degree first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u128);

impl Monomial {
    pub fn one() -> Self {
        Monomial(0)
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_ARITY, "too many variables");
        let deg: u32 = exps.iter().sum();
        assert!(deg <= MAX_DEGREE, "degree too large");
        let mut key = (deg as u128) << DEG_SHIFT;
        for (i, &e) in exps.iter().enumerate() {
            key |= (e as u128) << (BITS * i as u32);
        }
        Monomial(key)
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_ARITY, "variable index out of range");
        Monomial((1u128 << DEG_SHIFT) | (1u128 << (BITS * i as u32)))
    }

    pub fn degree(&self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn exponent(&self, i: usize) -> u32 {
        ((self.0 >> (BITS * i as u32)) & 0xff) as u32
    }

    pub fn exponents(&self, arity: usize) -> Vec<u32> {
        (0..arity).map(|i| self.exponent(i)).collect()
    }

    /// Product monomial; caller guarantees the degree stays within bounds.
    fn times(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }
}

/// Polynomial in `arity` variables with every term of total degree above
/// `degree_bound` discarded.
///
/// Terms are kept sorted by monomial key with no zero coefficients, so
/// structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    degree_bound: u32,
    terms: Vec<(Monomial, Rat)>,
}

impl MultiPoly {
    pub fn zero(arity: usize, degree_bound: u32) -> Self {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
        assert!(degree_bound <= MAX_DEGREE, "degree bound {degree_bound} exceeds {MAX_DEGREE}");
        MultiPoly { arity, degree_bound, terms: Vec::new() }
    }

    pub fn constant(c: Rat, arity: usize, degree_bound: u32) -> Self {
        Self::from_terms(arity, degree_bound, vec![(Monomial::one(), c)])
    }

    pub fn one(arity: usize, degree_bound: u32) -> Self {
        Self::constant(Rat::one(), arity, degree_bound)
    }

    /// The variable `x_i`.
    pub fn var(i: usize, arity: usize, degree_bound: u32) -> Self {
        assert!(i < arity, "variable x{i} out of range for arity {arity}");
        Self::from_terms(arity, degree_bound, vec![(Monomial::var(i), Rat::one())])
    }

    /// Builds from arbitrary terms: merges duplicates, drops zeros and terms above the bound.
    pub fn from_terms(arity: usize, degree_bound: u32, terms: Vec<(Monomial, Rat)>) -> Self {
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in terms {
            if m.degree() <= degree_bound {
                *acc.entry(m).or_insert_with(Rat::zero) += c;
            }
        }
        let mut p = Self::zero(arity, degree_bound);
        p.terms = finish(acc);
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn coeff_of(&self, exps: &[u32]) -> Rat {
        self.coeff(&Monomial::from_exponents(exps))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity || self.degree_bound != other.degree_bound {
            return Err(Error::Mismatch(format!(
                "polynomial rings ({}, {}) and ({}, {})",
                self.arity, self.degree_bound, other.arity, other.degree_bound
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(MultiPoly { arity: self.arity, degree_bound: self.degree_bound, terms: out })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let bound = self.degree_bound;
        let mut acc: HashMap<Monomial, Rat> = HashMap::new();
        for (ma, ca) in &self.terms {
            let room = bound - ma.degree();
            for (mb, cb) in &other.terms {
                // Terms are degree-sorted, so nothing later fits either.
                if mb.degree() > room {
                    break;
                }
                *acc.entry(ma.times(*mb)).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        Ok(MultiPoly { arity: self.arity, degree_bound: bound, terms: finish(acc) })
    }

    /// Panicking form of [`MultiPoly::try_add`].
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("same polynomial ring")
    }

    /// Panicking form of [`MultiPoly::try_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("same polynomial ring")
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity, self.degree_bound);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        MultiPoly { arity: self.arity, degree_bound: self.degree_bound, terms }
    }

    /// Homogeneous component of total degree `k`.
    pub fn component(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == k).cloned().collect();
        MultiPoly { arity: self.arity, degree_bound: self.degree_bound, terms }
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    /// Substitutes rational values for all variables.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.arity, "point dimension");
        self.terms
            .iter()
            .map(|(m, c)| {
                (0..self.arity).fold(c.clone(), |acc, i| {
                    acc * point[i].pow(m.exponent(i) as i64).expect("nonnegative power")
                })
            })
            .sum()
    }
}

fn finish(acc: HashMap<Monomial, Rat>) -> Vec<(Monomial, Rat)> {
    let mut terms: Vec<(Monomial, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_unstable_by_key(|t| t.0);
    terms
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for i in 0..self.arity {
                match m.exponent(i) {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    e => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
