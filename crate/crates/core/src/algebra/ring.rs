use std::fmt::Debug;

use super::multipoly::MultiPoly;
use super::rat::Rat;
use super::series::PowerSeries;
use crate::error::{Error, Result};

/// Graded commutative `Q`-algebra whose components above `top_degree` vanish.
///
/// Implementors are lightweight ring descriptors; elements carry the data.
/// Every element of positive degree is nilpotent, which the provided
/// `invert_unit`, `exp` and `eval_series` rely on.
pub trait AmbientRing: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn top_degree(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn scalar(&self, c: &Rat) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Rat) -> Self::Elem;
    /// Homogeneous component of degree `k`; zero above `top_degree`.
    fn component(&self, a: &Self::Elem, k: usize) -> Self::Elem;
    fn constant_term(&self, a: &Self::Elem) -> Rat;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn one(&self) -> Self::Elem {
        self.scalar(&Rat::one())
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(a, &-Rat::one())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of an element with nonzero constant term.
    fn invert_unit(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let c0 = self.constant_term(a);
        if c0.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv0 = c0.recip()?;
        // a = c0 (1 - n) with n nilpotent, so a^{-1} = c0^{-1} sum n^k.
        let n = self.sub(&self.one(), &self.scale(a, &inv0));
        let geom = PowerSeries::from_coeffs(vec![Rat::one(); self.top_degree() + 1], self.top_degree());
        Ok(self.scale(&self.eval_series(&geom, &n), &inv0))
    }

    /// `sum_k f_k x^k` for `x` with zero constant term.
    fn eval_series(&self, f: &PowerSeries, x: &Self::Elem) -> Self::Elem {
        debug_assert!(self.constant_term(x).is_zero(), "series argument must be nilpotent");
        let top = self.top_degree().min(f.trunc());
        // Horner from the top coefficient.
        let mut acc = self.scalar(&f.coeff(top));
        for k in (0..top).rev() {
            acc = self.add(&self.mul(&acc, x), &self.scalar(&f.coeff(k)));
        }
        acc
    }

    /// `exp(x)` for `x` with zero constant term.
    fn exp(&self, x: &Self::Elem) -> Self::Elem {
        let t = self.top_degree();
        self.eval_series(&super::series::exp_series(&Rat::one(), t), x)
    }

    /// Sum of the components of degree `0..=k`.
    fn truncate_to(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        let parts: Vec<Self::Elem> = (0..=k.min(self.top_degree())).map(|j| self.component(a, j)).collect();
        self.sum(parts.iter())
    }

    /// Multiplies the degree-`k` component by `(-1)^k`.
    fn flip_by_degree(&self, a: &Self::Elem) -> Self::Elem {
        let parts: Vec<Self::Elem> = (0..=self.top_degree())
            .map(|k| self.scale(&self.component(a, k), &Rat::sign_pow(k as i64)))
            .collect();
        self.sum(parts.iter())
    }
}

/// `Q[x_0, ..., x_{arity-1}]` truncated above `degree_bound`, graded by total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncPolyRing {
    pub arity: usize,
    pub degree_bound: u32,
}

impl TruncPolyRing {
    pub fn new(arity: usize, degree_bound: u32) -> Self {
        TruncPolyRing { arity, degree_bound }
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        MultiPoly::var(i, self.arity, self.degree_bound)
    }

    pub fn vars(&self) -> Vec<MultiPoly> {
        (0..self.arity).map(|i| self.var(i)).collect()
    }
}

impl AmbientRing for TruncPolyRing {
    type Elem = MultiPoly;

    fn top_degree(&self) -> usize {
        self.degree_bound as usize
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.arity, self.degree_bound)
    }

    fn scalar(&self, c: &Rat) -> MultiPoly {
        MultiPoly::constant(c.clone(), self.arity, self.degree_bound)
    }

    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b)
    }

    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.mul(b)
    }

    fn scale(&self, a: &MultiPoly, c: &Rat) -> MultiPoly {
        a.scale(c)
    }

    fn component(&self, a: &MultiPoly, k: usize) -> MultiPoly {
        a.component(k as u32)
    }

    fn constant_term(&self, a: &MultiPoly) -> Rat {
        a.constant_term()
    }

    fn is_zero(&self, a: &MultiPoly) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_unit_round_trips() {
        let ring = TruncPolyRing::new(2, 5);
        let x = ring.var(0);
        let y = ring.var(1);
        let u = ring.add(&ring.scalar(&Rat::from_int(3)), &ring.sub(&x, &ring.mul(&x, &y)));
        let inv = ring.invert_unit(&u).unwrap();
        assert_eq!(ring.mul(&u, &inv), ring.one());
        assert_eq!(ring.invert_unit(&x), Err(Error::NonUnit));
    }

    #[test]
    fn exp_is_additive() {
        let ring = TruncPolyRing::new(2, 6);
        let x = ring.var(0);
        let y = ring.var(1);
        let lhs = ring.exp(&ring.add(&x, &y));
        let rhs = ring.mul(&ring.exp(&x), &ring.exp(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_by_degree_is_involution() {
        let ring = TruncPolyRing::new(1, 4);
        let x = ring.var(0);
        let a = ring.exp(&x);
        assert_eq!(ring.flip_by_degree(&a), ring.exp(&ring.neg(&x)));
        assert_eq!(ring.flip_by_degree(&ring.flip_by_degree(&a)), a);
    }
}
