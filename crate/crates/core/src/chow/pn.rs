use std::fmt;

use super::pe::write_terms;
use crate::algebra::{AmbientRing, Rat};
use crate::error::{Error, Result};

/// Element of `Q[x]/(x^{n+1})`, the rational Chow ring of `P^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PnClass {
    n: usize,
    coeff: Vec<Rat>,
}

impl PnClass {
    pub fn zero(n: usize) -> Self {
        PnClass { n, coeff: vec![Rat::zero(); n + 1] }
    }

    pub fn from_coeffs(n: usize, mut coeff: Vec<Rat>) -> Self {
        coeff.resize(n + 1, Rat::zero());
        PnClass { n, coeff }
    }

    pub fn scalar(n: usize, c: Rat) -> Self {
        Self::from_coeffs(n, vec![c])
    }

    /// `c * x^k`, zero when `k > n`.
    pub fn monomial(n: usize, k: usize, c: Rat) -> Self {
        let mut a = Self::zero(n);
        if k <= n {
            a.coeff[k] = c;
        }
        a
    }

    /// The hyperplane class.
    pub fn hyperplane(n: usize) -> Self {
        Self::monomial(n, 1, Rat::one())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeff
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimensions differ");
        PnClass { n: self.n, coeff: self.coeff.iter().zip(&o.coeff).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        PnClass { n: self.n, coeff: self.coeff.iter().map(|a| a * c).collect() }
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::Mismatch(format!("P^{} and P^{}", self.n, o.n)));
        }
        let mut out = Self::zero(self.n);
        for (i, a) in self.coeff.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeff.iter().enumerate().take(self.n + 1 - i) {
                out.coeff[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("same dimension")
    }
}

/// Degree of the zero-cycle part: the coefficient of `x^n`.
pub fn pn_integrate(p: &PnClass) -> Rat {
    p.coeff[p.n].clone()
}

/// `c(Omega^1_{P^n}) = (1 - x)^{n+1}`.
pub fn pn_chern_omega(n: usize) -> PnClass {
    let ring = PnRing::new(n);
    let one_minus_x = PnClass::from_coeffs(n, vec![Rat::one(), -Rat::one()]);
    ring.pow(&one_minus_x, n as u32 + 1)
}

impl fmt::Debug for PnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(Rat, String)> = self
            .coeff
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let m = match k {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                (c.clone(), m)
            })
            .collect();
        write_terms(f, &parts)
    }
}

/// The ring `CH^*(P^n)_Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PnRing {
    pub n: usize,
}

impl PnRing {
    pub fn new(n: usize) -> Self {
        PnRing { n }
    }
}

impl AmbientRing for PnRing {
    type Elem = PnClass;

    fn top_degree(&self) -> usize {
        self.n
    }

    fn zero(&self) -> PnClass {
        PnClass::zero(self.n)
    }

    fn scalar(&self, c: &Rat) -> PnClass {
        PnClass::scalar(self.n, c.clone())
    }

    fn add(&self, a: &PnClass, b: &PnClass) -> PnClass {
        a.add(b)
    }

    fn mul(&self, a: &PnClass, b: &PnClass) -> PnClass {
        a.mul(b)
    }

    fn scale(&self, a: &PnClass, c: &Rat) -> PnClass {
        a.scale(c)
    }

    fn component(&self, a: &PnClass, k: usize) -> PnClass {
        PnClass::monomial(self.n, k, a.coeff.get(k).cloned().unwrap_or_else(Rat::zero))
    }

    fn constant_term(&self, a: &PnClass) -> Rat {
        a.coeff[0].clone()
    }

    fn is_zero(&self, a: &PnClass) -> bool {
        a.coeff.iter().all(Rat::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrate_examples() {
        assert_eq!(pn_integrate(&PnClass::monomial(3, 3, Rat::one())), Rat::one());
        let c2 = PnRing::new(2).component(&pn_chern_omega(2), 2);
        assert_eq!(c2, PnClass::monomial(2, 2, Rat::from_int(3)));
        assert_eq!(pn_integrate(&c2), Rat::from_int(3));
        assert_eq!(pn_integrate(&PnClass::hyperplane(2)), Rat::zero());
    }

    #[test]
    fn omega_of_plane() {
        let c = pn_chern_omega(2);
        assert_eq!(c.coeffs(), &[Rat::one(), Rat::from_int(-3), Rat::from_int(3)]);
        assert_eq!(c.to_string(), "1 - 3*x + 3*x^2");
    }
}
