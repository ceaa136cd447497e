use std::fmt;

use super::rat::{factorial, Rat};
use crate::error::{Error, Result};

/// Univariate power series truncated after `x^trunc`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn zero(trunc: usize) -> Self {
        PowerSeries { coeffs: vec![Rat::zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        Self::constant(Rat::one(), trunc)
    }

    pub fn constant(c: Rat, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`, truncated.
    pub fn var(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if trunc >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// Pads or cuts `coeffs` to exactly `trunc + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<Rat>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, Rat::zero());
        PowerSeries { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the truncation.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), trunc)
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        let coeffs = (0..=t).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        let mut out = vec![Rat::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.trunc());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse through degree `trunc`.
    pub fn invert(&self, trunc: usize) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv0 = c0.recip()?;
        let mut out = vec![Rat::zero(); trunc + 1];
        out[0] = inv0.clone();
        for k in 1..=trunc {
            let mut acc = Rat::zero();
            for j in 1..=k.min(self.trunc()) {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -(acc * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Invalid("inner series must have zero constant term".into()));
        }
        let t = self.trunc().min(inner.trunc());
        let mut out = Self::zero(t);
        let mut power = Self::one(t);
        for k in 0..=t {
            out = out.add(&power.scale(&self.coeffs[k]));
            power = power.mul(inner);
        }
        Ok(out)
    }

    /// Evaluates the truncated polynomial at `x`.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// `exp(c x)` truncated.
pub fn exp_series(c: &Rat, trunc: usize) -> PowerSeries {
    let coeffs = (0..=trunc)
        .map(|k| c.pow(k as i64).expect("nonnegative power") / factorial(k as u32))
        .collect();
    PowerSeries { coeffs }
}

/// `x / (1 - e^{-x})` truncated.
pub fn td_series(trunc: usize) -> PowerSeries {
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    let denom: Vec<Rat> = (0..=trunc)
        .map(|k| Rat::sign_pow(k as i64) / factorial(k as u32 + 1))
        .collect();
    PowerSeries { coeffs: denom }
        .invert(trunc)
        .expect("constant term is 1")
}

/// `log(td(x))` truncated; its coefficients drive multiplicative Todd classes.
pub fn log_td_series(trunc: usize) -> PowerSeries {
    log_unit(&td_series(trunc))
}

/// `log(s)` for a series with constant term 1, via `log(s)' = s'/s`.
pub fn log_unit(s: &PowerSeries) -> PowerSeries {
    let t = s.trunc();
    assert!(s.coeffs[0].is_one(), "log requires constant term 1");
    let inv = s.invert(t).expect("unit");
    let deriv = PowerSeries::from_coeffs(
        (1..=t).map(|k| &s.coeffs[k] * &Rat::from_int(k as i64)).collect(),
        t,
    );
    let q = deriv.mul(&inv);
    let mut coeffs = vec![Rat::zero(); t + 1];
    for k in 1..=t {
        coeffs[k] = &q.coeffs[k - 1] / &Rat::from_int(k as i64);
    }
    PowerSeries { coeffs }
}

/// Free-standing form of [`PowerSeries::invert`].
pub fn series_invert(s: &PowerSeries, trunc: usize) -> Result<PowerSeries> {
    s.invert(trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn td_low_orders() {
        assert_eq!(td_series(0).coeffs(), &[Rat::one()]);
        assert_eq!(td_series(2).coeffs(), &[Rat::one(), r(1, 2), r(1, 12)]);
    }

    #[test]
    fn td_trunc_four_matches_recurrence() {
        // td * (1 - e^{-x}) = x, solved coefficient by coefficient.
        let t = 4;
        let one_minus_exp: Vec<Rat> = (0..=t + 1)
            .map(|k| {
                if k == 0 {
                    Rat::zero()
                } else {
                    -(Rat::sign_pow(k as i64) / factorial(k as u32))
                }
            })
            .collect();
        let mut td = vec![Rat::zero(); t + 1];
        for n in 0..=t {
            // coefficient of x^{n+1}: sum_{j<=n} td_j * g_{n+1-j} = [n == 0]
            let mut acc = if n == 0 { Rat::one() } else { Rat::zero() };
            for j in 0..n {
                acc -= &td[j] * &one_minus_exp[n + 1 - j];
            }
            td[n] = acc / &one_minus_exp[1];
        }
        assert_eq!(td_series(t).coeffs(), td.as_slice());
        assert_eq!(td, vec![Rat::one(), r(1, 2), r(1, 12), Rat::zero(), r(-1, 720)]);
    }

    #[test]
    fn invert_examples() {
        let s = PowerSeries::from_coeffs(vec![Rat::one(), Rat::from_int(2)], 3);
        assert_eq!(
            series_invert(&s, 3).unwrap().coeffs(),
            &[Rat::one(), Rat::from_int(-2), Rat::from_int(4), Rat::from_int(-8)]
        );
        assert_eq!(series_invert(&PowerSeries::one(5), 5).unwrap(), PowerSeries::one(5));
        let s = PowerSeries::from_coeffs(vec![Rat::one(), Rat::from_int(-1)], 2);
        assert_eq!(series_invert(&s, 2).unwrap().coeffs(), &[Rat::one(), Rat::one(), Rat::one()]);
    }

    #[test]
    fn invert_rejects_non_unit() {
        assert_eq!(series_invert(&PowerSeries::var(3), 3), Err(Error::NonUnit));
    }

    #[test]
    fn compose_exp_log() {
        let t = 8;
        let e = exp_series(&Rat::one(), t);
        let l = log_unit(&e);
        assert_eq!(l, PowerSeries::var(t));
        let back = exp_series(&Rat::one(), t).compose(&l).unwrap();
        assert_eq!(back, e);
    }
}
