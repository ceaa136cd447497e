//! Coefficient extraction from `(1+y)^n / (1+ay)` and `(1+y)^{n+1} / (1+ay)^2`.
//!
//! [`frac_coeff`] expands the series directly and is the reference value.
//! The closed forms are checked against it, never the other way around.

use super::rat::{binomial, Rat};
use super::series::PowerSeries;
use crate::error::{Error, Result};

fn check_a(a: &Rat) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroParameter)
    } else {
        Ok(())
    }
}

fn binomial_series(n: i64, trunc: usize) -> PowerSeries {
    PowerSeries::from_coeffs((0..=trunc as i64).map(|k| binomial(n, k)).collect(), trunc)
}

/// Coefficient of `y^{n-r}` by direct truncated expansion. Zero when `r > n`.
pub fn frac_coeff(n: u32, r: u32, a: &Rat, squared: bool) -> Result<Rat> {
    check_a(a)?;
    if r > n {
        return Ok(Rat::zero());
    }
    let t = (n - r) as usize;
    let lin = PowerSeries::from_coeffs(vec![Rat::one(), a.clone()], t);
    let (num, den) = if squared {
        (binomial_series(n as i64 + 1, t), lin.mul(&lin))
    } else {
        (binomial_series(n as i64, t), lin)
    };
    Ok(num.mul(&den.invert(t)?).coeff(t))
}

/// Same coefficient after the substitution `u = y/(1+y)`:
/// `[(1-u)^{-r} (1+(a-1)u)^{-k}]^{[n-r]}` with `k = 1` or `2`.
pub fn frac_coeff_residue(n: u32, r: u32, a: &Rat, squared: bool) -> Result<Rat> {
    check_a(a)?;
    if r > n {
        return Ok(Rat::zero());
    }
    let t = (n - r) as usize;
    let one_minus_u = PowerSeries::from_coeffs(vec![Rat::one(), -Rat::one()], t);
    let shifted = PowerSeries::from_coeffs(vec![Rat::one(), a - &Rat::one()], t);
    let mut den = one_minus_u.pow(r).mul(&shifted);
    if squared {
        den = den.mul(&shifted);
    }
    Ok(den.invert(t)?.coeff(t))
}

/// Closed form. The squared variant sums `k = r+1 ..= n+1`.
pub fn frac_coeff_closed(n: u32, r: u32, a: &Rat, squared: bool) -> Result<Rat> {
    check_a(a)?;
    if squared {
        Ok(squared_tail_sum(n, r, a, n as i64 + 1))
    } else {
        Ok(simple_tail_sum(n, r, a))
    }
}

/// `(-1)^r sum_{r <= k <= n} C(n,k) (-1)^k a^{k-r}`.
fn simple_tail_sum(n: u32, r: u32, a: &Rat) -> Rat {
    let (n, r) = (n as i64, r as i64);
    let s: Rat = (r..=n)
        .map(|k| binomial(n, k) * Rat::sign_pow(k) * a.pow(k - r).unwrap())
        .sum();
    Rat::sign_pow(r) * s
}

fn squared_weight(n: i64, r: i64, k: i64) -> Rat {
    Rat::from_int(r) * binomial(n, k) - Rat::from_int(n + 1 - r) * binomial(n, k - 1)
}

/// `sum_{r+1 <= k <= upper} (r C(n,k) - (n+1-r) C(n,k-1)) (-1)^{r-k} a^{k-r-1}`.
fn squared_tail_sum(n: u32, r: u32, a: &Rat, upper: i64) -> Rat {
    let (n, r) = (n as i64, r as i64);
    (r + 1..=upper)
        .map(|k| squared_weight(n, r, k) * Rat::sign_pow(r - k) * a.pow(k - r - 1).unwrap())
        .sum()
}

/// Squared closed form with the summation stopping at `k = n`.
/// Disagrees with [`frac_coeff`], e.g. at `(2, 1, 2)`.
pub fn squared_closed_bound_n(n: u32, r: u32, a: &Rat) -> Result<Rat> {
    check_a(a)?;
    Ok(squared_tail_sum(n, r, a, n as i64))
}

/// Squared identity in the form
/// `(-1)^{n+r} a^{-(r+1)} [(r + (n+1-r)a)(a-1)^n - sum_{0<=k<=r} w_k (-1)^{n-k} a^k]`.
pub fn squared_closed_leading(n: u32, r: u32, a: &Rat) -> Result<Rat> {
    check_a(a)?;
    let (ni, ri) = (n as i64, r as i64);
    let lead = (Rat::from_int(ri) + Rat::from_int(ni + 1 - ri) * a) * (a - &Rat::one()).pow(ni)?;
    let tail: Rat = (0..=ri)
        .map(|k| squared_weight(ni, ri, k) * Rat::sign_pow(ni - k) * a.pow(k).unwrap())
        .sum();
    Ok(Rat::sign_pow(ni + ri) * (lead - tail) / a.pow(ri + 1)?)
}

/// Simple identity in the form
/// `(-1)^{n+r} a^{-r} [(a-1)^n - sum_{0<=k<=r-1} C(n,k) (-1)^{n-k} a^k]`.
pub fn simple_closed_leading(n: u32, r: u32, a: &Rat) -> Result<Rat> {
    check_a(a)?;
    let (ni, ri) = (n as i64, r as i64);
    let tail: Rat = (0..ri)
        .map(|k| binomial(ni, k) * Rat::sign_pow(ni - k) * a.pow(k).unwrap())
        .sum();
    Ok(Rat::sign_pow(ni + ri) * ((a - &Rat::one()).pow(ni)? - tail) / a.pow(ri)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(frac_coeff(4, 2, &q(2), false).unwrap(), q(2));
        assert_eq!(frac_coeff(3, 0, &q(1), false).unwrap(), q(0));
        assert_eq!(frac_coeff(2, 1, &q(2), true).unwrap(), q(-1));
        assert_eq!(frac_coeff(1, 3, &q(2), true).unwrap(), q(0));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(frac_coeff_closed(4, 2, &q(2), false).unwrap(), q(2));
        assert_eq!(frac_coeff_closed(2, 0, &q(3), true).unwrap(), q(12));
        assert_eq!(frac_coeff_closed(2, 1, &q(2), true).unwrap(), q(-1));
        assert_eq!(squared_closed_bound_n(2, 1, &q(2)).unwrap(), q(3));
    }

    #[test]
    fn zero_parameter_rejected() {
        assert_eq!(frac_coeff(3, 1, &Rat::zero(), false), Err(Error::ZeroParameter));
        assert_eq!(frac_coeff_closed(3, 1, &Rat::zero(), true), Err(Error::ZeroParameter));
    }

    #[test]
    fn residue_substitution_agrees() {
        for n in 0..10 {
            for r in 0..=n {
                for a in [q(2), q(-1), Rat::new(7, 2)] {
                    for sq in [false, true] {
                        assert_eq!(
                            frac_coeff(n, r, &a, sq).unwrap(),
                            frac_coeff_residue(n, r, &a, sq).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn leading_forms_agree_with_oracle() {
        for n in 0..10 {
            for r in 0..=n {
                for a in [q(2), q(-2), q(5), Rat::new(7, 2)] {
                    assert_eq!(
                        simple_closed_leading(n, r, &a).unwrap(),
                        frac_coeff(n, r, &a, false).unwrap()
                    );
                    assert_eq!(
                        squared_closed_leading(n, r, &a).unwrap(),
                        frac_coeff(n, r, &a, true).unwrap()
                    );
                }
            }
        }
    }
}
