use serde::Serialize;

use crate::algebra::{binomial, frac_coeff, Rat};

/// Integer coefficients from blowing up critical points, and the
/// coefficients of `h^N (a h + b m + c e)` on `P(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralCoeffs {
    /// `alpha(N, r)` for `r = 1..=N`.
    pub alpha: Vec<Rat>,
    pub beta: Rat,
    pub a_n: Rat,
    pub a_nd: Rat,
    pub b_nd: Rat,
    pub c_nd: Rat,
}

/// `[(1+y)^N / (1+2y)]^{[k]}` from the series oracle; zero for negative `k`.
fn quadric_coeff(n: u32, k: i64) -> Rat {
    if k < 0 || k > n as i64 {
        return Rat::zero();
    }
    frac_coeff(n, n - k as u32, &Rat::from_int(2), false).expect("a = 2")
}

/// `alpha(N, r) = (-1)^{r-1} (C(N, r-1) - 4 [(1+y)^N/(1+2y)]^{[r-2]})`.
pub fn alpha_nr(n: u32, r: u32) -> Rat {
    let (ni, ri) = (n as i64, r as i64);
    Rat::sign_pow(ri - 1) * (binomial(ni, ri - 1) - Rat::from_int(4) * quadric_coeff(n, ri - 2))
}

/// `beta(N) = ((-1)^N / 2) [N^3 - 4N^2 + 4N - 2 + (-1)^{N+1} (N-2)]`.
pub fn beta_closed(n: u32) -> Rat {
    let ni = n as i64;
    let inner = Rat::from_int(ni * ni * ni - 4 * ni * ni + 4 * ni - 2) + Rat::sign_pow(ni + 1) * Rat::from_int(ni - 2);
    Rat::sign_pow(ni) * inner / Rat::from_int(2)
}

/// `beta(N) = -(N-2) alpha(N, N-1) + (-1)^N N (N-3) / 2`.
pub fn beta_from_alpha(n: u32) -> Rat {
    let ni = n as i64;
    -(Rat::from_int(ni - 2) * alpha_nr(n, n.saturating_sub(1))) + Rat::sign_pow(ni) * Rat::new(ni * (ni - 3), 2)
}

/// `a_N`; zero for `N = 1`.
pub fn a_n_closed(n: u32) -> Rat {
    let ni = n as i64;
    if ni == 1 {
        return Rat::zero();
    }
    Rat::sign_pow(ni) * (Rat::new(ni * (ni - 3), 2) + Rat::new(ni * (ni - 1) * (ni - 1) * (ni - 5), 6))
}

/// `(a, b, c)` with `[(1 - c_1 L)^{-1} c_1(Omega) c(Omega)]^{(N+1)} = h^N (a h + b m + c e)`.
pub fn quotient_coeffs(n: u32, d: &Rat) -> (Rat, Rat, Rat) {
    let ni = n as i64;
    let np1 = Rat::from_int(ni + 1);
    let dm1 = d - &Rat::one();
    let a = &np1 / d * (-dm1.pow(ni + 1).unwrap() + Rat::sign_pow(ni + 1));
    let b = &np1 / &(d * d) * (-(dm1.pow(ni).unwrap() * (d * &Rat::from_int(ni) + Rat::one())) + Rat::sign_pow(ni));
    let c = (-(dm1.pow(ni).unwrap() * (d - &Rat::from_int(ni + 2))) + Rat::sign_pow(ni + 1) * Rat::from_int(ni + 2)) / d;
    (a, b, c)
}

pub fn structural_coeffs(n: u32, d: u32) -> StructuralCoeffs {
    assert!(n >= 1 && d >= 1, "need N >= 1 and d >= 1");
    let (a_nd, b_nd, c_nd) = quotient_coeffs(n, &Rat::from_int(d as i64));
    StructuralCoeffs {
        alpha: (1..=n).map(|r| alpha_nr(n, r)).collect(),
        beta: beta_closed(n),
        a_n: a_n_closed(n),
        a_nd,
        b_nd,
        c_nd,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        for n in 1..=20 {
            assert_eq!(alpha_nr(n, 1), Rat::one());
        }
        assert_eq!(a_n_closed(2), Rat::from_int(-2));
        assert_eq!(beta_closed(2), Rat::from_int(-1));
        assert_eq!(beta_from_alpha(2), Rat::from_int(-1));
    }

    #[test]
    fn alpha_values_are_integers() {
        for n in 1..=15 {
            let s = structural_coeffs(n, 2);
            assert_eq!(s.alpha.len(), n as usize);
            assert!(s.alpha.iter().all(Rat::is_integer));
            assert!(s.beta.is_integer() && s.a_n.is_integer());
        }
    }

    #[test]
    fn quotient_at_d_one() {
        // d = 1: (d-1)^k vanishes, leaving the sign terms.
        let (a, b, c) = quotient_coeffs(2, &Rat::one());
        assert_eq!(a, Rat::from_int(-3));
        assert_eq!(b, Rat::from_int(3));
        assert_eq!(c, Rat::from_int(-4));
    }
}
