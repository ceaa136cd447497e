//! Auxiliary ring models used only as independent cross-checks.

use crate::algebra::{AmbientRing, Monomial, MultiPoly, PowerSeries, Rat};

/// `Q[h, m, e] / (m^2, m e, e^2)` truncated above degree `N + 1`, with no
/// relation on `h`. Coefficients of `h^{N+1}`, `h^N m`, `h^N e` stay separate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreePeRing {
    n: usize,
}

impl FreePeRing {
    pub fn new(n: usize) -> Self {
        FreePeRing { n }
    }

    fn bound(&self) -> u32 {
        self.n as u32 + 1
    }

    pub fn h(&self) -> MultiPoly {
        MultiPoly::var(0, 3, self.bound())
    }

    pub fn m(&self) -> MultiPoly {
        MultiPoly::var(1, 3, self.bound())
    }

    pub fn e(&self) -> MultiPoly {
        MultiPoly::var(2, 3, self.bound())
    }

    /// `(h^{N+1}, h^N m, h^N e)` coefficients.
    pub fn top_coeffs(&self, a: &MultiPoly) -> (Rat, Rat, Rat) {
        let n = self.n as u32;
        (a.coeff_of(&[n + 1, 0, 0]), a.coeff_of(&[n, 1, 0]), a.coeff_of(&[n, 0, 1]))
    }

    fn reduce(&self, a: MultiPoly) -> MultiPoly {
        let terms: Vec<(Monomial, Rat)> = a
            .terms()
            .iter()
            .filter(|(mono, _)| mono.exponent(1) + mono.exponent(2) < 2)
            .cloned()
            .collect();
        MultiPoly::from_terms(3, self.bound(), terms)
    }
}

impl AmbientRing for FreePeRing {
    type Elem = MultiPoly;

    fn top_degree(&self) -> usize {
        self.n + 1
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(3, self.bound())
    }

    fn scalar(&self, c: &Rat) -> MultiPoly {
        MultiPoly::constant(c.clone(), 3, self.bound())
    }

    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b)
    }

    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        self.reduce(a.mul(b))
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

/// Class on the blow-up of an `N`-fold at a point, kept as the degree-0 part
/// pulled back from below plus a polynomial in the exceptional class `eta`.
///
/// Positive-degree pulled-back classes restrict to zero on the exceptional
/// divisor, so they never meet `eta` and are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaClass {
    pub base0: Rat,
    /// `eta[k]` is the coefficient of `eta^k`; `eta[0]` is always zero.
    pub eta: Vec<Rat>,
}

impl EtaClass {
    pub fn zero(n: usize) -> Self {
        EtaClass { base0: Rat::zero(), eta: vec![Rat::zero(); n + 1] }
    }

    pub fn one(n: usize) -> Self {
        EtaClass { base0: Rat::one(), ..Self::zero(n) }
    }

    pub fn dim(&self) -> usize {
        self.eta.len() - 1
    }

    pub fn add(&self, o: &Self) -> Self {
        EtaClass {
            base0: &self.base0 + &o.base0,
            eta: self.eta.iter().zip(&o.eta).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim();
        let mut eta = vec![Rat::zero(); n + 1];
        for k in 1..=n {
            let mut acc = &self.base0 * &o.eta[k] + &o.base0 * &self.eta[k];
            for i in 1..k {
                acc += &self.eta[i] * &o.eta[k - i];
            }
            eta[k] = acc;
        }
        EtaClass { base0: &self.base0 * &o.base0, eta }
    }

    /// Degree-`k` Chern class of the blow-up's tangent bundle; the correction
    /// to the pullback is the degree-`k` part of `(1 + eta)(1 - eta)^N - 1`.
    pub fn tangent_chern(n: usize, k: usize) -> Self {
        let mut out = Self::zero(n);
        if k == 0 {
            out.base0 = Rat::one();
        } else if k <= n {
            out.eta[k] = blowup_correction_series(n).coeff(k);
        }
        out
    }

    /// Degree of the `eta^N` part; `eta^N` integrates to `(-1)^{N-1}`.
    pub fn integrate_eta_top(&self) -> Rat {
        let n = self.dim() as i64;
        &self.eta[n as usize] * &Rat::sign_pow(n - 1)
    }
}

/// `(1 + eta)(1 - eta)^N - 1` expanded as a series, through degree `N + 1`.
pub fn blowup_correction_series(n: usize) -> PowerSeries {
    let t = n + 1;
    let one_minus = PowerSeries::from_coeffs(vec![Rat::one(), -Rat::one()], t);
    let one_plus = PowerSeries::from_coeffs(vec![Rat::one(), Rat::one()], t);
    one_plus.mul(&one_minus.pow(n as u32)).sub(&PowerSeries::one(t))
}

/// Closed form `(-1)^r [C(N, r) - C(N, r-1)]` of the series coefficients.
pub fn blowup_gamma(n: u32, r: u32) -> Rat {
    let (n, r) = (n as i64, r as i64);
    Rat::sign_pow(r) * (crate::algebra::binomial(n, r) - crate::algebra::binomial(n, r - 1))
}
