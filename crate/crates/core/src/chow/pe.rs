use std::fmt;

use super::curve::CurveClass;
use crate::algebra::{AmbientRing, Rat};
use crate::error::{Error, Result};

/// Element of the rational Chow ring of `P(E)` over a curve, `rank E = N + 1`.
///
/// Canonical basis `h^i`, `h^i m`, `h^i e` for `0 <= i <= N`, where `h` is the
/// hyperplane class and `m`, `e` are pulled back from the curve. Products are
/// reduced with `h^{N+1} = -h^N e` and `m^2 = e^2 = m e = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PEClass {
    n: usize,
    h: Vec<Rat>,
    hm: Vec<Rat>,
    he: Vec<Rat>,
}

impl PEClass {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "fiber dimension must be positive");
        PEClass { n, h: vec![Rat::zero(); n + 1], hm: vec![Rat::zero(); n + 1], he: vec![Rat::zero(); n + 1] }
    }

    pub fn scalar(n: usize, c: Rat) -> Self {
        let mut a = Self::zero(n);
        a.h[0] = c;
        a
    }

    /// `h^i`, reduced when `i > N`.
    pub fn h_pow(n: usize, i: usize) -> Self {
        let mut a = Self::zero(n);
        if i <= n {
            a.h[i] = Rat::one();
        } else if i == n + 1 {
            a.he[n] = -Rat::one();
        }
        a
    }

    pub fn h_pow_m(n: usize, i: usize) -> Self {
        let mut a = Self::zero(n);
        if i <= n {
            a.hm[i] = Rat::one();
        }
        a
    }

    pub fn h_pow_e(n: usize, i: usize) -> Self {
        let mut a = Self::zero(n);
        if i <= n {
            a.he[i] = Rat::one();
        }
        a
    }

    /// Pullback of `c0 [C] + c_m m + c_e e`.
    pub fn lift(n: usize, cc: &CurveClass) -> Self {
        let mut a = Self::zero(n);
        a.h[0] = cc.c0.clone();
        a.hm[0] = cc.c_m.clone();
        a.he[0] = cc.c_e.clone();
        a
    }

    pub fn fiber_dim(&self) -> usize {
        self.n
    }

    pub fn coeff_h(&self) -> &[Rat] {
        &self.h
    }

    pub fn coeff_hm(&self) -> &[Rat] {
        &self.hm
    }

    pub fn coeff_he(&self) -> &[Rat] {
        &self.he
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().chain(&self.hm).chain(&self.he).all(Rat::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "fiber dimensions differ");
        let zip = |a: &[Rat], b: &[Rat]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        PEClass { n: self.n, h: zip(&self.h, &o.h), hm: zip(&self.hm, &o.hm), he: zip(&self.he, &o.he) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let sc = |a: &[Rat]| a.iter().map(|x| x * c).collect();
        PEClass { n: self.n, h: sc(&self.h), hm: sc(&self.hm), he: sc(&self.he) }
    }

    /// Degree-`k` part: `h^k`, `h^{k-1} m`, `h^{k-1} e`.
    pub fn component(&self, k: usize) -> Self {
        let mut a = Self::zero(self.n);
        if k <= self.n {
            a.h[k] = self.h[k].clone();
        }
        if k >= 1 && k - 1 <= self.n {
            a.hm[k - 1] = self.hm[k - 1].clone();
            a.he[k - 1] = self.he[k - 1].clone();
        }
        a
    }

    /// Canonical-form product.
    pub fn mul(&self, o: &Self) -> Self {
        pe_mul(self, o).expect("same fiber dimension")
    }
}

/// Ring product; the operands must share `N`.
pub fn pe_mul(a: &PEClass, b: &PEClass) -> Result<PEClass> {
    if a.n != b.n {
        return Err(Error::Mismatch(format!("P(E) with N = {} and N = {}", a.n, b.n)));
    }
    let n = a.n;
    let mut out = PEClass::zero(n);
    for i in 0..=n {
        let (ah, am, ae) = (&a.h[i], &a.hm[i], &a.he[i]);
        if ah.is_zero() && am.is_zero() && ae.is_zero() {
            continue;
        }
        for j in 0..=n - i + 1 {
            if j > n {
                break;
            }
            let (bh, bm, be) = (&b.h[j], &b.hm[j], &b.he[j]);
            let s = i + j;
            if s <= n {
                out.h[s] += ah * bh;
                out.hm[s] += &(ah * bm) + &(am * bh);
                out.he[s] += &(ah * be) + &(ae * bh);
            } else if s == n + 1 {
                // h^{N+1} = -h^N e; classes times m or e are in degree N+2.
                out.he[n] -= ah * bh;
            }
        }
    }
    Ok(out)
}

/// Pushforward to the curve: only `h^N`, `h^N m`, `h^N e` survive.
pub fn pe_push(a: &PEClass) -> CurveClass {
    let n = a.n;
    CurveClass::new(a.h[n].clone(), a.hm[n].clone(), a.he[n].clone())
}

impl fmt::Debug for PEClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PEClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mono = |i: usize, tail: &str| -> String {
            let hp = match i {
                0 => String::new(),
                1 => "h".to_string(),
                _ => format!("h^{i}"),
            };
            match (hp.is_empty(), tail.is_empty()) {
                (true, true) => String::new(),
                (true, false) => tail.to_string(),
                (false, true) => hp,
                (false, false) => format!("{hp}*{tail}"),
            }
        };
        for k in 0..=self.n + 1 {
            let mut push = |c: &Rat, m: String| {
                if !c.is_zero() {
                    parts.push((c.clone(), m));
                }
            };
            if k <= self.n {
                push(&self.h[k], mono(k, ""));
            }
            if k >= 1 {
                push(&self.hm[k - 1], mono(k - 1, "m"));
                push(&self.he[k - 1], mono(k - 1, "e"));
            }
        }
        write_terms(f, &parts)
    }
}

/// Writes `sum c_i * mono_i` with signs folded into the separators.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, parts: &[(Rat, String)]) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "0");
    }
    for (idx, (c, m)) in parts.iter().enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        match (m.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{m}")?,
            (false, false) => write!(f, "{mag}*{m}")?,
        }
    }
    Ok(())
}

/// The ring `CH^*(P(E))_Q` with fiber dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PeRing {
    pub n: usize,
}

impl PeRing {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "fiber dimension must be positive");
        PeRing { n }
    }
}

impl AmbientRing for PeRing {
    type Elem = PEClass;

    fn top_degree(&self) -> usize {
        self.n + 1
    }

    fn zero(&self) -> PEClass {
        PEClass::zero(self.n)
    }

    fn scalar(&self, c: &Rat) -> PEClass {
        PEClass::scalar(self.n, c.clone())
    }

    fn add(&self, a: &PEClass, b: &PEClass) -> PEClass {
        a.add(b)
    }

    fn mul(&self, a: &PEClass, b: &PEClass) -> PEClass {
        a.mul(b)
    }

    fn scale(&self, a: &PEClass, c: &Rat) -> PEClass {
        a.scale(c)
    }

    fn component(&self, a: &PEClass, k: usize) -> PEClass {
        a.component(k)
    }

    fn constant_term(&self, a: &PEClass) -> Rat {
        a.h[0].clone()
    }

    fn is_zero(&self, a: &PEClass) -> bool {
        a.is_zero()
    }
}

/// Standard classes on `P(E)` for hypersurfaces of relative degree `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct PeGenerators {
    pub h: PEClass,
    pub m: PEClass,
    pub e: PEClass,
    /// `c_1(L) = d h + m`.
    pub c1_l: PEClass,
    /// `c(T_pi) = (1+h)^{N+1} + e (1+h)^N`.
    pub c_t_pi: PEClass,
    /// `c(Omega_pi)`, the degree-wise sign flip of `c(T_pi)`.
    pub c_omega_pi: PEClass,
    /// Class of a hypersurface in `|L|`; equal to `c1_l`.
    pub h_cycle: PEClass,
}

pub fn pe_generators(n: usize, d: &Rat) -> PeGenerators {
    let ring = PeRing::new(n);
    let h = PEClass::h_pow(n, 1);
    let m = PEClass::h_pow_m(n, 0);
    let e = PEClass::h_pow_e(n, 0);
    let one_h = ring.add(&ring.one(), &h);
    let c_t_pi = ring.add(&ring.pow(&one_h, n as u32 + 1), &ring.mul(&e, &ring.pow(&one_h, n as u32)));
    let c_omega_pi = ring.flip_by_degree(&c_t_pi);
    let c1_l = ring.add(&h.scale(d), &m);
    PeGenerators { h, m, e, h_cycle: c1_l.clone(), c1_l, c_t_pi, c_omega_pi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn hypersurface_class() {
        let g = pe_generators(2, &q(3));
        assert_eq!(g.h_cycle.coeff_h(), &[q(0), q(3), q(0)]);
        assert_eq!(g.h_cycle.coeff_hm(), &[q(1), q(0), q(0)]);
    }

    #[test]
    fn tangent_class_low_degrees() {
        let g = pe_generators(1, &Rat::new(5, 2));
        let c1 = g.c_t_pi.component(1);
        assert_eq!(c1, PEClass::h_pow(1, 1).scale(&q(2)).add(&PEClass::h_pow_e(1, 0)));
        for n in 1..6 {
            assert_eq!(pe_generators(n, &q(2)).c_t_pi.coeff_h()[0], q(1));
        }
    }

    #[test]
    fn relation_and_vanishing_products() {
        let n = 3;
        let h = PEClass::h_pow(n, 1);
        let hn = PEClass::h_pow(n, n);
        assert_eq!(hn.mul(&h), PEClass::h_pow_e(n, n).scale(&q(-1)));
        let m = PEClass::h_pow_m(n, 0);
        let e = PEClass::h_pow_e(n, 0);
        assert!(m.mul(&e).is_zero());
        assert!(m.mul(&m).is_zero());
        let a = hn.add(&m).add(&h.scale(&q(7)));
        assert_eq!(PEClass::scalar(n, q(1)).mul(&a), a);
        assert!(pe_mul(&a, &PEClass::zero(2)).is_err());
    }

    #[test]
    fn pushforward_table() {
        let n = 4;
        assert_eq!(pe_push(&PEClass::h_pow(n, n)), CurveClass::fundamental());
        assert!(pe_push(&PEClass::h_pow(n, n - 1)).is_zero());
        assert_eq!(pe_push(&PEClass::h_pow(n, n + 1)), CurveClass::new(q(0), q(0), q(-1)));
        assert_eq!(pe_push(&PEClass::h_pow_m(n, n)), CurveClass::m());
    }

    #[test]
    fn display() {
        let g = pe_generators(2, &q(3));
        assert_eq!(g.c1_l.to_string(), "3*h + m");
        assert_eq!(PEClass::zero(2).to_string(), "0");
    }
}
