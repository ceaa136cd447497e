//! Characteristic classes of K-theory classes over an [`AmbientRing`].
//!
//! A class is stored as its rank and total Chern class. Multiplicative and
//! additive classes are computed from power sums of Chern roots, obtained from
//! the Chern classes by Newton's identities inside the ring, so no Chern roots
//! are ever needed.

use crate::algebra::rat::factorial;
use crate::algebra::series::{log_td_series, td_series};
use crate::algebra::{AmbientRing, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct KClass<R: AmbientRing> {
    ring: R,
    rank: i64,
    total: R::Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl<R: AmbientRing> KClass<R> {
    /// Class with the given total Chern class; its constant term must be 1.
    pub fn new(ring: R, rank: i64, total: R::Elem) -> Result<Self> {
        if !ring.constant_term(&total).is_one() {
            return Err(Error::Invalid("total Chern class must have constant term 1".into()));
        }
        let total = ring.truncate_to(&total, ring.top_degree());
        Ok(KClass { ring, rank, total })
    }

    /// Class with `c_k = chern[k-1]`; each entry is projected to its degree.
    pub fn from_chern(ring: R, rank: i64, chern: &[R::Elem]) -> Self {
        let mut total = ring.one();
        for (i, c) in chern.iter().enumerate() {
            total = ring.add(&total, &ring.component(c, i + 1));
        }
        KClass { ring, rank, total }
    }

    pub fn trivial(ring: R, rank: i64) -> Self {
        let total = ring.one();
        KClass { ring, rank, total }
    }

    pub fn line_bundle(ring: R, c1: &R::Elem) -> Self {
        Self::from_chern(ring, 1, std::slice::from_ref(c1))
    }

    /// Direct sum of line bundles with first Chern classes `roots`.
    pub fn from_roots(ring: R, roots: &[R::Elem]) -> Self {
        let mut total = ring.one();
        for x in roots {
            total = ring.mul(&total, &ring.add(&ring.one(), x));
        }
        KClass { ring, rank: roots.len() as i64, total }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total(&self) -> &R::Elem {
        &self.total
    }

    /// `c_k`, with `c_0 = 1` and `c_k = 0` for negative `k`.
    pub fn chern(&self, k: i64) -> R::Elem {
        if k < 0 {
            self.ring.zero()
        } else {
            self.ring.component(&self.total, k as usize)
        }
    }

    pub fn dual(&self) -> Self {
        KClass {
            ring: self.ring.clone(),
            rank: self.rank,
            total: self.ring.flip_by_degree(&self.total),
        }
    }
}

/// `K1 + K2` or `K1 - K2`.
pub fn kclass_combine<R: AmbientRing>(k1: &KClass<R>, k2: &KClass<R>, sign: Sign) -> Result<KClass<R>> {
    if k1.ring != k2.ring {
        return Err(Error::Mismatch(format!("{:?} vs {:?}", k1.ring, k2.ring)));
    }
    let ring = &k1.ring;
    let (rank, total) = match sign {
        Sign::Plus => (k1.rank + k2.rank, ring.mul(&k1.total, &k2.total)),
        Sign::Minus => (k1.rank - k2.rank, ring.mul(&k1.total, &ring.invert_unit(&k2.total)?)),
    };
    Ok(KClass { ring: ring.clone(), rank, total })
}

/// Power sums `p_1, ..., p_top` of the Chern roots (index 0 holds the rank).
pub fn power_sums<R: AmbientRing>(k: &KClass<R>) -> Vec<R::Elem> {
    let ring = &k.ring;
    let top = ring.top_degree();
    let c: Vec<R::Elem> = (0..=top as i64).map(|i| k.chern(i)).collect();
    let mut p = vec![ring.scalar(&Rat::from_int(k.rank))];
    for n in 1..=top {
        // p_n = sum_{i<n} (-1)^{i-1} c_i p_{n-i} + (-1)^{n-1} n c_n
        let mut acc = ring.scale(&c[n], &(Rat::sign_pow(n as i64 - 1) * Rat::from_int(n as i64)));
        for i in 1..n {
            let t = ring.mul(&c[i], &p[n - i]);
            acc = ring.add(&acc, &ring.scale(&t, &Rat::sign_pow(i as i64 - 1)));
        }
        p.push(acc);
    }
    p
}

/// `exp(sum_k coeffs[k] p_k)`: the multiplicative class with `log f = sum coeffs[k] x^k`.
fn multiplicative<R: AmbientRing>(ring: &R, p: &[R::Elem], log_coeffs: &[Rat]) -> R::Elem {
    let mut arg = ring.zero();
    for k in 1..p.len().min(log_coeffs.len()) {
        arg = ring.add(&arg, &ring.scale(&p[k], &log_coeffs[k]));
    }
    ring.exp(&arg)
}

pub fn todd_of<R: AmbientRing>(k: &KClass<R>) -> R::Elem {
    let top = k.ring.top_degree();
    let b = log_td_series(top);
    multiplicative(&k.ring, &power_sums(k), b.coeffs())
}

pub fn ch_of<R: AmbientRing>(k: &KClass<R>) -> R::Elem {
    let ring = &k.ring;
    let p = power_sums(k);
    let mut acc = p[0].clone();
    for (j, pj) in p.iter().enumerate().skip(1) {
        acc = ring.add(&acc, &ring.scale(pj, &factorial(j as u32).recip().unwrap()));
    }
    acc
}

/// `ch(Lambda^p V^dual)` for `p = 0..=rank`.
pub fn exterior_duals_ch<R: AmbientRing>(v: &KClass<R>) -> Result<Vec<R::Elem>> {
    if v.rank < 0 {
        return Err(Error::NegativeRank(v.rank));
    }
    let ring = &v.ring;
    let rank = v.rank as usize;
    let p = power_sums(v);
    // big_p[k] = sum_i exp(-k x_i) = ch of the k-th Adams operation on V^dual
    let big_p: Vec<R::Elem> = (0..=rank)
        .map(|k| {
            let mut acc = p[0].clone();
            for (j, pj) in p.iter().enumerate().skip(1) {
                let c = Rat::from_int(-(k as i64)).pow(j as i64).unwrap() / factorial(j as u32);
                acc = ring.add(&acc, &ring.scale(pj, &c));
            }
            acc
        })
        .collect();
    let mut e = vec![ring.one()];
    for n in 1..=rank {
        let mut acc = ring.zero();
        for i in 1..=n {
            let t = ring.mul(&e[n - i], &big_p[i]);
            acc = ring.add(&acc, &ring.scale(&t, &Rat::sign_pow(i as i64 - 1)));
        }
        e.push(ring.scale(&acc, &Rat::new(1, n as i64)));
    }
    Ok(e)
}

/// Coefficients in `y` of `phi_y(V) = ch(lambda_y(V^dual)) Td(V)`.
pub fn phi_y_of<R: AmbientRing>(v: &KClass<R>) -> Result<Vec<R::Elem>> {
    let ring = &v.ring;
    let td = todd_of(v);
    Ok(exterior_duals_ch(v)?.iter().map(|c| ring.mul(c, &td)).collect())
}

/// `rho(V)`: the `y`-derivative of `phi_y(V)` at `y = -1`.
pub fn rho_of<R: AmbientRing>(v: &KClass<R>) -> Result<R::Elem> {
    let phi = phi_y_of(v)?;
    Ok(ypoly_eval(&v.ring, &ypoly_derivative(&v.ring, &phi), &-Rat::one()))
}

/// `c_{r-1} - (r/2) c_r + (1/12) c_1 c_r`.
pub fn rho_r_of<R: AmbientRing>(k: &KClass<R>, r: u32) -> Result<R::Elem> {
    if r == 0 {
        return Err(Error::Invalid("rho_r requires r >= 1".into()));
    }
    let ring = &k.ring;
    let r = r as i64;
    let cr = k.chern(r);
    let a = ring.sub(&k.chern(r - 1), &ring.scale(&cr, &Rat::new(r, 2)));
    Ok(ring.add(&a, &ring.scale(&ring.mul(&k.chern(1), &cr), &Rat::new(1, 12))))
}

/// Evaluates a polynomial in `y` with ring coefficients.
pub fn ypoly_eval<R: AmbientRing>(ring: &R, p: &[R::Elem], y: &Rat) -> R::Elem {
    p.iter().rev().fold(ring.zero(), |acc, c| ring.add(&ring.scale(&acc, y), c))
}

pub fn ypoly_derivative<R: AmbientRing>(ring: &R, p: &[R::Elem]) -> Vec<R::Elem> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| ring.scale(c, &Rat::from_int(k as i64)))
        .collect()
}

pub fn ypoly_mul<R: AmbientRing>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    out
}

/// `td(x)` for a nilpotent element `x`.
pub fn td_at<R: AmbientRing>(ring: &R, x: &R::Elem) -> R::Elem {
    ring.eval_series(&td_series(ring.top_degree()), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TruncPolyRing;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn todd_of_line_bundle() {
        let ring = TruncPolyRing::new(1, 2);
        let x = ring.var(0);
        let td = todd_of(&KClass::line_bundle(ring, &x));
        assert_eq!(td.coeff_of(&[0]), Rat::one());
        assert_eq!(td.coeff_of(&[1]), r(1, 2));
        assert_eq!(td.coeff_of(&[2]), r(1, 12));
        assert_eq!(todd_of(&KClass::trivial(ring, 3)), ring.one());
    }

    #[test]
    fn todd_degree_one_is_half_c1() {
        let ring = TruncPolyRing::new(2, 3);
        let v = KClass::from_roots(ring, &ring.vars());
        assert_eq!(ring.component(&todd_of(&v), 1), ring.scale(&v.chern(1), &r(1, 2)));
    }

    #[test]
    fn ch_examples() {
        let ring = TruncPolyRing::new(1, 2);
        let x = ring.var(0);
        let ch = ch_of(&KClass::line_bundle(ring, &x));
        assert_eq!(ch, ring.exp(&x));
        assert_eq!(ch_of(&KClass::trivial(ring, 4)), ring.scalar(&Rat::from_int(4)));
        let dual = ch_of(&KClass::line_bundle(ring, &x).dual());
        assert_eq!(dual, ring.flip_by_degree(&ch));
    }

    #[test]
    fn combine_examples() {
        let ring = TruncPolyRing::new(2, 3);
        let v = KClass::from_roots(ring, &ring.vars());
        let zero = kclass_combine(&v, &v, Sign::Minus).unwrap();
        assert_eq!(zero.rank(), 0);
        assert_eq!(zero.total(), &ring.one());
        let a = KClass::line_bundle(ring, &ring.var(0));
        let b = KClass::line_bundle(ring, &ring.var(1));
        let s = kclass_combine(&a, &b, Sign::Plus).unwrap();
        assert_eq!(s.chern(1), ring.add(&ring.var(0), &ring.var(1)));
        let other = KClass::trivial(TruncPolyRing::new(2, 4), 1);
        assert!(kclass_combine(&a, &other, Sign::Plus).is_err());
    }

    #[test]
    fn phi_y_line_bundle_at_minus_one_is_c1() {
        let ring = TruncPolyRing::new(1, 5);
        let x = ring.var(0);
        let phi = phi_y_of(&KClass::line_bundle(ring, &x)).unwrap();
        assert_eq!(ypoly_eval(&ring, &phi, &-Rat::one()), x);
        let e = ring.exp(&ring.neg(&x));
        let expected = vec![td_at(&ring, &x), ring.mul(&td_at(&ring, &x), &e)];
        assert_eq!(phi, expected);
    }

    #[test]
    fn phi_y_rejects_negative_rank() {
        let ring = TruncPolyRing::new(1, 2);
        let k = KClass::trivial(ring, -1);
        assert_eq!(phi_y_of(&k).unwrap_err(), Error::NegativeRank(-1));
        assert_eq!(rho_of(&k).unwrap_err(), Error::NegativeRank(-1));
    }

    #[test]
    fn rho_examples() {
        let ring = TruncPolyRing::new(2, 4);
        let x = ring.var(0);
        let y = ring.var(1);
        let line = KClass::line_bundle(ring, &x);
        assert_eq!(rho_of(&line).unwrap(), td_at(&ring, &ring.neg(&x)));
        let v = KClass::from_roots(ring, &[x.clone(), y.clone()]);
        let leibniz = ring.add(
            &ring.mul(&td_at(&ring, &ring.neg(&x)), &y),
            &ring.mul(&td_at(&ring, &ring.neg(&y)), &x),
        );
        assert_eq!(rho_of(&v).unwrap(), leibniz);
        assert_eq!(rho_of(&KClass::trivial(ring, 1)).unwrap(), ring.one());
    }

    #[test]
    fn rho_r_examples() {
        let ring = TruncPolyRing::new(1, 2);
        let x = ring.var(0);
        let line = KClass::line_bundle(ring, &x);
        let expected = ring.add(
            &ring.sub(&ring.one(), &ring.scale(&x, &r(1, 2))),
            &ring.scale(&ring.mul(&x, &x), &r(1, 12)),
        );
        assert_eq!(rho_r_of(&line, 1).unwrap(), expected);
        assert_eq!(rho_r_of(&line, 1).unwrap(), td_at(&ring, &ring.neg(&x)));
        assert!(ring.is_zero(&rho_r_of(&KClass::trivial(ring, 3), 2).unwrap()));
        assert!(rho_r_of(&line, 0).is_err());
    }

    #[test]
    fn rho_r_rank_three_in_elementary_symmetric() {
        let ring = TruncPolyRing::new(3, 5);
        let v = KClass::from_roots(ring, &ring.vars());
        let (e1, e2, e3) = (v.chern(1), v.chern(2), v.chern(3));
        let expected = ring.add(
            &ring.sub(&e2, &ring.scale(&e3, &r(3, 2))),
            &ring.scale(&ring.mul(&e1, &e3), &r(1, 12)),
        );
        assert_eq!(rho_r_of(&v, 3).unwrap(), expected);
    }
}
