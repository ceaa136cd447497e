use rayon::prelude::*;

use super::model::FreePeRing;
use super::{Checker, SuiteParams};
use crate::algebra::{AmbientRing, MultiPoly, Rat};
use crate::chow::{pe_generators, pe_push, CurveClass, PEClass, PeRing};
use crate::formulas::heights::{ht_int_class, sigma_curve_class};
use crate::formulas::structural::quotient_coeffs;
use crate::formulas::{extension_shift, F_heights, ShiftVariant, Variant};
use crate::formulas::heights::v_coeff;

const DEFAULT_MAX_N: u32 = 8;

/// Runs `f` on every `(N, d)` sample in parallel; notes any `N` whose sample
/// count is below the `N + 3` points needed to certify a degree `N + 2` identity.
fn over_grid(p: &SuiteParams, f: impl Fn(u32, u32, &mut Checker) + Sync) -> Checker {
    let max_n = p.max_n_or(DEFAULT_MAX_N);
    let grid: Vec<(u32, u32)> = (1..=max_n)
        .flat_map(|n| p.d_samples(n).into_iter().map(move |d| (n, d)))
        .collect();
    let parts: Vec<Checker> = grid
        .into_par_iter()
        .map(|(n, d)| {
            let mut c = Checker::new();
            f(n, d, &mut c);
            c
        })
        .collect();
    let mut out = Checker::merged(parts);
    for n in 1..=max_n {
        let k = p.d_samples(n).len() as u32;
        if k < n + 3 {
            out.note(format!("N = {n}: {k} values of d, fewer than the {} that certify the identity", n + 3));
        }
    }
    out
}

fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

/// `(1 - c_1 L)^{-1}` on `P(E)`.
fn geometric_weight(ring: &PeRing, c1_l: &PEClass) -> PEClass {
    ring.invert_unit(&ring.sub(&ring.one(), c1_l)).expect("unipotent")
}

/// `h^N (x h + y m + z e)`, reduced.
fn top_class(n: usize, x: &Rat, y: &Rat, z: &Rat) -> PEClass {
    PEClass::h_pow(n, n + 1)
        .scale(x)
        .add(&PEClass::h_pow_m(n, n).scale(y))
        .add(&PEClass::h_pow_e(n, n).scale(z))
}

struct Ingredients {
    sigma: PEClass,
    c1_cn: PEClass,
    quotient: PEClass,
}

fn ingredients(n: u32, d: u32) -> Ingredients {
    let nu = n as usize;
    let ring = PeRing::new(nu);
    let g = pe_generators(nu, &q(d as i64));
    let w = ring.mul(&geometric_weight(&ring, &g.c1_l), &g.c_omega_pi);
    let c1_omega = ring.component(&g.c_omega_pi, 1);
    Ingredients {
        sigma: ring.component(&w, nu + 1),
        c1_cn: ring.mul(&g.c1_l, &ring.component(&g.c_omega_pi, nu)),
        quotient: ring.component(&ring.mul(&w, &c1_omega), nu + 1),
    }
}

fn label(n: u32, d: u32) -> String {
    format!("N = {n}, d = {d}")
}

pub fn pe_sigma(p: &SuiteParams) -> Checker {
    over_grid(p, |n, d, c| {
        let k = q(d as i64 - 1).pow(n as i64).unwrap();
        let want = top_class(n as usize, &(&k * &q(d as i64 - 1)), &(&k * &q(n as i64 + 1)), &-k.clone());
        c.check_eq(|| label(n, d), &want, &ingredients(n, d).sigma);
    })
}

pub fn pe_c1cn(p: &SuiteParams) -> Checker {
    over_grid(p, |n, d, c| {
        let (ni, di) = (n as i64, d as i64);
        let s = Rat::sign_pow(ni);
        let want = top_class(n as usize, &(&s * &q(di * (ni + 1))), &(&s * &q(ni + 1)), &(&s * &q(di * ni)));
        c.check_eq(|| label(n, d), &want, &ingredients(n, d).c1_cn);
    })
}

/// Unreduced expansion in `Q[h, m, e] / (m^2, m e, e^2)`.
fn free_quotient(n: u32, d: u32) -> (Rat, Rat, Rat) {
    let nu = n as usize;
    let ring = FreePeRing::new(nu);
    let (h, m, e) = (ring.h(), ring.m(), ring.e());
    let one_h = ring.add(&ring.one(), &h);
    let c_t = ring.add(&ring.pow(&one_h, n + 1), &ring.mul(&e, &ring.pow(&one_h, n)));
    let c_omega: MultiPoly = ring.flip_by_degree(&c_t);
    let c1_l = ring.add(&ring.scale(&h, &q(d as i64)), &m);
    let w = ring.invert_unit(&ring.sub(&ring.one(), &c1_l)).expect("unipotent");
    let integrand = ring.mul(&ring.mul(&w, &ring.component(&c_omega, 1)), &c_omega);
    ring.top_coeffs(&ring.component(&integrand, nu + 1))
}

pub fn pe_quotient(p: &SuiteParams) -> Checker {
    over_grid(p, |n, d, c| {
        let (a, b, cc) = quotient_coeffs(n, &q(d as i64));
        let want = top_class(n as usize, &a, &b, &cc);
        c.check_eq(|| label(n, d) + " (reduced)", &want, &ingredients(n, d).quotient);
        c.check_eq(|| label(n, d) + " (unreduced a, b, c)", &(a, b, cc), &free_quotient(n, d));
    })
}

/// Assembles the Griffiths class from pushforwards and compares with
/// `F_v(d, N) (m - d/(N+1) e)` for every variant; also checks `ht_int`.
pub fn pe_derivation(p: &SuiteParams) -> Checker {
    over_grid(p, |n, d, c| {
        let nu = n as usize;
        let ni = n as i64;
        let ing = ingredients(n, d);
        let q_push = pe_push(&ing.quotient);
        let k_push = pe_push(&ing.c1_cn);
        let s_push = pe_push(&ing.sigma);
        c.check_eq(|| label(n, d) + " (sigma pushforward)", &sigma_curve_class(n, d), &s_push);

        let base = q_push
            .scale(&Rat::new(1, 12))
            .sub(&k_push.scale(&Rat::new(1, 12)));
        let unit = ht_int_class(n, d);
        let f = F_heights(d, n);
        let mut by_variant: Vec<(Variant, CurveClass)> = Vec::new();
        for v in [Variant::Minus, Variant::Plus] {
            let coeff = v_coeff(n, v).expect("plus and minus carry v");
            by_variant.push((v, base.add(&s_push.scale(&coeff))));
        }
        let stab_shift = extension_shift(n - 1, n, &Rat::one(), ShiftVariant::StabMinus);
        let minus = by_variant[0].1.clone();
        by_variant.push((Variant::Stab, minus.add(&s_push.scale(&stab_shift))));
        for (v, got) in by_variant {
            let want = unit.scale(f.get(v));
            c.check_eq(|| format!("{} ({v:?})", label(n, d)), &want, &got);
        }

        let ring = PeRing::new(nu);
        let g = pe_generators(nu, &q(d as i64));
        let h_star = ring.add(&g.h, &g.e.scale(&Rat::new(1, ni + 1)));
        let ht = pe_push(&ring.mul(&ring.pow(&h_star, n), &g.c1_l));
        c.check_eq(|| label(n, d) + " (ht_int class)", &unit, &ht);
    })
}
