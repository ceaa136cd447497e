use super::model::{blowup_correction_series, blowup_gamma, EtaClass};
use super::{Checker, SuiteParams};
use crate::algebra::{frac_coeff, AmbientRing, Rat};
use crate::chow::{pn_integrate, PnClass, PnRing};
use crate::formulas::shifts::shift_coeffs;
use crate::formulas::strata::odp_strata;
use crate::formulas::structural::{a_n_closed, alpha_nr, beta_closed, beta_from_alpha};
use crate::formulas::{dnc_alpha_x, extension_shift, ShiftVariant};

fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

/// `1` for odd `N`, `0` for even.
fn eta_n(n: i64) -> Rat {
    q(n.rem_euclid(2))
}

/// `(1 - (-1)^N) / 2`, which equals `eta_N`; kept separate to mirror the displays.
fn half_odd(n: i64) -> Rat {
    (Rat::one() - Rat::sign_pow(n)) / q(2)
}

pub fn blowup_cr(p: &SuiteParams) -> Checker {
    let mut c = Checker::new();
    for n in 1..=p.max_n_or(20) {
        let s = blowup_correction_series(n as usize);
        c.check_eq(|| format!("N = {n}, r = 0"), &Rat::zero(), &s.coeff(0));
        for r in 1..=n + 1 {
            c.check_eq(|| format!("N = {n}, r = {r}"), &blowup_gamma(n, r), &s.coeff(r as usize));
        }
    }
    c
}

/// `a_N` as the `eta^{N-1}` coefficient of `(c_{N-1} + c_1 c_{N-2})` on the blow-up.
fn a_n_model(n: usize) -> Rat {
    let c = |k: isize| {
        if k < 0 {
            EtaClass::zero(n)
        } else {
            EtaClass::tangent_chern(n, k as usize)
        }
    };
    let k = n as isize;
    let total = c(k - 1).add(&c(1).mul(&c(k - 2)));
    if n == 1 {
        // degree 0: the class is the fundamental class, no eta part
        return Rat::zero();
    }
    total.eta[n - 1].clone()
}

/// `eta^N` coefficient of `c_1 c_{N-1}` on the blow-up.
fn c1_cn1_model(n: usize) -> Rat {
    EtaClass::tangent_chern(n, 1).mul(&EtaClass::tangent_chern(n, n - 1)).eta[n].clone()
}

/// `chi_top` of a smooth quadric in `P^{N-1}`, integrated on `P^{N-1}`.
fn quadric_chi(n: u32) -> Rat {
    if n < 2 {
        return Rat::zero();
    }
    let dim = n as usize - 1;
    let ring = PnRing::new(dim);
    let x = PnClass::hyperplane(dim);
    let one_x = ring.add(&ring.one(), &x);
    let one_2x = ring.add(&ring.one(), &x.scale(&q(2)));
    let c_t = ring.mul(&ring.pow(&one_x, n), &ring.invert_unit(&one_2x).expect("unipotent"));
    pn_integrate(&ring.mul(&x.scale(&q(2)), &c_t))
}

pub fn quadric_beta(p: &SuiteParams) -> Checker {
    let mut c = Checker::new();
    for n in 1..=p.max_n_or(30) {
        let ni = n as i64;
        if n >= 2 {
            let oracle = alpha_nr(n, n - 1);
            let display = Rat::sign_pow(ni) / q(2) * (q(-ni * ni + 3 * ni - 1) - Rat::sign_pow(ni + 1));
            c.check_eq(|| format!("N = {n}: alpha(N, N-1)"), &display, &oracle);
        }
        c.check_eq(|| format!("N = {n}: beta"), &beta_closed(n), &beta_from_alpha(n));
        c.check_eq(|| format!("N = {n}: a_N"), &a_n_closed(n), &a_n_model(n as usize));
        let want = Rat::sign_pow(ni + 1) * Rat::new(ni * (ni - 1) * (ni - 3), 2);
        c.check_eq(|| format!("N = {n}: c_1 c_(N-1) correction"), &want, &c1_cn1_model(n as usize));
        c.check_eq(
            || format!("N = {n}: quadric chi"),
            &quadric_chi(n),
            &(q(2) * frac_coeff(n, 2, &q(2), false).unwrap()),
        );
    }
    c
}

/// Per-point coefficients `u^-_N` and `u^+_N` assembled from the blow-up data.
pub fn u_from_blowup(n: u32) -> (Rat, Rat) {
    let ni = n as i64;
    let chi_q = quadric_chi(n);
    let chi_e = q(ni);
    let open_e = (&chi_e - &chi_q).to_i64().expect("integral");
    let alpha_x = dnc_alpha_x(&odp_strata(n, open_e, chi_q.to_i64().expect("integral"))).expect("geometric");
    let top = EtaClass::tangent_chern(n as usize, 1)
        .mul(&EtaClass::tangent_chern(n as usize, n as usize - 1))
        .integrate_eta_top();
    let correction = &top + &(&beta_closed(n) * &Rat::sign_pow(ni - 1));
    let u_minus = &correction / &q(12) + alpha_x;
    let shift = Rat::sign_pow(ni) * extension_shift(n - 1, n, &Rat::one(), ShiftVariant::PlusMinus);
    let u_plus = &u_minus + &shift;
    (u_minus, u_plus)
}

pub fn u_arith(p: &SuiteParams) -> Checker {
    let mut c = Checker::new();
    for n in 1..=p.max_n_or(30) {
        let ni = n as i64;
        let chi_q = quadric_chi(n);
        let chi_q_display = (Rat::sign_pow(ni) + q(2 * ni - 1)) / q(2);
        c.check_eq(|| format!("N = {n}: quadric chi"), &chi_q_display, &chi_q);

        let open_e = ni - chi_q.to_i64().unwrap();
        let alpha = dnc_alpha_x(&odp_strata(n, open_e, chi_q.to_i64().unwrap())).unwrap();
        let alpha_display = (q(6 * ni - 7) * (Rat::one() - Rat::sign_pow(ni)) + q(2 * ni)) / q(48);
        c.check_eq(|| format!("N = {n}: alpha_x"), &alpha_display, &alpha);

        let top = EtaClass::tangent_chern(n as usize, 1)
            .mul(&EtaClass::tangent_chern(n as usize, n as usize - 1))
            .integrate_eta_top();
        let correction = &top + &(&beta_closed(n) * &Rat::sign_pow(ni - 1));
        let corr_display = -(q(ni - 2) * half_odd(ni));
        c.check_eq(|| format!("N = {n}: correction"), &corr_display, &correction);

        let (um, up) = u_from_blowup(n);
        let table = shift_coeffs(n);
        c.check_eq(|| format!("N = {n}: u^-"), &table.u_minus, &um);
        let um_display = (q(4 * ni - 3) * (Rat::one() - Rat::sign_pow(ni)) + q(2 * ni)) / q(48);
        c.check_eq(|| format!("N = {n}: u^- closed"), &um_display, &um);
        c.check_eq(|| format!("N = {n}: u^+"), &table.u_plus, &up);
        let up_direct = &um - &(eta_n(ni) * Rat::new(ni - 1, 2));
        c.check_eq(|| format!("N = {n}: u^+ = u^- - eta_N (N-1)/2"), &up_direct, &up);
    }
    c
}

pub fn v_from_u(p: &SuiteParams) -> Checker {
    let mut c = Checker::new();
    let twelfth = Rat::new(1, 12);
    for n in 1..=p.max_n_or(50) {
        let ni = n as i64;
        let s = shift_coeffs(n);
        let sg = Rat::sign_pow(ni);
        c.check_eq(|| format!("N = {n}: v^-"), &(&sg * &s.u_minus + &twelfth), &s.v_minus);
        c.check_eq(|| format!("N = {n}: v^+"), &(&sg * &s.u_plus + &twelfth), &s.v_plus);
        let shift = extension_shift(n - 1, n, &Rat::one(), ShiftVariant::PlusMinus);
        c.check_eq(|| format!("N = {n}: v^+ - v^-"), &shift, &(&s.v_plus - &s.v_minus));
        c.check_eq(|| format!("N = {n}: u^+ - u^-"), &-(eta_n(ni) * Rat::new(ni - 1, 2)), &(&s.u_plus - &s.u_minus));
    }
    c
}
