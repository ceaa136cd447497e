use serde::Serialize;

use super::heights::sigma_warning;
use super::shifts::shift_coeffs;
use crate::algebra::{AmbientRing, Rat};
use crate::chow::{pn_integrate, PnClass, PnRing};
use crate::error::{Error, Result};

/// Critical-point count and heights of a pencil `V x P^1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearReport {
    pub sigma_count: Rat,
    pub ht_plus: Rat,
    pub ht_minus: Rat,
    pub chi_top: Rat,
    pub warnings: Vec<String>,
}

/// Pencil in `|pr_1^* M (x) pr_2^* O(delta)|` on `V x P^1`, `dim V = n`.
///
/// `c_omega_v` is `c(Omega^1_V)` and `c1m` is `c_1(M)`, both in the ring of `V`.
pub fn linear_pencil_report(c_omega_v: &PnClass, c1m: &PnClass, delta: i64, n: usize) -> Result<LinearReport> {
    if c_omega_v.dim() != n || c1m.dim() != n {
        return Err(Error::Mismatch(format!(
            "dimension {n} with classes on P^{} and P^{}",
            c_omega_v.dim(),
            c1m.dim()
        )));
    }
    if n == 0 {
        return Err(Error::Invalid("V must have positive dimension".into()));
    }
    if delta < 1 {
        return Err(Error::Invalid(format!("delta must be positive, got {delta}")));
    }
    let ring = PnRing::new(n);
    let delta_q = Rat::from_int(delta);
    let one_minus = ring.sub(&ring.one(), &ring.component(c1m, 1));
    let weight = ring.pow(&ring.invert_unit(&one_minus)?, 2);
    let sigma_count = &delta_q * &pn_integrate(&ring.mul(&weight, c_omega_v));
    let c1_omega = ring.component(c_omega_v, 1);
    let quotient = pn_integrate(&ring.mul(&ring.mul(&weight, &c1_omega), c_omega_v));
    let ni = n as i64;
    let chi_top = Rat::sign_pow(ni) * pn_integrate(&ring.component(c_omega_v, n));
    let base = &delta_q * &quotient / Rat::from_int(12)
        + Rat::sign_pow(ni + 1) * &delta_q * &chi_top / Rat::from_int(12);
    let s = shift_coeffs(n as u32);
    let mut warnings = Vec::new();
    if let Some(w) = sigma_warning(&sigma_count) {
        warnings.push(w);
    }
    Ok(LinearReport {
        ht_plus: &base + &(&s.v_plus * &sigma_count),
        ht_minus: &base + &(&s.v_minus * &sigma_count),
        sigma_count,
        chi_top,
        warnings,
    })
}

/// Lefschetz pencil of hyperplane sections of `V`, with `c1_ov1 = c_1(O_V(1))`.
pub fn lefschetz_report(n: usize, c_omega_v: &PnClass, c1_ov1: &PnClass) -> Result<LinearReport> {
    linear_pencil_report(c_omega_v, c1_ov1, 1, n)
}
