use rayon::prelude::*;

use super::{Checker, SuiteParams};
use crate::algebra::Rat;
use crate::chow::{pn_chern_omega, PnClass};
use crate::formulas::{linear_pencil_report, pe_pencil_report, PencilSpec, Variant};

/// Bidegree `(d, 1)` hypersurfaces in `P^N x P^1`, through both models.
pub fn cross_linear_pe(p: &SuiteParams) -> Checker {
    let max_n = p.max_n_or(6);
    let max_d = p.d_max.unwrap_or(8);
    let grid: Vec<(u32, u32)> = (1..=max_n).flat_map(|n| (1..=max_d).map(move |d| (n, d))).collect();
    let parts: Vec<Checker> = grid
        .into_par_iter()
        .map(|(n, d)| {
            let mut c = Checker::new();
            let nu = n as usize;
            let c1m = PnClass::hyperplane(nu).scale(&Rat::from_int(d as i64));
            let lin = linear_pencil_report(&pn_chern_omega(nu), &c1m, 1, nu).expect("valid pencil");
            let spec = PencilSpec::new(n, d, Rat::zero(), Rat::one(), Variant::Minus).expect("valid spec");
            let pe = pe_pencil_report(&spec);
            let at = |what: &str| format!("N = {n}, d = {d}: {what}");
            let count = Rat::from_int(n as i64 + 1) * Rat::from_int(d as i64 - 1).pow(n as i64).unwrap();
            c.check_eq(|| at("sigma closed form"), &count, &lin.sigma_count);
            c.check_eq(|| at("sigma"), &pe.sigma_count, &lin.sigma_count);
            c.check_eq(|| at("ht_plus"), &pe.ht_plus, &lin.ht_plus);
            c.check_eq(|| at("ht_minus"), &pe.ht_minus, &lin.ht_minus);
            if (n, d) == (2, 3) {
                c.check_eq(|| at("plane cubics ht_minus"), &Rat::one(), &lin.ht_minus);
            }
            c
        })
        .collect();
    Checker::merged(parts)
}
