use rayon::prelude::*;

use super::{Checker, SuiteParams};
use crate::algebra::{AmbientRing, MultiPoly, TruncPolyRing};
use crate::charclass::{phi_y_of, rho_of, rho_r_of, td_at, ypoly_eval, ypoly_mul, KClass};
use crate::Rat;

/// `rho(L) = td(-c_1 L)`, and `rho_1` agrees with it through degree 2.
pub fn rho_line(p: &SuiteParams) -> Checker {
    let top = p.max_n_or(10);
    let parts: Vec<Checker> = (1..=top)
        .into_par_iter()
        .map(|t| {
            let mut c = Checker::new();
            let ring = TruncPolyRing::new(1, t);
            let x = ring.var(0);
            let l = KClass::line_bundle(ring, &x);
            let want = td_at(&ring, &ring.neg(&x));
            c.check_eq(|| format!("line bundle, degree bound {t}"), &want, &rho_of(&l).unwrap());
            let r1 = rho_r_of(&l, 1).unwrap();
            let low = ring.truncate_to(&want, 2);
            c.check_eq(|| format!("rho_1 through degree 2, bound {t}"), &low, &ring.truncate_to(&r1, 2));
            c
        })
        .collect();
    Checker::merged(parts)
}

/// `sum_i td(-x_i) prod_{j != i} x_j`.
fn rho_from_roots(ring: &TruncPolyRing, roots: &[MultiPoly]) -> MultiPoly {
    let mut acc = ring.zero();
    for (i, xi) in roots.iter().enumerate() {
        let mut t = td_at(ring, &ring.neg(xi));
        for (j, xj) in roots.iter().enumerate() {
            if j != i {
                t = ring.mul(&t, xj);
            }
        }
        acc = ring.add(&acc, &t);
    }
    acc
}

/// On split bundles of rank `r`: Newton route, root formula and `rho_r` agree.
pub fn rho_split(p: &SuiteParams) -> Checker {
    let max_r = p.max_n_or(6);
    let parts: Vec<Checker> = (1..=max_r)
        .into_par_iter()
        .map(|r| {
            let mut c = Checker::new();
            let ring = TruncPolyRing::new(r as usize, r + 2);
            let roots = ring.vars();
            let v = KClass::from_roots(ring, &roots);
            let direct = rho_from_roots(&ring, &roots);
            c.check_eq(|| format!("rank {r}: Newton route vs roots"), &direct, &rho_of(&v).unwrap());
            let rr = rho_r_of(&v, r).unwrap();
            let low = ring.truncate_to(&direct, r as usize + 1);
            c.check_eq(|| format!("rank {r}: rho_r through degree {}", r + 1), &low, &ring.truncate_to(&rr, r as usize + 1));
            let phi = phi_y_of(&v).unwrap();
            let at_minus_one = ypoly_eval(&ring, &phi, &-Rat::one());
            c.check_eq(|| format!("rank {r}: phi_(-1) = c_r"), &v.chern(r as i64), &at_minus_one);
            c
        })
        .collect();
    Checker::merged(parts)
}

/// `phi_y(V + W) = phi_y(V) phi_y(W)` on split bundles, plus the root formula.
pub fn phi_mult(p: &SuiteParams) -> Checker {
    let max_total = p.max_n_or(5);
    let pairs: Vec<(u32, u32)> = (1..max_total)
        .flat_map(|a| (1..=max_total - a).map(move |b| (a, b)))
        .collect();
    let parts: Vec<Checker> = pairs
        .into_par_iter()
        .map(|(a, b)| {
            let mut c = Checker::new();
            let ring = TruncPolyRing::new((a + b) as usize, 4);
            let roots = ring.vars();
            let (rv, rw) = roots.split_at(a as usize);
            let v = KClass::from_roots(ring, rv);
            let w = KClass::from_roots(ring, rw);
            let vw = KClass::from_roots(ring, &roots);
            let sum = phi_y_of(&vw).unwrap();
            let prod = ypoly_mul(&ring, &phi_y_of(&v).unwrap(), &phi_y_of(&w).unwrap());
            c.check_eq(|| format!("ranks ({a}, {b}): sum vs product"), &prod, &sum);
            let mut roots_poly = vec![ring.one()];
            for x in &roots {
                let factor = [td_at(&ring, x), td_at(&ring, &ring.neg(x))];
                roots_poly = ypoly_mul(&ring, &roots_poly, &factor);
            }
            c.check_eq(|| format!("ranks ({a}, {b}): root formula"), &roots_poly, &sum);
            c
        })
        .collect();
    Checker::merged(parts)
}
