use rayon::prelude::*;

use super::{Checker, SuiteParams, Witness};
use crate::algebra::{
    binomial, frac_coeff, frac_coeff_closed, frac_coeff_residue, Rat,
};
use crate::algebra::coeffs::{simple_closed_leading, squared_closed_bound_n, squared_closed_leading};

fn a_grid() -> Vec<Rat> {
    [(1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (5, 1), (7, 2)]
        .iter()
        .map(|&(p, q)| Rat::new(p, q))
        .collect()
}

fn at(n: u32, r: u32, a: &Rat, squared: bool) -> String {
    format!("n = {n}, r = {r}, a = {a}, squared = {squared}")
}

/// Closed, residue and leading forms against the series oracle.
pub fn formal_coeffs(p: &SuiteParams) -> Checker {
    let max_n = p.max_n_or(25);
    let grid = a_grid();
    let parts: Vec<Checker> = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut c = Checker::new();
            for r in 0..=n + 1 {
                for a in &grid {
                    for squared in [false, true] {
                        let oracle = frac_coeff(n, r, a, squared).unwrap();
                        let closed = frac_coeff_closed(n, r, a, squared).unwrap();
                        let residue = frac_coeff_residue(n, r, a, squared).unwrap();
                        c.check_eq(|| at(n, r, a, squared) + " (closed)", &oracle, &closed);
                        c.check_eq(|| at(n, r, a, squared) + " (residue)", &oracle, &residue);
                        if r <= n {
                            let lead = if squared {
                                squared_closed_leading(n, r, a)
                            } else {
                                simple_closed_leading(n, r, a)
                            }
                            .unwrap();
                            c.check_eq(|| at(n, r, a, squared) + " (leading)", &oracle, &lead);
                        }
                    }
                }
                if (1..=n).contains(&r) {
                    let b = binomial(n as i64 - 1, (n - r) as i64);
                    let v = frac_coeff(n, r, &Rat::one(), false).unwrap();
                    c.check_eq(|| format!("n = {n}, r = {r}, a = 1 (binomial)"), &b, &v);
                }
            }
            c
        })
        .collect();
    Checker::merged(parts)
}

const DOC_WITNESS: (u32, u32, i64) = (2, 1, 2);

fn witness_input() -> String {
    let (n, r, a) = DOC_WITNESS;
    format!("(n, r, a) = ({n}, {r}, {a})")
}

/// The printed squared form at the documented point: printed `3`, oracle `-1`.
pub fn documented_squared_witness() -> Witness {
    let (n, r, a) = DOC_WITNESS;
    let a = Rat::from_int(a);
    Witness {
        input: witness_input(),
        expected: frac_coeff(n, r, &a, true).unwrap().to_string(),
        actual: squared_closed_bound_n(n, r, &a).unwrap().to_string(),
    }
}

/// The squared closed form as printed (sum stopping at `k = n`) against the oracle.
///
/// Reports a discrepancy carrying the documented witness and counts the other
/// disagreeing grid points in a note.
pub fn squared_as_printed(p: &SuiteParams) -> Checker {
    let max_n = p.max_n_or(8).max(DOC_WITNESS.0);
    let mut c = Checker::new();
    let mut disagree = 0usize;
    let mut total = 0usize;
    for n in 0..=max_n {
        for r in 0..=n {
            for a in a_grid() {
                total += 1;
                if frac_coeff(n, r, &a, true).unwrap() != squared_closed_bound_n(n, r, &a).unwrap() {
                    disagree += 1;
                }
            }
        }
    }
    let w = documented_squared_witness();
    c.check(
        w.expected != w.actual,
        witness_input,
        || "printed form disagrees with the oracle".into(),
        || format!("printed = oracle = {}", w.actual),
    );
    let (n, r, a) = DOC_WITNESS;
    let leading = squared_closed_leading(n, r, &Rat::from_int(a)).unwrap();
    let corrected = frac_coeff_closed(n, r, &Rat::from_int(a), true).unwrap();
    c.note(format!(
        "printed form disagrees with the oracle at {disagree} of {total} grid points (n <= {max_n})"
    ));
    c.note(format!(
        "at {}: oracle {}, printed {}, leading form {}, sum to k = n+1 gives {}",
        witness_input(),
        w.expected,
        w.actual,
        leading,
        corrected
    ));
    c.discrepancy(w);
    c
}
