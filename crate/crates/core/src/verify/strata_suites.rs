use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Checker, SuiteParams};
use crate::algebra::{AmbientRing, Rat, TruncPolyRing};
use crate::charclass::td_at;
use crate::formulas::strata::{Component, Pair};
use crate::formulas::{cy_alt_sum, cy_beta_x, dnc_alpha_x, StrataSpec};

const DEFAULT_SEED: u64 = 0x6b1f_2e5d;

fn rng(p: &SuiteParams) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(p.seed.unwrap_or(DEFAULT_SEED))
}

/// Index of `D_ij`, `i < j`, among the pairs of `k` components.
fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < k);
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

/// `c_1(N_i)` pushed into `CH^2`, as a vector over the `D_ij`:
/// `m_i c_1(N_i) = -sum_{j != i} m_j D_ij`.
fn normal_symbol(m: &[Rat], i: usize) -> Vec<Rat> {
    let k = m.len();
    let mut out = vec![Rat::zero(); k * (k - 1) / 2];
    for j in 0..k {
        if j != i {
            let idx = pair_index(k, i.min(j), i.max(j));
            out[idx] -= &m[j] / &m[i];
        }
    }
    out
}

fn add_into(acc: &mut [Rat], v: &[Rat], c: &Rat) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b * c;
    }
}

/// Degree-2 part of `prod td(D_i) - 1/2 sum m_i D_i`, rewritten over the `D_ij`.
fn expansion_deg2(m: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let k = m.len();
    let ring = TruncPolyRing::new(k, 2);
    let vars = ring.vars();
    let mut prod = ring.one();
    for x in &vars {
        prod = ring.mul(&prod, &td_at(&ring, x));
    }
    let mut lin = ring.zero();
    for (x, mi) in vars.iter().zip(m) {
        lin = ring.add(&lin, &ring.scale(x, mi));
    }
    let ratio = ring.sub(&prod, &ring.scale(&lin, &Rat::new(1, 2)));
    let deg1: Vec<Rat> = (0..k)
        .map(|i| {
            let mut e = vec![0u32; k];
            e[i] = 1;
            ratio.coeff_of(&e)
        })
        .collect();
    let mut pairs = vec![Rat::zero(); k * (k - 1) / 2];
    for i in 0..k {
        let mut e = vec![0u32; k];
        e[i] = 2;
        add_into(&mut pairs, &normal_symbol(m, i), &ratio.coeff_of(&e));
        for j in i + 1..k {
            let mut e = vec![0u32; k];
            e[i] = 1;
            e[j] = 1;
            pairs[pair_index(k, i, j)] += ratio.coeff_of(&e);
        }
    }
    (deg1, pairs)
}

/// `(1/12) sum_i c_1(N_i) + (1/4) sum_{i<j} D_ij`, rewritten over the `D_ij`.
fn normal_form(m: &[Rat]) -> Vec<Rat> {
    let k = m.len();
    let mut out = vec![Rat::new(1, 4); k * (k - 1) / 2];
    for i in 0..k {
        add_into(&mut out, &normal_symbol(m, i), &Rat::new(1, 12));
    }
    out
}

/// `(1/12) (3 - m_i/m_j - m_j/m_i)` per pair.
fn multiplicity_form(m: &[Rat]) -> Vec<Rat> {
    let k = m.len();
    let mut out = vec![Rat::zero(); k * (k - 1) / 2];
    for i in 0..k {
        for j in i + 1..k {
            out[pair_index(k, i, j)] = (Rat::from_int(3) - &m[i] / &m[j] - &m[j] / &m[i]) / Rat::from_int(12);
        }
    }
    out
}

pub fn td_ratio_deg2(p: &SuiteParams) -> Checker {
    let samples = p.samples.unwrap_or(128);
    let max_k = p.max_n_or(6).max(2) as usize;
    let mut rng = rng(p);
    let mut c = Checker::new();
    for s in 0..samples {
        let k = rng.gen_range(2..=max_k);
        let m: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=9)).collect();
        let mq: Vec<Rat> = m.iter().map(|&x| Rat::from_int(x)).collect();
        let at = |what: &str| format!("sample {s}, m = {m:?}: {what}");
        let (deg1, expanded) = expansion_deg2(&mq);
        let want1: Vec<Rat> = mq.iter().map(|x| -(x - &Rat::one()) / Rat::from_int(2)).collect();
        c.check_eq(|| at("degree 1"), &want1, &deg1);
        c.check_eq(|| at("expansion vs normal-bundle form"), &normal_form(&mq), &expanded);
        c.check_eq(|| at("expansion vs multiplicity form"), &multiplicity_form(&mq), &expanded);
    }
    c
}

fn random_semistable(rng: &mut ChaCha8Rng, n: u32) -> StrataSpec {
    let k = rng.gen_range(1..=5usize);
    let components: Vec<Component> = (0..k)
        .map(|i| Component {
            id: format!("D{i}"),
            multiplicity: 1,
            chi_open: rng.gen_range(-20..=20),
            v: Some(0),
            normal_integral: None,
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(0.5) {
                pairs.push(Pair { i: format!("D{i}"), j: format!("D{j}"), chi_open: rng.gen_range(-12..=12) });
            }
        }
    }
    StrataSpec::new(n, components, pairs).expect("generated strata are well formed")
}

/// With `m = 1` and `v = 0` the boundary term is `(1/12) chi_top(D^2 - D^3)`.
pub fn cy_semistable(p: &SuiteParams) -> Checker {
    let samples = p.samples.unwrap_or(64);
    let mut rng = rng(p);
    let mut c = Checker::new();
    let mut fibers = Vec::new();
    for s in 0..samples {
        let n = rng.gen_range(2..=8);
        let spec = random_semistable(&mut rng, n);
        let double: i64 = spec.pairs.iter().map(|p| p.chi_open).sum();
        let want = Rat::new(double, 12);
        c.check_eq(|| format!("sample {s}: beta_x"), &want, &cy_beta_x(&spec).unwrap());
        c.check_eq(|| format!("sample {s}: alpha_x"), &want, &dnc_alpha_x(&spec).unwrap());
        if n == 4 {
            fibers.push(spec);
        }
    }
    // deg L = 0, so the alternating sum is the sum of the boundary terms
    let mut want_sum = Rat::zero();
    for f in &fibers {
        want_sum += cy_beta_x(f).unwrap();
    }
    c.check_eq(|| "alternating sum over N = 4 fibers".into(), &want_sum, &cy_alt_sum(&Rat::zero(), 0, &fibers).unwrap());
    c
}
