use serde::{Deserialize, Serialize};

use super::shifts::shift_coeffs;
use crate::algebra::Rat;
use crate::chow::{curve_degree, CurveClass};
use crate::error::{Error, Result};

/// Which extension of the Hodge bundles a height refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plus,
    Minus,
    Stab,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(Variant::Plus),
            "minus" => Ok(Variant::Minus),
            "stab" => Ok(Variant::Stab),
            _ => Err(Error::Parse(format!("unknown variant `{s}` (expected plus, minus or stab)"))),
        }
    }
}

/// Pencil of relative-degree-`d` hypersurfaces in `P(E)` over a curve, `rank E = N + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilSpec {
    pub n: u32,
    pub d: u32,
    pub deg_e: Rat,
    pub deg_m: Rat,
    pub variant: Variant,
}

impl PencilSpec {
    pub fn new(n: u32, d: u32, deg_e: Rat, deg_m: Rat, variant: Variant) -> Result<Self> {
        if n < 1 || d < 1 {
            return Err(Error::Invalid(format!("need N >= 1 and d >= 1, got N = {n}, d = {d}")));
        }
        Ok(PencilSpec { n, d, deg_e, deg_m, variant })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FHeights {
    pub f_plus: Rat,
    pub f_minus: Rat,
    pub f_stab: Rat,
}

impl FHeights {
    pub fn get(&self, v: Variant) -> &Rat {
        match v {
            Variant::Plus => &self.f_plus,
            Variant::Minus => &self.f_minus,
            Variant::Stab => &self.f_stab,
        }
    }
}

/// Height multipliers `F_+(d, N)`, `F_-(d, N)`, `F_stab(d, N)`.
#[allow(non_snake_case)]
pub fn F_heights(d: u32, n: u32) -> FHeights {
    assert!(d >= 1 && n >= 1, "need d >= 1 and N >= 1");
    let (di, ni) = (d as i64, n as i64);
    let dq = Rat::from_int(di);
    let nq = Rat::from_int(ni);
    let pre = Rat::from_int(ni + 1) / (Rat::from_int(24) * &dq * &dq);
    let dm1n = Rat::from_int(di - 1).pow(ni).unwrap();
    let d2 = &dq * &dq;
    let tail = Rat::from_int(2) * (&d2 - &Rat::one());
    let lin = Rat::from_int(2) * &dq * &nq + Rat::from_int(2);
    let eval = |bracket: Rat, sign: i64| &pre * &(&dm1n * &bracket + &tail * &Rat::from_int(sign));
    let out = if n % 2 == 1 {
        let d2n1 = &d2 * &(&nq - &Rat::one());
        FHeights {
            f_plus: eval(Rat::from_int(7) * &d2n1 - &lin, 1),
            f_minus: eval(Rat::from_int(-5) * &d2n1 - &lin, 1),
            f_stab: eval(d2n1 - &lin, 1),
        }
    } else {
        let f = eval(&d2 * &(&nq + &Rat::from_int(2)) - &lin, -1);
        FHeights { f_plus: f.clone(), f_minus: f.clone(), f_stab: f }
    };
    for v in [&out.f_plus, &out.f_minus, &out.f_stab] {
        assert!(v.in_twelfths(), "F({d}, {n}) = {v} is not in (1/12)Z");
    }
    out
}

/// Heights of the middle cohomology of a pencil in `P(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightReport {
    pub ht_int: Rat,
    pub sigma_count: Rat,
    pub ht_plus: Rat,
    pub ht_minus: Rat,
    pub ht_stab: Rat,
    /// `f_*[Sigma]` in `CH^1(C)`.
    pub sigma_class: CurveClass,
    pub curve_class_plus: CurveClass,
    pub curve_class_minus: CurveClass,
    pub warnings: Vec<String>,
}

impl HeightReport {
    pub fn height(&self, v: Variant) -> &Rat {
        match v {
            Variant::Plus => &self.ht_plus,
            Variant::Minus => &self.ht_minus,
            Variant::Stab => &self.ht_stab,
        }
    }
}

/// `m - d/(N+1) e`.
pub fn ht_int_class(n: u32, d: u32) -> CurveClass {
    CurveClass::new(Rat::zero(), Rat::one(), Rat::new(-(d as i64), n as i64 + 1))
}

/// `(d-1)^N ((N+1) m - d e)`.
pub fn sigma_curve_class(n: u32, d: u32) -> CurveClass {
    let k = Rat::from_int(d as i64 - 1).pow(n as i64).unwrap();
    CurveClass::new(Rat::zero(), Rat::from_int(n as i64 + 1), Rat::from_int(-(d as i64))).scale(&k)
}

pub fn pe_pencil_report(spec: &PencilSpec) -> HeightReport {
    let f = F_heights(spec.d, spec.n);
    let base = ht_int_class(spec.n, spec.d);
    let ht_int = curve_degree(&base, &spec.deg_e, &spec.deg_m);
    let sigma_class = sigma_curve_class(spec.n, spec.d);
    let sigma_count = curve_degree(&sigma_class, &spec.deg_e, &spec.deg_m);
    let mut warnings = Vec::new();
    if let Some(w) = sigma_warning(&sigma_count) {
        warnings.push(w);
    }
    HeightReport {
        ht_plus: &f.f_plus * &ht_int,
        ht_minus: &f.f_minus * &ht_int,
        ht_stab: &f.f_stab * &ht_int,
        curve_class_plus: base.scale(&f.f_plus),
        curve_class_minus: base.scale(&f.f_minus),
        ht_int,
        sigma_count,
        sigma_class,
        warnings,
    }
}

/// Diagnostic when a critical-point count is not a non-negative integer.
pub fn sigma_warning(sigma: &Rat) -> Option<String> {
    if sigma.is_integer() && !sigma.is_negative() {
        None
    } else {
        Some(format!("sigma_count = {sigma} is not a non-negative integer; inputs are not geometric"))
    }
}

/// `F_+` recomputed from its pushforward ingredients:
/// `(N+1)/(12 d^2) (-(d-1)^N (dN+1) + (-1)^N) - (-1)^N (N+1)/12 + v (N+1)(d-1)^N`.
pub fn f_from_ingredients(d: u32, n: u32, v: &Rat) -> Rat {
    let (di, ni) = (d as i64, n as i64);
    let dm1n = Rat::from_int(di - 1).pow(ni).unwrap();
    let sgn = Rat::sign_pow(ni);
    let a = Rat::from_int(ni + 1) / Rat::from_int(12 * di * di)
        * (-(&dm1n * &Rat::from_int(di * ni + 1)) + &sgn);
    let b = &sgn * &Rat::new(ni + 1, 12);
    a - b + v * &Rat::from_int(ni + 1) * &dm1n
}

/// `v^+_N` or `v^-_N`; the stable variant has no `v` of its own.
pub fn v_coeff(n: u32, variant: Variant) -> Option<Rat> {
    let s = shift_coeffs(n);
    match variant {
        Variant::Plus => Some(s.v_plus),
        Variant::Minus => Some(s.v_minus),
        Variant::Stab => None,
    }
}
