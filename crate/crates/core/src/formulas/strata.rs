use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::Rat;
use crate::error::{Error, Result};

/// Component `D_i` of a singular fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub id: String,
    pub multiplicity: u32,
    /// Euler characteristic of the open stratum of `D_i`.
    pub chi_open: i64,
    /// Coefficient of `D_i` in the relative canonical divisor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<i64>,
    /// `int_{D_i} c_1(N_i) c_{N-2}` of the dual log tangent bundle, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_integral: Option<i64>,
}

/// Double locus `D_ij`; stored with `i < j` in id order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pair {
    pub i: String,
    pub j: String,
    pub chi_open: i64,
}

/// Strata data of one singular fiber in a total space of dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrataSpec {
    pub n: u32,
    pub components: Vec<Component>,
    pub pairs: Vec<Pair>,
}

impl StrataSpec {
    /// Validates ids and multiplicities and normalizes pair order.
    pub fn new(n: u32, components: Vec<Component>, pairs: Vec<Pair>) -> Result<Self> {
        let mut ids = BTreeSet::new();
        for c in &components {
            if c.multiplicity < 1 {
                return Err(Error::Invalid(format!("component `{}` has multiplicity 0", c.id)));
            }
            if !ids.insert(c.id.clone()) {
                return Err(Error::Invalid(format!("duplicate component id `{}`", c.id)));
            }
        }
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(pairs.len());
        for p in pairs {
            for id in [&p.i, &p.j] {
                if !ids.contains(id) {
                    return Err(Error::Invalid(format!("pair refers to unknown component `{id}`")));
                }
            }
            if p.i == p.j {
                return Err(Error::Invalid(format!("pair ({}, {}) is not two distinct components", p.i, p.j)));
            }
            let (i, j) = if p.i < p.j { (p.i, p.j) } else { (p.j, p.i) };
            if !seen.insert((i.clone(), j.clone())) {
                return Err(Error::Invalid(format!("pair ({i}, {j}) listed twice")));
            }
            normalized.push(Pair { i, j, chi_open: p.chi_open });
        }
        normalized.sort_by(|a, b| (&a.i, &a.j).cmp(&(&b.i, &b.j)));
        Ok(StrataSpec { n, components, pairs: normalized })
    }

    fn multiplicities(&self) -> BTreeMap<&str, Rat> {
        self.components
            .iter()
            .map(|c| (c.id.as_str(), Rat::from_int(c.multiplicity as i64)))
            .collect()
    }

    /// `(1/12) sum_{i<j} (3 - m_i/m_j - m_j/m_i) chi(D_ij)`.
    fn pair_term(&self) -> Rat {
        let m = self.multiplicities();
        let s: Rat = self
            .pairs
            .iter()
            .map(|p| {
                let (mi, mj) = (&m[p.i.as_str()], &m[p.j.as_str()]);
                (Rat::from_int(3) - mi / mj - mj / mi) * Rat::from_int(p.chi_open)
            })
            .sum();
        s / Rat::from_int(12)
    }
}

/// Raw JSON document: `{"N": int, "fibers": [{"components": [...], "pairs": [...]}]}`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct StrataFile {
    #[serde(rename = "N")]
    pub n: u32,
    pub fibers: Vec<FiberJson>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FiberJson {
    pub components: Vec<Component>,
    #[serde(default)]
    pub pairs: Vec<Pair>,
}

impl StrataFile {
    pub fn into_specs(self) -> Result<Vec<StrataSpec>> {
        let n = self.n;
        self.fibers.into_iter().map(|f| StrataSpec::new(n, f.components, f.pairs)).collect()
    }
}

/// Localized term
/// `alpha_x = (N-1)/4 sum (m_i - 1) chi(D_i) + (1/12) sum_{i<j} (3 - m_i/m_j - m_j/m_i) chi(D_ij)`.
///
/// Fails when the result is not in `(1/12)Z`, which no geometric input produces.
pub fn dnc_alpha_x(strata: &StrataSpec) -> Result<Rat> {
    let k = Rat::new(strata.n as i64 - 1, 4);
    let comp: Rat = strata
        .components
        .iter()
        .map(|c| Rat::from_int((c.multiplicity as i64 - 1) * c.chi_open))
        .sum();
    let alpha = k * comp + strata.pair_term();
    if !alpha.in_twelfths() {
        return Err(Error::Invalid(format!("alpha_x = {alpha} is not in (1/12)Z; strata data is inconsistent")));
    }
    Ok(alpha)
}

/// Second form of `alpha_x`, built from the normal-bundle integrals:
/// `(1/12) sum [3(N-1)(m_i-1) chi(D_i) + n_i] + (1/4) sum_{i<j} chi(D_ij)`.
///
/// `None` unless every component carries `normal_integral`.
pub fn dnc_alpha_x_normal(strata: &StrataSpec) -> Option<Rat> {
    let n1 = strata.n as i64 - 1;
    let mut s = Rat::zero();
    for c in &strata.components {
        let ni = c.normal_integral?;
        s += Rat::from_int(3 * n1 * (c.multiplicity as i64 - 1) * c.chi_open + ni);
    }
    let pairs: i64 = strata.pairs.iter().map(|p| p.chi_open).sum();
    Some(s / Rat::from_int(12) + Rat::new(pairs, 4))
}

/// Boundary term
/// `beta_x = (1/12) sum [3(N-1)(m_i-1) - v_i] chi(D_i) + (1/12) sum_{i<j} (3 - m_i/m_j - m_j/m_i) chi(D_ij)`.
pub fn cy_beta_x(strata: &StrataSpec) -> Result<Rat> {
    let n1 = strata.n as i64 - 1;
    let mut s = Rat::zero();
    for c in &strata.components {
        let v = c
            .v
            .ok_or_else(|| Error::Invalid(format!("component `{}` has no v coefficient", c.id)))?;
        s += Rat::from_int((3 * n1 * (c.multiplicity as i64 - 1) - v) * c.chi_open);
    }
    Ok(s / Rat::from_int(12) + strata.pair_term())
}

/// `-(1/12) deg L chi(Y_eta) + sum_x beta_x`.
pub fn cy_alt_sum(deg_l: &Rat, chi_eta: i64, fibers: &[StrataSpec]) -> Result<Rat> {
    let mut total = -(deg_l * &Rat::from_int(chi_eta)) / Rat::from_int(12);
    for f in fibers {
        total += cy_beta_x(f)?;
    }
    Ok(total)
}

/// Strata of the fiber through one ordinary double point after blowing it up:
/// the exceptional divisor `E` with multiplicity 2 and the proper transform `W`.
pub fn odp_strata(n: u32, chi_e_open: i64, chi_pair: i64) -> StrataSpec {
    let comp = |id: &str, m: u32, chi: i64| Component {
        id: id.into(),
        multiplicity: m,
        chi_open: chi,
        v: None,
        normal_integral: None,
    };
    StrataSpec::new(
        n,
        vec![comp("E", 2, chi_e_open), comp("W", 1, 0)],
        vec![Pair { i: "W".into(), j: "E".into(), chi_open: chi_pair }],
    )
    .expect("well-formed strata")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(id: &str, m: u32, chi: i64, v: Option<i64>) -> Component {
        Component { id: id.into(), multiplicity: m, chi_open: chi, v, normal_integral: None }
    }

    fn pair(i: &str, j: &str, chi: i64) -> Pair {
        Pair { i: i.into(), j: j.into(), chi_open: chi }
    }

    #[test]
    fn alpha_examples() {
        let s = StrataSpec::new(3, vec![comp("E", 2, 1, None), comp("W", 1, 17, None)], vec![pair("E", "W", 2)]).unwrap();
        assert_eq!(dnc_alpha_x(&s).unwrap(), Rat::new(7, 12));
        let s = StrataSpec::new(4, vec![comp("A", 1, 3, None), comp("B", 1, -2, None)], vec![pair("B", "A", 5)]).unwrap();
        assert_eq!(dnc_alpha_x(&s).unwrap(), Rat::new(5, 12));
        let s = StrataSpec::new(3, vec![comp("A", 1, 4, None)], vec![]).unwrap();
        assert_eq!(dnc_alpha_x(&s).unwrap(), Rat::zero());
    }

    #[test]
    fn alpha_outside_twelfths_rejected() {
        let s = StrataSpec::new(3, vec![comp("A", 1, 0, None), comp("B", 5, 0, None)], vec![pair("A", "B", 1)]).unwrap();
        assert!(dnc_alpha_x(&s).is_err());
    }

    #[test]
    fn beta_examples() {
        let s = StrataSpec::new(3, vec![comp("A", 1, 9, Some(0)), comp("B", 1, 4, Some(0))], vec![pair("A", "B", 7)]).unwrap();
        assert_eq!(cy_beta_x(&s).unwrap(), Rat::new(7, 12));
        let s = StrataSpec::new(3, vec![comp("A", 2, 1, Some(3))], vec![]).unwrap();
        assert_eq!(cy_beta_x(&s).unwrap(), Rat::new(1, 4));
        let s = StrataSpec::new(3, vec![], vec![]).unwrap();
        assert_eq!(cy_beta_x(&s).unwrap(), Rat::zero());
        let s = StrataSpec::new(3, vec![comp("A", 2, 1, None)], vec![]).unwrap();
        assert!(cy_beta_x(&s).is_err());
    }

    #[test]
    fn alt_sum_adds_fibers() {
        let s = StrataSpec::new(3, vec![comp("A", 2, 1, Some(3))], vec![]).unwrap();
        let total = cy_alt_sum(&Rat::from_int(2), 24, &[s.clone(), s]).unwrap();
        assert_eq!(total, Rat::from_int(-4) + Rat::new(1, 2));
    }

    #[test]
    fn validation() {
        assert!(StrataSpec::new(3, vec![comp("A", 0, 1, None)], vec![]).is_err());
        assert!(StrataSpec::new(3, vec![comp("A", 1, 1, None), comp("A", 1, 1, None)], vec![]).is_err());
        assert!(StrataSpec::new(3, vec![comp("A", 1, 1, None)], vec![pair("A", "A", 1)]).is_err());
        assert!(StrataSpec::new(3, vec![comp("A", 1, 1, None)], vec![pair("A", "Z", 1)]).is_err());
        let two = vec![comp("A", 1, 1, None), comp("B", 1, 1, None)];
        assert!(StrataSpec::new(3, two.clone(), vec![pair("A", "B", 1), pair("B", "A", 1)]).is_err());
        let s = StrataSpec::new(3, two, vec![pair("B", "A", 1)]).unwrap();
        assert_eq!((s.pairs[0].i.as_str(), s.pairs[0].j.as_str()), ("A", "B"));
    }

    #[test]
    fn json_rejects_unknown_keys() {
        let good = r#"{"N": 3, "fibers": [{"components": [{"id": "E", "multiplicity": 2, "chi_open": 1}], "pairs": []}]}"#;
        let f: StrataFile = serde_json::from_str(good).unwrap();
        assert_eq!(f.into_specs().unwrap().len(), 1);
        let bad = r#"{"N": 3, "fibers": [{"components": [{"id": "E", "multiplicity": 2, "chi_open": 1, "colour": 1}]}]}"#;
        assert!(serde_json::from_str::<StrataFile>(bad).is_err());
        let bad_top = r#"{"N": 3, "fibers": [], "extra": 0}"#;
        assert!(serde_json::from_str::<StrataFile>(bad_top).is_err());
    }
}
