use std::fmt;

use serde::Serialize;

use crate::algebra::Rat;

/// Element `c0 [C] + c_m m + c_e e` of the rational Chow ring of the base curve.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub struct CurveClass {
    pub c0: Rat,
    pub c_m: Rat,
    pub c_e: Rat,
}

impl CurveClass {
    pub fn new(c0: Rat, c_m: Rat, c_e: Rat) -> Self {
        CurveClass { c0, c_m, c_e }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn fundamental() -> Self {
        CurveClass::new(Rat::one(), Rat::zero(), Rat::zero())
    }

    pub fn m() -> Self {
        CurveClass::new(Rat::zero(), Rat::one(), Rat::zero())
    }

    pub fn e() -> Self {
        CurveClass::new(Rat::zero(), Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c_m.is_zero() && self.c_e.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        CurveClass::new(&self.c0 + &o.c0, &self.c_m + &o.c_m, &self.c_e + &o.c_e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        CurveClass::new(&self.c0 * c, &self.c_m * c, &self.c_e * c)
    }

    /// Product in `CH^*(C)`, where any two degree-1 classes multiply to zero.
    pub fn mul(&self, o: &Self) -> Self {
        CurveClass::new(
            &self.c0 * &o.c0,
            &self.c0 * &o.c_m + &self.c_m * &o.c0,
            &self.c0 * &o.c_e + &self.c_e * &o.c0,
        )
    }
}

/// Degree of the `CH^1` part: `c_m deg M + c_e deg E`. The `c0` part is ignored.
pub fn curve_degree(cc: &CurveClass, deg_e: &Rat, deg_m: &Rat) -> Rat {
    &cc.c_m * deg_m + &cc.c_e * deg_e
}

impl fmt::Display for CurveClass {
    /// Renders like `4m - 2e`, `[C] + (1/2)m`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [(&self.c0, "[C]"), (&self.c_m, "m"), (&self.c_e, "e")];
        let mut first = true;
        for (c, sym) in parts {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            write!(f, "{sym}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn degree_examples() {
        let d = 3;
        let n = 2;
        let cc = CurveClass::new(q(0), q(1), Rat::new(-d, n + 1));
        assert_eq!(curve_degree(&cc, &q(0), &q(1)), q(1));
        assert_eq!(curve_degree(&CurveClass::zero(), &q(5), &q(7)), q(0));
        assert_eq!(curve_degree(&CurveClass::new(q(0), q(4), q(-2)), &q(1), &q(1)), q(2));
    }

    #[test]
    fn display() {
        assert_eq!(CurveClass::new(q(0), q(4), q(-2)).to_string(), "4m - 2e");
        assert_eq!(CurveClass::zero().to_string(), "0");
        assert_eq!(CurveClass::new(q(1), Rat::new(1, 2), q(0)).to_string(), "[C] + (1/2)m");
        assert_eq!(CurveClass::new(q(0), q(0), q(-1)).to_string(), "-e");
    }
}
