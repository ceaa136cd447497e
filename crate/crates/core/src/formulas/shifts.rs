use serde::Serialize;

use crate::algebra::Rat;

/// Critical-point coefficients `u^-_N, u^+_N` and pencil coefficients `v^-_N, v^+_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftCoeffs {
    pub u_minus: Rat,
    pub u_plus: Rat,
    pub v_minus: Rat,
    pub v_plus: Rat,
}

pub fn shift_coeffs(n: u32) -> ShiftCoeffs {
    assert!(n >= 1, "N must be positive");
    let n = n as i64;
    if n % 2 == 1 {
        ShiftCoeffs {
            u_minus: Rat::new(5 * n - 3, 24),
            u_plus: Rat::new(-(7 * n - 9), 24),
            v_minus: Rat::new(-5 * (n - 1), 24),
            v_plus: Rat::new(7 * (n - 1), 24),
        }
    } else {
        ShiftCoeffs {
            u_minus: Rat::new(n, 24),
            u_plus: Rat::new(n, 24),
            v_minus: Rat::new(n + 2, 24),
            v_plus: Rat::new(n + 2, 24),
        }
    }
}

/// Which pair of extensions an extension shift compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftVariant {
    /// Upper minus lower extension.
    PlusMinus,
    /// Semistable minus lower extension.
    StabMinus,
}

/// Height shift between extensions in degree `n` for a total dimension `N`
/// family with `sigma_count` non-degenerate critical points.
///
/// Nonzero only when `n = N - 1` and `N` is odd.
pub fn extension_shift(n: u32, big_n: u32, sigma_count: &Rat, variant: ShiftVariant) -> Rat {
    if big_n == 0 || n + 1 != big_n || big_n.is_multiple_of(2) {
        return Rat::zero();
    }
    let k = Rat::from_int(big_n as i64 - 1);
    let den = match variant {
        ShiftVariant::PlusMinus => 2,
        ShiftVariant::StabMinus => 4,
    };
    k * sigma_count / Rat::from_int(den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        let s3 = shift_coeffs(3);
        assert_eq!(s3.u_minus, Rat::new(1, 2));
        assert_eq!(s3.v_minus, Rat::new(-5, 12));
        assert_eq!(s3.v_plus, Rat::new(7, 12));
        let s2 = shift_coeffs(2);
        assert_eq!(s2.u_minus, Rat::new(1, 12));
        assert_eq!(s2.u_plus, Rat::new(1, 12));
        assert_eq!(s2.v_minus, Rat::new(1, 6));
        assert_eq!(s2.v_plus, Rat::new(1, 6));
    }

    #[test]
    fn shifts() {
        let twelve = Rat::from_int(12);
        assert_eq!(extension_shift(2, 3, &twelve, ShiftVariant::PlusMinus), twelve);
        assert_eq!(extension_shift(2, 3, &twelve, ShiftVariant::StabMinus), Rat::from_int(6));
        for n in 0..6 {
            assert!(extension_shift(n, 4, &twelve, ShiftVariant::PlusMinus).is_zero());
        }
        assert!(extension_shift(1, 3, &twelve, ShiftVariant::PlusMinus).is_zero());
    }
}
