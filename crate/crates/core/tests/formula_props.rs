use griffiths_core::algebra::Rat;
use griffiths_core::chow::{pn_chern_omega, PnClass};
use griffiths_core::formulas::strata::odp_strata;
use griffiths_core::formulas::structural::{alpha_nr, beta_closed, beta_from_alpha};
use griffiths_core::formulas::{
    dnc_alpha_x, extension_shift, lefschetz_report, linear_pencil_report, pe_pencil_report, shift_coeffs,
    F_heights, PencilSpec, ShiftVariant, StrataFile, Variant,
};
use proptest::prelude::*;

fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

proptest! {
    #[test]
    fn f_values_are_twelfths(d in 1u32..=40, n in 1u32..=40) {
        let f = F_heights(d, n);
        for v in [&f.f_plus, &f.f_minus, &f.f_stab] {
            prop_assert!(v.in_twelfths());
        }
    }

    #[test]
    fn f_variants_differ_by_extension_shifts(d in 1u32..=30, n in 1u32..=30) {
        let f = F_heights(d, n);
        let sigma = q(n as i64 + 1) * q(d as i64 - 1).pow(n as i64).unwrap();
        let pm = extension_shift(n - 1, n, &sigma, ShiftVariant::PlusMinus);
        let sm = extension_shift(n - 1, n, &sigma, ShiftVariant::StabMinus);
        prop_assert_eq!(&f.f_plus - &f.f_minus, pm);
        prop_assert_eq!(&f.f_stab - &f.f_minus, sm);
    }

    #[test]
    fn v_is_shifted_u(n in 1u32..=200) {
        let s = shift_coeffs(n);
        let sg = Rat::sign_pow(n as i64);
        prop_assert_eq!(&sg * &s.u_minus + Rat::new(1, 12), s.v_minus);
        prop_assert_eq!(&sg * &s.u_plus + Rat::new(1, 12), s.v_plus);
    }

    #[test]
    fn u_minus_closed_form(n in 1u32..=200) {
        let ni = n as i64;
        let want = (q(4 * ni - 3) * (Rat::one() - Rat::sign_pow(ni)) + q(2 * ni)) / q(48);
        prop_assert_eq!(shift_coeffs(n).u_minus, want);
    }

    #[test]
    fn extension_shift_is_local_to_the_middle_degree(n in 0u32..=20, big_n in 1u32..=20, s in -50i64..50) {
        let v = extension_shift(n, big_n, &q(s), ShiftVariant::PlusMinus);
        if n + 1 != big_n || big_n % 2 == 0 {
            prop_assert!(v.is_zero());
        } else {
            prop_assert_eq!(v, Rat::new((big_n as i64 - 1) * s, 2));
        }
    }

    #[test]
    fn pencil_heights_are_linear_in_degrees(n in 1u32..=8, d in 1u32..=8, de in -5i64..=5, dm in -5i64..=5) {
        let r = pe_pencil_report(&PencilSpec::new(n, d, q(de), q(dm), Variant::Plus).unwrap());
        let f = F_heights(d, n);
        let ht_int = q(dm) - Rat::new(d as i64 * de, n as i64 + 1);
        prop_assert_eq!(&r.ht_int, &ht_int);
        prop_assert_eq!(&r.ht_plus, &(&f.f_plus * &ht_int));
        prop_assert_eq!(&r.ht_minus, &(&f.f_minus * &ht_int));
        prop_assert_eq!(&r.ht_stab, &(&f.f_stab * &ht_int));
        let sigma = q(d as i64 - 1).pow(n as i64).unwrap() * (q((n as i64 + 1) * dm) - q(d as i64 * de));
        prop_assert_eq!(r.sigma_count, sigma);
    }

    #[test]
    fn lefschetz_pencils_of_plane_curves(delta in 1i64..=30) {
        let c1 = PnClass::hyperplane(2).scale(&q(delta));
        let r = lefschetz_report(2, &pn_chern_omega(2), &c1).unwrap();
        prop_assert_eq!(r.sigma_count, q(3 * (delta - 1) * (delta - 1)));
    }

    #[test]
    fn hypersurface_pencils_count_critical_points(n in 1usize..=7, d in 1i64..=9) {
        let c1 = PnClass::hyperplane(n).scale(&q(d));
        let r = linear_pencil_report(&pn_chern_omega(n), &c1, 1, n).unwrap();
        prop_assert_eq!(r.sigma_count, q(n as i64 + 1) * q(d - 1).pow(n as i64).unwrap());
        prop_assert_eq!(r.chi_top, q(n as i64 + 1));
    }
}

#[test]
fn beta_expressions_agree() {
    for n in 1..=50 {
        assert_eq!(beta_closed(n), beta_from_alpha(n), "N = {n}");
        assert!(alpha_nr(n, n.saturating_sub(1)).is_integer());
    }
}

#[test]
fn ordinary_double_point_localized_term() {
    for n in 1..=30u32 {
        let ni = n as i64;
        let chi_q = (Rat::sign_pow(ni) + q(2 * ni - 1)) / q(2);
        let chi_q = chi_q.to_i64().unwrap();
        let alpha = dnc_alpha_x(&odp_strata(n, ni - chi_q, chi_q)).unwrap();
        let want = (q(6 * ni - 7) * (Rat::one() - Rat::sign_pow(ni)) + q(2 * ni)) / q(48);
        assert_eq!(alpha, want, "N = {n}");
    }
}

#[test]
fn strata_json_round_trips() {
    let doc = r#"{"N": 3, "fibers": [
        {"components": [{"id": "A", "multiplicity": 2, "chi_open": 4, "v": 1},
                        {"id": "B", "multiplicity": 1, "chi_open": -2, "v": 0}],
         "pairs": [{"i": "B", "j": "A", "chi_open": 2}]}
    ]}"#;
    let file: StrataFile = serde_json::from_str(doc).unwrap();
    let again: StrataFile = serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
    let specs = file.into_specs().unwrap();
    assert_eq!(specs, again.into_specs().unwrap());
    assert_eq!((specs[0].pairs[0].i.as_str(), specs[0].pairs[0].j.as_str()), ("A", "B"));
}
