use griffiths_core::algebra::{AmbientRing, Monomial, MultiPoly, Rat, TruncPolyRing};
use griffiths_core::charclass::{ch_of, kclass_combine, phi_y_of, rho_of, todd_of, KClass, Sign};
use griffiths_core::chow::{pe_mul, pe_push, CurveClass, PEClass, PeRing};
use proptest::prelude::*;

const ARITY: usize = 2;
const BOUND: u32 = 4;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rat::new(p, q))
}

/// Homogeneous degree-`k` polynomial in two variables.
fn homogeneous(k: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(small_rat(), (k + 1) as usize).prop_map(move |cs| {
        let terms = cs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (Monomial::from_exponents(&[i as u32, k - i as u32]), c))
            .collect();
        MultiPoly::from_terms(ARITY, BOUND, terms)
    })
}

/// A K-class of rank `0..=3` with arbitrary graded Chern classes.
fn kclass() -> impl Strategy<Value = KClass<TruncPolyRing>> {
    (0i64..=3, homogeneous(1), homogeneous(2), homogeneous(3), homogeneous(4)).prop_map(|(rank, c1, c2, c3, c4)| {
        let ring = TruncPolyRing::new(ARITY, BOUND);
        KClass::from_chern(ring, rank, &[c1, c2, c3, c4])
    })
}

/// Chern data of an honest bundle: `c_k = 0` above the rank.
fn bundle() -> impl Strategy<Value = KClass<TruncPolyRing>> {
    kclass().prop_map(|k| {
        let ring = *k.ring();
        let chern: Vec<MultiPoly> =
            (1..=4).map(|i| if i <= k.rank() { k.chern(i) } else { ring.zero() }).collect();
        KClass::from_chern(ring, k.rank(), &chern)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn todd_is_multiplicative(a in kclass(), b in kclass()) {
        let ring = *a.ring();
        let s = kclass_combine(&a, &b, Sign::Plus).unwrap();
        prop_assert_eq!(todd_of(&s), ring.mul(&todd_of(&a), &todd_of(&b)));
    }

    #[test]
    fn ch_is_additive(a in kclass(), b in kclass()) {
        let ring = *a.ring();
        let s = kclass_combine(&a, &b, Sign::Plus).unwrap();
        prop_assert_eq!(ch_of(&s), ring.add(&ch_of(&a), &ch_of(&b)));
        let d = kclass_combine(&s, &b, Sign::Minus).unwrap();
        prop_assert_eq!(ch_of(&d), ch_of(&a));
    }

    #[test]
    fn dual_is_an_involution(a in kclass()) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        let ring = *a.ring();
        prop_assert_eq!(ch_of(&a.dual()), ring.flip_by_degree(&ch_of(&a)));
    }

    #[test]
    fn phi_at_minus_one_is_top_chern(a in bundle()) {
        let ring = *a.ring();
        let phi = phi_y_of(&a).unwrap();
        let at = griffiths_core::charclass::ypoly_eval(&ring, &phi, &-Rat::one());
        prop_assert_eq!(at, a.chern(a.rank()));
        prop_assert_eq!(phi.len() as i64, a.rank() + 1);
    }

    #[test]
    fn rho_of_a_line_bundle_is_shifted_todd(c in homogeneous(1)) {
        let ring = TruncPolyRing::new(ARITY, BOUND);
        let l = KClass::line_bundle(ring, &c);
        let want = griffiths_core::charclass::td_at(&ring, &ring.neg(&c));
        prop_assert_eq!(rho_of(&l).unwrap(), want);
    }
}

fn pe_class(n: usize) -> impl Strategy<Value = PEClass> {
    let len = n + 1;
    (
        prop::collection::vec(small_rat(), len),
        prop::collection::vec(small_rat(), len),
        prop::collection::vec(small_rat(), len),
    )
        .prop_map(move |(h, hm, he)| {
            let mut out = PEClass::zero(n);
            for i in 0..len {
                out = out
                    .add(&PEClass::h_pow(n, i).scale(&h[i]))
                    .add(&PEClass::h_pow_m(n, i).scale(&hm[i]))
                    .add(&PEClass::h_pow_e(n, i).scale(&he[i]));
            }
            out
        })
}

fn curve_class() -> impl Strategy<Value = CurveClass> {
    (small_rat(), small_rat(), small_rat()).prop_map(|(a, b, c)| CurveClass::new(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pe_ring_laws((a, b, c) in (1usize..=5).prop_flat_map(|n| (pe_class(n), pe_class(n), pe_class(n)))) {
        let ring = PeRing::new(a.fiber_dim());
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
    }

    #[test]
    fn projection_formula(b in (1usize..=4).prop_flat_map(pe_class), alpha in curve_class()) {
        let n = b.fiber_dim();
        let lhs = pe_push(&pe_mul(&PEClass::lift(n, &alpha), &b).unwrap());
        prop_assert_eq!(lhs, alpha.mul(&pe_push(&b)));
    }

    #[test]
    fn twist_by_a_line_bundle_preserves_relations(n in 1usize..=5, t in small_rat()) {
        // P(E) = P(E (x) M'): h' = h - t m, e' = e + (N+1) t m satisfies the same relation.
        let ring = PeRing::new(n);
        let h = PEClass::h_pow(n, 1);
        let m = PEClass::h_pow_m(n, 0);
        let e = PEClass::h_pow_e(n, 0);
        let h2 = ring.sub(&h, &m.scale(&t));
        let e2 = ring.add(&e, &m.scale(&(&t * &Rat::from_int(n as i64 + 1))));
        let top = ring.pow(&h2, n as u32 + 1);
        let rel = ring.mul(&ring.pow(&h2, n as u32), &e2);
        prop_assert!(ring.add(&top, &rel).is_zero());
        prop_assert_eq!(pe_push(&ring.pow(&h2, n as u32)), CurveClass::fundamental());
    }
}

#[test]
fn mismatched_fiber_dimensions_are_rejected() {
    assert!(pe_mul(&PEClass::h_pow(2, 1), &PEClass::h_pow(3, 1)).is_err());
}
