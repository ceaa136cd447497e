use griffiths_cli::expr::{eval_class_expr, parse_class_expr, Expr, Func, Generator, Model};
use griffiths_core::Rat;
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..50, 1i64..6).prop_map(|(p, q)| Expr::Lit(Rat::new(p, q))),
        prop::sample::select(Generator::ALL.to_vec()).prop_map(Expr::Gen),
    ]
}

fn func() -> impl Strategy<Value = Func> {
    prop_oneof![
        Just(Func::C),
        (0u32..15).prop_map(Func::Ck),
        Just(Func::Td),
        Just(Func::Ch),
        Just(Func::Inv),
        Just(Func::Push),
        Just(Func::Integrate),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        prop_oneof![
            (func(), b()).prop_map(|(f, a)| Expr::Call(f, a)),
            b().prop_map(Expr::Neg),
            (b(), b()).prop_map(|(a, c)| Expr::Add(a, c)),
            (b(), b()).prop_map(|(a, c)| Expr::Sub(a, c)),
            (b(), b()).prop_map(|(a, c)| Expr::Mul(a, c)),
            (b(), -3i64..6).prop_map(|(a, k)| Expr::Pow(a, k)),
            (b(), -2i64..6).prop_map(|(a, k)| Expr::Component(a, k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_class_expr(&text).unwrap(), e.clone(), "printed as {}", text);
        let squeezed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_class_expr(&squeezed).unwrap(), e);
    }

    #[test]
    fn evaluation_is_deterministic(e in expr(), n in 1usize..4) {
        for model in [Model::Pn { n }, Model::Pe { n, d: Rat::from_int(2), degrees: Some((Rat::one(), Rat::one())) }] {
            prop_assert_eq!(eval_class_expr(&e, &model), eval_class_expr(&e, &model));
        }
    }

    #[test]
    fn parser_never_panics(s in "[hmexLOmTpicdtrnvuhsg0-9()\\[\\]^*+/ -]{0,24}") {
        let _ = parse_class_expr(&s);
    }
}

#[test]
fn operators_associate_to_the_left() {
    let e = parse_class_expr("h - m - e").unwrap();
    assert_eq!(e.to_string(), "h - m - e");
    let r = parse_class_expr("h - (m - e)").unwrap();
    assert_ne!(e, r);
    assert_eq!(r.to_string(), "h - (m - e)");
}

#[test]
fn the_documented_pushforward_expression() {
    let ast = parse_class_expr("push(((1 - c1(L))^-1 * c(Om))[4])").unwrap();
    let v = eval_class_expr(&ast, &"pe:3:2".parse().unwrap()).unwrap();
    assert_eq!(v.value.to_string(), "4m - 2e");
    assert!(v.notices.is_empty());
}
