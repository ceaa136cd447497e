//! Evaluation of class expressions over a Chow model.
//!
//! Generators `L`, `Om` and `Tpi` denote bundles; everything else is a class.
//! Bundles support only `+`, `-` and the characteristic-class functions.

use std::fmt;
use std::str::FromStr;

use griffiths_core::chow::{curve_degree, pe_generators, pe_push, pn_chern_omega, pn_integrate};
use griffiths_core::charclass::{ch_of, kclass_combine, todd_of, Sign};
use griffiths_core::{AmbientRing, CurveClass, KClass, PEClass, PeRing, PnClass, PnRing, Rat};

use super::ast::{Expr, Func, Generator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for EvalError {}

fn err<T>(msg: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError(msg.into()))
}

/// Chow model an expression is evaluated in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    /// `P(E)` over a curve, fiber dimension `n`, relative degree `d`.
    /// `integrate` needs the degrees of `E` and `M`.
    Pe { n: usize, d: Rat, degrees: Option<(Rat, Rat)> },
    Pn { n: usize },
}

impl FromStr for Model {
    type Err = EvalError;

    /// `pe:N:d`, `pe:N:d:degE:degM` or `pn:n`.
    fn from_str(s: &str) -> Result<Self, EvalError> {
        let parts: Vec<&str> = s.split(':').collect();
        let dim = |t: &str| -> Result<usize, EvalError> {
            match t.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => err(format!("invalid dimension `{t}` in model `{s}`")),
            }
        };
        let rat = |t: &str| t.parse::<Rat>().map_err(|e| EvalError(format!("model `{s}`: {e}")));
        match parts.as_slice() {
            ["pn", n] => Ok(Model::Pn { n: dim(n)? }),
            ["pe", n, d] => Ok(Model::Pe { n: dim(n)?, d: rat(d)?, degrees: None }),
            ["pe", n, d, de, dm] => Ok(Model::Pe { n: dim(n)?, d: rat(d)?, degrees: Some((rat(de)?, rat(dm)?)) }),
            _ => err(format!("unknown model `{s}` (expected pe:N:d, pe:N:d:degE:degM or pn:n)")),
        }
    }
}

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalValue {
    Pe(PEClass),
    Pn(PnClass),
    Curve(CurveClass),
    Rat(Rat),
}

impl fmt::Display for EvalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalValue::Pe(a) => write!(f, "{a}"),
            EvalValue::Pn(a) => write!(f, "{a}"),
            EvalValue::Curve(a) => write!(f, "{a}"),
            EvalValue::Rat(a) => write!(f, "{a}"),
        }
    }
}

/// Value plus notices about out-of-range component selectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: EvalValue,
    pub notices: Vec<String>,
}

pub fn eval_class_expr(ast: &Expr, model: &Model) -> Result<Evaluation, EvalError> {
    match model {
        Model::Pe { n, d, degrees } => {
            let m = PeModel { ring: PeRing::new(*n), d: d.clone(), degrees: degrees.clone() };
            run(&m, ast)
        }
        Model::Pn { n } => run(&PnModel { ring: PnRing::new(*n) }, ast),
    }
}

fn run<M: ModelOps>(model: &M, ast: &Expr) -> Result<Evaluation, EvalError> {
    let mut ev = Evaluator { model, notices: Vec::new() };
    let v = ev.eval(ast)?;
    let value = match v {
        Value::Bundle(_) => return err("expression denotes a bundle; apply c, ck, td or ch to get a class"),
        Value::Class(a) => model.export(a),
        Value::Curve(c) => EvalValue::Curve(c),
        Value::Scalar(r) => EvalValue::Rat(r),
    };
    Ok(Evaluation { value, notices: ev.notices })
}

trait ModelOps {
    type R: AmbientRing;

    fn ring(&self) -> &Self::R;
    fn generator(&self, g: Generator) -> Result<Value<Self::R>, EvalError>;
    fn push(&self, a: &<Self::R as AmbientRing>::Elem) -> Result<CurveClass, EvalError>;
    fn integrate_class(&self, a: &<Self::R as AmbientRing>::Elem) -> Result<Rat, EvalError>;
    fn integrate_curve(&self, c: &CurveClass) -> Result<Rat, EvalError>;
    fn export(&self, a: <Self::R as AmbientRing>::Elem) -> EvalValue;
}

struct PeModel {
    ring: PeRing,
    d: Rat,
    degrees: Option<(Rat, Rat)>,
}

impl ModelOps for PeModel {
    type R = PeRing;

    fn ring(&self) -> &PeRing {
        &self.ring
    }

    fn generator(&self, g: Generator) -> Result<Value<PeRing>, EvalError> {
        let n = self.ring.n;
        let gens = pe_generators(n, &self.d);
        let rank = n as i64;
        let bundle = |total: PEClass| {
            KClass::new(self.ring, rank, total).map(Value::Bundle).map_err(|e| EvalError(e.to_string()))
        };
        match g {
            Generator::H => Ok(Value::Class(gens.h)),
            Generator::M => Ok(Value::Class(gens.m)),
            Generator::E => Ok(Value::Class(gens.e)),
            Generator::L => Ok(Value::Bundle(KClass::line_bundle(self.ring, &gens.c1_l))),
            Generator::Om => bundle(gens.c_omega_pi),
            Generator::Tpi => bundle(gens.c_t_pi),
            Generator::X => err("generator `x` is not in the pe model (use h)"),
        }
    }

    fn push(&self, a: &PEClass) -> Result<CurveClass, EvalError> {
        Ok(pe_push(a))
    }

    fn integrate_class(&self, a: &PEClass) -> Result<Rat, EvalError> {
        self.integrate_curve(&pe_push(a))
    }

    fn integrate_curve(&self, c: &CurveClass) -> Result<Rat, EvalError> {
        match &self.degrees {
            Some((de, dm)) => Ok(curve_degree(c, de, dm)),
            None => err("integrate in the pe model needs degrees: use pe:N:d:degE:degM"),
        }
    }

    fn export(&self, a: PEClass) -> EvalValue {
        EvalValue::Pe(a)
    }
}

struct PnModel {
    ring: PnRing,
}

impl ModelOps for PnModel {
    type R = PnRing;

    fn ring(&self) -> &PnRing {
        &self.ring
    }

    fn generator(&self, g: Generator) -> Result<Value<PnRing>, EvalError> {
        let n = self.ring.n;
        let x = PnClass::hyperplane(n);
        match g {
            Generator::X | Generator::H => Ok(Value::Class(x)),
            Generator::L => Ok(Value::Bundle(KClass::line_bundle(self.ring, &x))),
            Generator::Om => KClass::new(self.ring, n as i64, pn_chern_omega(n))
                .map(Value::Bundle)
                .map_err(|e| EvalError(e.to_string())),
            Generator::M | Generator::E | Generator::Tpi => {
                err(format!("generator `{}` is only defined in the pe model", g.name()))
            }
        }
    }

    fn push(&self, _: &PnClass) -> Result<CurveClass, EvalError> {
        err("push is only defined in the pe model")
    }

    fn integrate_class(&self, a: &PnClass) -> Result<Rat, EvalError> {
        Ok(pn_integrate(a))
    }

    fn integrate_curve(&self, _: &CurveClass) -> Result<Rat, EvalError> {
        err("curve classes do not occur in the pn model")
    }

    fn export(&self, a: PnClass) -> EvalValue {
        EvalValue::Pn(a)
    }
}

enum Value<R: AmbientRing> {
    Bundle(KClass<R>),
    Class(R::Elem),
    Curve(CurveClass),
    Scalar(Rat),
}

impl<R: AmbientRing> Value<R> {
    fn kind(&self) -> &'static str {
        match self {
            Value::Bundle(_) => "a bundle",
            Value::Class(_) => "a class",
            Value::Curve(_) => "a curve class",
            Value::Scalar(_) => "a scalar",
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

struct Evaluator<'m, M: ModelOps> {
    model: &'m M,
    notices: Vec<String>,
}

impl<M: ModelOps> Evaluator<'_, M> {
    fn ring(&self) -> &M::R {
        self.model.ring()
    }

    fn eval(&mut self, e: &Expr) -> Result<Value<M::R>, EvalError> {
        match e {
            Expr::Lit(r) => Ok(Value::Scalar(r.clone())),
            Expr::Gen(g) => self.model.generator(*g),
            Expr::Neg(a) => {
                let a = self.eval(a)?;
                self.binary(Op::Sub, Value::Scalar(Rat::zero()), a)
            }
            Expr::Add(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.binary(Op::Add, a, b)
            }
            Expr::Sub(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.binary(Op::Sub, a, b)
            }
            Expr::Mul(a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                self.binary(Op::Mul, a, b)
            }
            Expr::Pow(a, k) => {
                let a = self.eval(a)?;
                self.pow(a, *k)
            }
            Expr::Component(a, k) => {
                let a = self.eval(a)?;
                self.component(a, *k)
            }
            Expr::Call(f, a) => {
                let a = self.eval(a)?;
                self.call(*f, a)
            }
        }
    }

    fn binary(&self, op: Op, a: Value<M::R>, b: Value<M::R>) -> Result<Value<M::R>, EvalError> {
        let ring = self.ring();
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(match op {
                Op::Add => x + y,
                Op::Sub => x - y,
                Op::Mul => x * y,
            })),
            (Value::Bundle(x), Value::Bundle(y)) => self.bundle_op(op, &x, &y),
            // An integer next to a bundle is a trivial bundle of that rank.
            (Value::Scalar(s), Value::Bundle(y)) => {
                let x = self.trivial(&s, op)?;
                self.bundle_op(op, &x, &y)
            }
            (Value::Bundle(x), Value::Scalar(s)) => {
                let y = self.trivial(&s, op)?;
                self.bundle_op(op, &x, &y)
            }
            (Value::Bundle(_), other) | (other, Value::Bundle(_)) => {
                err(format!("cannot combine a bundle with {}; apply c, ck, td or ch first", other.kind()))
            }
            (Value::Curve(x), Value::Curve(y)) => Ok(Value::Curve(curve_op(op, &x, &y))),
            (Value::Scalar(s), Value::Curve(y)) => Ok(Value::Curve(curve_op(op, &lift_curve(&s), &y))),
            (Value::Curve(x), Value::Scalar(s)) => Ok(Value::Curve(curve_op(op, &x, &lift_curve(&s)))),
            (Value::Curve(_), Value::Class(_)) | (Value::Class(_), Value::Curve(_)) => {
                err("cannot combine a curve class with a class on the total space")
            }
            (x, y) => {
                let x = self.as_class(x);
                let y = self.as_class(y);
                Ok(Value::Class(match op {
                    Op::Add => ring.add(&x, &y),
                    Op::Sub => ring.sub(&x, &y),
                    Op::Mul => ring.mul(&x, &y),
                }))
            }
        }
    }

    fn trivial(&self, s: &Rat, op: Op) -> Result<KClass<M::R>, EvalError> {
        match (op, s.to_i64()) {
            (Op::Add | Op::Sub, Some(k)) if s.is_integer() => Ok(KClass::trivial(self.ring().clone(), k)),
            _ => err(format!("cannot combine the scalar {s} with a bundle")),
        }
    }

    fn bundle_op(&self, op: Op, x: &KClass<M::R>, y: &KClass<M::R>) -> Result<Value<M::R>, EvalError> {
        let sign = match op {
            Op::Add => Sign::Plus,
            Op::Sub => Sign::Minus,
            Op::Mul => return err("bundles support only + and -"),
        };
        kclass_combine(x, y, sign).map(Value::Bundle).map_err(|e| EvalError(e.to_string()))
    }

    fn as_class(&self, v: Value<M::R>) -> <M::R as AmbientRing>::Elem {
        match v {
            Value::Class(a) => a,
            Value::Scalar(s) => self.ring().scalar(&s),
            _ => unreachable!("callers exclude bundles and curve classes"),
        }
    }

    fn invert(&self, v: Value<M::R>) -> Result<Value<M::R>, EvalError> {
        match v {
            Value::Scalar(s) => s.recip().map(Value::Scalar).map_err(|e| EvalError(e.to_string())),
            Value::Class(a) => self
                .ring()
                .invert_unit(&a)
                .map(Value::Class)
                .map_err(|_| EvalError("cannot invert a class with zero constant term".into())),
            Value::Curve(c) => {
                // (c0 + n)^{-1} = c0^{-1} - n c0^{-2}, since n^2 = 0
                let inv0 = c.c0.recip().map_err(|_| EvalError("cannot invert a curve class with zero [C] part".into()))?;
                let nil = CurveClass::new(Rat::zero(), c.c_m.clone(), c.c_e.clone());
                Ok(Value::Curve(lift_curve(&inv0).sub(&nil.scale(&(&inv0 * &inv0)))))
            }
            Value::Bundle(_) => err("cannot invert a bundle"),
        }
    }

    fn pow(&self, v: Value<M::R>, k: i64) -> Result<Value<M::R>, EvalError> {
        if let Value::Bundle(_) = v {
            return err("bundles support only + and -");
        }
        let base = if k < 0 { self.invert(v)? } else { v };
        let e = u32::try_from(k.unsigned_abs()).map_err(|_| EvalError(format!("exponent {k} is too large")))?;
        Ok(match base {
            Value::Scalar(s) => Value::Scalar(s.pow(e as i64).expect("nonnegative exponent")),
            Value::Class(a) => Value::Class(self.ring().pow(&a, e)),
            Value::Curve(c) => {
                let mut acc = CurveClass::fundamental();
                for _ in 0..e {
                    acc = acc.mul(&c);
                }
                Value::Curve(acc)
            }
            Value::Bundle(_) => unreachable!(),
        })
    }

    fn component(&mut self, v: Value<M::R>, k: i64) -> Result<Value<M::R>, EvalError> {
        let ring = self.model.ring();
        let top = match &v {
            Value::Class(_) => ring.top_degree() as i64,
            Value::Curve(_) => 1,
            Value::Scalar(_) => 0,
            Value::Bundle(_) => return err("cannot take a component of a bundle; apply c first"),
        };
        if k < 0 || k > top {
            self.notices.push(format!("component [{k}] is outside degrees 0..={top}; using 0"));
        }
        let keep = |d: i64| d == k;
        Ok(match v {
            Value::Class(a) if (0..=top).contains(&k) => Value::Class(ring.component(&a, k as usize)),
            Value::Class(_) => Value::Class(ring.zero()),
            Value::Scalar(s) => Value::Scalar(if keep(0) { s } else { Rat::zero() }),
            Value::Curve(c) => Value::Curve(match k {
                0 => lift_curve(&c.c0),
                1 => CurveClass::new(Rat::zero(), c.c_m, c.c_e),
                _ => CurveClass::zero(),
            }),
            Value::Bundle(_) => unreachable!(),
        })
    }

    fn call(&self, f: Func, v: Value<M::R>) -> Result<Value<M::R>, EvalError> {
        match f {
            Func::C | Func::Ck(_) | Func::Td | Func::Ch => {
                let Value::Bundle(b) = v else {
                    return err(format!("{f} expects a bundle, got {}", v.kind()));
                };
                Ok(Value::Class(match f {
                    Func::C => b.total().clone(),
                    Func::Ck(k) => b.chern(k as i64),
                    Func::Td => todd_of(&b),
                    _ => ch_of(&b),
                }))
            }
            Func::Inv => self.invert(v),
            Func::Push => match v {
                Value::Class(a) => self.model.push(&a).map(Value::Curve),
                Value::Scalar(s) => self.model.push(&self.ring().scalar(&s)).map(Value::Curve),
                other => err(format!("push expects a class, got {}", other.kind())),
            },
            Func::Integrate => match v {
                Value::Class(a) => self.model.integrate_class(&a).map(Value::Scalar),
                Value::Scalar(s) => self.model.integrate_class(&self.ring().scalar(&s)).map(Value::Scalar),
                Value::Curve(c) => self.model.integrate_curve(&c).map(Value::Scalar),
                Value::Bundle(_) => err("integrate expects a class, got a bundle"),
            },
        }
    }
}

fn lift_curve(s: &Rat) -> CurveClass {
    CurveClass::fundamental().scale(s)
}

fn curve_op(op: Op, x: &CurveClass, y: &CurveClass) -> CurveClass {
    match op {
        Op::Add => x.add(y),
        Op::Sub => x.sub(y),
        Op::Mul => x.mul(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_class_expr;

    fn eval(text: &str, model: &str) -> Result<Evaluation, EvalError> {
        eval_class_expr(&parse_class_expr(text).unwrap(), &model.parse().unwrap())
    }

    fn show(text: &str, model: &str) -> String {
        eval(text, model).unwrap().value.to_string()
    }

    #[test]
    fn sigma_pushforward() {
        assert_eq!(show("push(((1 - c1(L))^-1 * c(Om))[4])", "pe:3:2"), "4m - 2e");
        assert_eq!(show("integrate(((1 - c1(L))^-1 * c(Om))[4])", "pe:3:2:0:1"), "4");
    }

    #[test]
    fn projective_space_examples() {
        assert_eq!(show("c(Om)[0]", "pn:2"), "1");
        assert_eq!(show("integrate((1 - 3*x)^-2 * c(Om))", "pn:2"), "12");
        assert_eq!(show("integrate(td(Om - Om + L)^3)", "pn:1"), "3/2");
    }

    #[test]
    fn bundle_arithmetic() {
        assert_eq!(show("c(Om) * c(L + L + L)", "pn:2"), "1 - 3*x^2");
        assert_eq!(show("c(L + L + L - 1 - Om)", "pn:2"), show("c(L)^3 * inv(c(Om))", "pn:2"));
        assert_eq!(show("ch(2 - L)", "pn:2"), "1 - x - 1/2*x^2");
    }

    #[test]
    fn out_of_range_component_is_zero_with_notice() {
        let r = eval("c(Om)[7]", "pn:2").unwrap();
        assert_eq!(r.value, EvalValue::Pn(PnClass::zero(2)));
        assert_eq!(r.notices.len(), 1);
    }

    #[test]
    fn errors() {
        assert!(eval("inv(x)", "pn:2").unwrap_err().0.contains("zero constant term"));
        assert!(eval("m", "pn:2").is_err());
        assert!(eval("push(x)", "pn:2").is_err());
        assert!(eval("integrate(h)", "pe:2:3").unwrap_err().0.contains("degE"));
        assert!(eval("L * L", "pn:2").is_err());
        assert!(eval("Om", "pn:2").is_err());
        assert!("pq:2".parse::<Model>().is_err());
        assert!("pe:0:2".parse::<Model>().is_err());
    }

    #[test]
    fn curve_inverse() {
        assert_eq!(show("(1 + push(h^2*e))^-1", "pe:2:1"), "[C] - e");
    }
}
