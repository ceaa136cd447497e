use std::fmt;

use griffiths_core::Rat;

/// Named generators. Which ones resolve depends on the model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    H,
    M,
    E,
    X,
    L,
    Om,
    Tpi,
}

impl Generator {
    pub const ALL: [Generator; 7] =
        [Generator::H, Generator::M, Generator::E, Generator::X, Generator::L, Generator::Om, Generator::Tpi];

    pub fn name(self) -> &'static str {
        match self {
            Generator::H => "h",
            Generator::M => "m",
            Generator::E => "e",
            Generator::X => "x",
            Generator::L => "L",
            Generator::Om => "Om",
            Generator::Tpi => "Tpi",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    /// Total Chern class.
    C,
    /// `c_k`; `c1(...)` parses to `Ck(1)`.
    Ck(u32),
    Td,
    Ch,
    Inv,
    Push,
    Integrate,
}

impl Func {
    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "c" => Func::C,
            "td" => Func::Td,
            "ch" => Func::Ch,
            "inv" => Func::Inv,
            "push" => Func::Push,
            "integrate" => Func::Integrate,
            _ => {
                let k = s.strip_prefix('c')?;
                if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) || (k.len() > 1 && k.starts_with('0')) {
                    return None;
                }
                Func::Ck(k.parse().ok()?)
            }
        })
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Func::C => f.write_str("c"),
            Func::Ck(k) => write!(f, "c{k}"),
            Func::Td => f.write_str("td"),
            Func::Ch => f.write_str("ch"),
            Func::Inv => f.write_str("inv"),
            Func::Push => f.write_str("push"),
            Func::Integrate => f.write_str("integrate"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Non-negative rational literal.
    Lit(Rat),
    Gen(Generator),
    Call(Func, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Component(Box<Expr>, i64),
}

// Binding strength, loosest first.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;
const POSTFIX: u8 = 4;
const ATOM: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => SUM,
            Expr::Mul(..) => PRODUCT,
            Expr::Neg(_) => UNARY,
            Expr::Pow(..) | Expr::Component(..) => POSTFIX,
            Expr::Lit(_) | Expr::Gen(_) | Expr::Call(..) => ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Lit(r) => write!(f, "{r}"),
            Expr::Gen(g) => f.write_str(g.name()),
            Expr::Call(func, arg) => {
                write!(f, "{func}(")?;
                arg.write_at(f, 0)?;
                f.write_str(")")
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.write_at(f, UNARY)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, SUM)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, PRODUCT)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, PRODUCT)?;
                f.write_str(" * ")?;
                b.write_at(f, UNARY)
            }
            // The grammar allows one exponent, then one selector, on an atom.
            Expr::Pow(a, k) => {
                a.write_at(f, ATOM)?;
                write!(f, "^{k}")
            }
            Expr::Component(a, k) => {
                match **a {
                    Expr::Pow(..) => a.write_at(f, POSTFIX)?,
                    _ => a.write_at(f, ATOM)?,
                }
                write!(f, "[{k}]")
            }
        }
    }
}

/// Prints with the fewest parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
