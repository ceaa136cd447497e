//! Characteristic-class expressions: syntax tree, parser and evaluator.

pub mod ast;
pub mod eval;
pub mod parser;

pub use ast::{Expr, Func, Generator};
pub use eval::{eval_class_expr, EvalError, EvalValue, Evaluation, Model};
pub use parser::{parse_class_expr, ParseError};
