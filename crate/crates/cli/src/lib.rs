//! Command-line front end: class-expression evaluation, formula tables,
//! per-family computations and verification suites.

pub mod app;
pub mod expr;
pub mod table;
