//! Chow rings of a projective bundle over a curve and of projective space.

pub mod curve;
pub mod pe;
pub mod pn;

pub use curve::{curve_degree, CurveClass};
pub use pe::{pe_generators, pe_mul, pe_push, PEClass, PeGenerators, PeRing};
pub use pn::{pn_chern_omega, pn_integrate, PnClass, PnRing};
