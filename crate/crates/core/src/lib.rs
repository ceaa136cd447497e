//! Exact intersection-theoretic computation of Griffiths heights for pencils
//! of hypersurfaces, with verification suites for the underlying identities.
//!
//! All arithmetic is over [`Rat`]; nothing is ever rounded.

pub mod algebra;
pub mod charclass;
pub mod chow;
pub mod error;
pub mod formulas;
pub mod pool;
pub mod verify;

pub use algebra::{AmbientRing, MultiPoly, PowerSeries, Rat, TruncPolyRing};
pub use charclass::KClass;
pub use chow::{CurveClass, PEClass, PeRing, PnClass, PnRing};
pub use error::{Error, Result};
pub use formulas::{HeightReport, PencilSpec, StrataSpec, Variant};
pub use verify::{run_suite, Report, Status};
