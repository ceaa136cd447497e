//! Closed-form evaluators for heights, critical-point counts and localized terms.

pub mod heights;
pub mod pencils;
pub mod shifts;
pub mod strata;
pub mod structural;

pub use heights::{pe_pencil_report, F_heights, FHeights, HeightReport, PencilSpec, Variant};
pub use pencils::{lefschetz_report, linear_pencil_report, LinearReport};
pub use shifts::{extension_shift, shift_coeffs, ShiftCoeffs, ShiftVariant};
pub use strata::{cy_alt_sum, cy_beta_x, dnc_alpha_x, dnc_alpha_x_normal, Component, Pair, StrataFile, StrataSpec};
pub use structural::{structural_coeffs, StructuralCoeffs};
