//! Exact rationals, truncated series and polynomials, and the graded-ring interface.

pub mod coeffs;
pub mod multipoly;
pub mod rat;
pub mod ring;
pub mod series;

pub use coeffs::{frac_coeff, frac_coeff_closed, frac_coeff_residue};
pub use multipoly::{Monomial, MultiPoly};
pub use rat::{binomial, factorial, Rat};
pub use ring::{AmbientRing, TruncPolyRing};
pub use series::{series_invert, td_series, PowerSeries};
