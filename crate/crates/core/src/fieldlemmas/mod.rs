//! Small finite checks over `Q`, `Q(ω)` and `Q(∛α)`: diagonal exponent
//! quadruples, cubes in pure cubic fields, projective diagonal classes,
//! orbits in `(Z/pZ)*` and the degree-3 symbol algebra.

mod radical;
mod replemma;
mod small;
mod symbol;

pub use radical::{rad_cubic_classification, u_zero_cube_formula, RadCubicReport};
pub use replemma::{rep_lemma_check, ExponentQuad, RepLemmaReport};
pub use small::{pgl2_diagonal_check, prime_orbit_check, prime_orbit_sweep, Pgl2Report, PrimeSweep};
pub use symbol::{symbol_algebra_check, SymbolAlg, SymbolReport};
