//! Exact arithmetic: rationals, the Eisenstein field `Q(ω)`, pure cubic
//! extensions `Q(∛α)` and characteristic polynomials of small matrices.

mod cyc;
mod linalg;
mod radical;

pub use cyc::CycNum;
pub use linalg::{char_poly, det, mat_mul, nullspace, PolyCyc};
pub use radical::{is_rational_cube, RadCubicNum};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Builds the rational `n / 1`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Product of two Eisenstein numbers.
pub fn cyc_mul(x: &CycNum, y: &CycNum) -> CycNum {
    x * y
}

/// True iff `x` lies in `Q`, i.e. its `ω` coordinate vanishes.
pub fn cyc_is_rational(x: &CycNum) -> bool {
    x.is_rational()
}

/// `y³`, reduced modulo `x̄³ − α`.
pub fn rad_cube(y: &RadCubicNum) -> RadCubicNum {
    y.cube()
}

/// Trace of multiplication by `y` on the 3-dimensional extension.
pub fn rad_trace(y: &RadCubicNum) -> Rat {
    y.trace()
}
