//! Exact verification kernels for 3-groups acting on cubic surfaces and
//! Severi–Brauer surfaces.
//!
//! Everything here is exact: rationals, the Eisenstein field `Q(ω)`, integer
//! lattices and fully enumerated permutation groups. The modules build on one
//! another bottom-up:
//!
//! * [`exact`]: `Q`, `Q(ω)`, `Q(∛α)`, characteristic polynomials.
//! * [`permgroup`]: closure, conjugacy classes, centralizers, Sylow-3 tests.
//! * [`piclattice`]: the rank-7 Picard lattice, its 27 lines and sixers.
//! * [`weyl`]: `W(A₄)`, `W(D₅)`, `W(E₆)` and Carter typing.
//! * [`fermat`]: the Fermat cubic, its 648 automorphisms and the plane model.
//! * [`fieldlemmas`]: the small matrix, field and symbol-algebra checks.

pub mod error;
pub mod exact;
pub mod fermat;
pub mod fieldlemmas;
pub mod permgroup;
pub mod piclattice;
pub mod weyl;

pub use error::{Error, Result};
pub use exact::{CycNum, PolyCyc, RadCubicNum, Rat};
pub use fermat::{FermatAut, FermatLine, Marking, ProjPoint3};
pub use permgroup::{Perm, PermGroup};
pub use piclattice::{LineClass, LineTag, PicVec};
pub use weyl::{CarterType, WeylElem};
