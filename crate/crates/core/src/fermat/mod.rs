//! The Fermat cubic `x³ + y³ + z³ + t³ = 0` over `Q(ω)`: lines, monomial
//! automorphisms, a marking onto the abstract lattice, and the plane model
//! with its six marked points.

mod aut;
mod lines;
mod marking;
mod plane;
mod poly;

use std::sync::OnceLock;

pub use aut::{
    a2_census, classify_eigen_exponents, fermat_aut_group, monomial_eigen_exponents, FermatAut,
};
pub use lines::{fermat_incidence, fermat_lines, lines_meet, meet_determinant, FermatLine, Pairing};
pub use marking::{adapted_marking, centralizer_of_b, embed_aut, embedded_group, find_marking, Marking};
pub use plane::{
    common_fixed_dimension, fixed_subspaces, matrix_b, matrix_c, plane_actions_check, plane_marked_points,
    projective_closure_order, veronese_det, PlaneReport, ProjPoint3,
};
pub use poly::Poly4;

use crate::piclattice::NUM_LINES;
use crate::weyl::CarterType;

pub fn eigen_type(g: &FermatAut) -> CarterType {
    g.eigen_type()
}

/// Cached Fermat line incidence.
pub(crate) fn incidence() -> &'static [[bool; NUM_LINES]; NUM_LINES] {
    static ADJ: OnceLock<[[bool; NUM_LINES]; NUM_LINES]> = OnceLock::new();
    ADJ.get_or_init(fermat_incidence)
}
