//! The cyclotomic quotient `K = H / (f_v(X1))` of type `G(m,1,2)`.
//!
//! Elements are stored in the restricted normal form `f + g T`; the
//! [`Quotient`] object owns the rewrite data for a fixed rank and performs
//! reduction, multiplication and the centre construction.

mod centre;
mod element;
mod quotient;
mod verify;

pub use centre::{
    centre_t_basis, d_operator, monomial_symmetric, symmetric_coordinates, CentreBasis, PhiMatrix,
};
pub use element::{
    affine_json, poly_terms_json, CycloElement, CycloJson, RestrictedPoly, TermJson,
};
pub use quotient::{reduce_psi, Quotient};
pub use verify::{leading_coefficient_profile, verify_preimage, verify_z_powers};
