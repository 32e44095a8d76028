//! The affine Hecke algebra of rank 2 over the coefficient ring.
//!
//! Elements are kept in Bernstein normal form `f + g T` with `f, g` Laurent
//! polynomials in `X1, X2`; see [`AffineElement::try_mul`] for the product.

mod element;
mod operators;
mod poly;
mod symmetric;

pub use element::{affine_mul, AffineElement};
pub use operators::{diff_d, diff_ds};
pub use poly::{XMonomial, XPoly};
pub use symmetric::{
    complete_symmetric, eh_identity_check, elementary_in_x, fv_of, z_element, Variable,
};

use crate::coeffring::{coeff_q_minus_one, CoeffPoly};
use crate::error::{check_rank, Error, Result};

/// `T X1^k T - (q X2^k - Q X1 X2 H_{k-2} T)`; zero exactly when the identity
/// holds.
pub fn braid_power_residual(m: usize, k: i64) -> Result<AffineElement> {
    check_rank(m)?;
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "the T X1^k T identity needs k >= 2, got {k}"
        )));
    }
    let t = AffineElement::t(m);
    let lhs = t
        .try_mul(&AffineElement::from_poly(XPoly::monomial(m, k, 0)))?
        .try_mul(&t)?;
    let big_q = coeff_q_minus_one(m)?;
    let rhs = AffineElement {
        f: XPoly::monomial(m, 0, k).scale(&CoeffPoly::q(m)),
        g: complete_symmetric(m, k - 2)?
            .shift(XMonomial::new(1, 1))
            .scale(&-big_q),
    };
    lhs.try_sub(&rhs)
}

/// `T X1^k T = q X2^k - Q (X1 X2) H_{k-2} T` for `k ≥ 2`.
pub fn verify_braid_power(k: i64) -> Result<bool> {
    Ok(braid_power_residual(1, k)?.is_zero())
}

/// `q f_v(X2) - T f_v(X1) T - Q z T`.
pub fn fv_conjugation_residual(m: usize) -> Result<AffineElement> {
    check_rank(m)?;
    let t = AffineElement::t(m);
    let f2 = t
        .try_mul(&AffineElement::from_poly(fv_of(Variable::X1, m)?))?
        .try_mul(&t)?;
    let lhs = AffineElement::from_poly(fv_of(Variable::X2, m)?.scale(&CoeffPoly::q(m)));
    let qzt = AffineElement::times_t(z_element(m)?.scale(&coeff_q_minus_one(m)?));
    lhs.try_sub(&f2)?.try_sub(&qzt)
}

/// `q f_v(X2) = f_2 + Q z T` with `f_2 = T f_v(X1) T`.
pub fn verify_fv_conjugation(m: usize) -> Result<bool> {
    Ok(fv_conjugation_residual(m)?.is_zero())
}

/// Whether `a` commutes with `T` and `X1` (and hence with the whole algebra,
/// as `X2 = q^{-1} T X1 T`).
pub fn is_central_affine(a: &AffineElement) -> Result<bool> {
    let m = a.m();
    Ok(a.commutator(&AffineElement::t(m))?.is_zero()
        && a.commutator(&AffineElement::x1(m))?.is_zero())
}
