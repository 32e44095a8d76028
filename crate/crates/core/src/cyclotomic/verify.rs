//! Symbolic checks relating `z`, the `p_k` and the image of the affine centre.

use crate::affine::{fv_of, is_central_affine, AffineElement, Variable, XMonomial, XPoly};
use crate::coeffring::{coeff_q_minus_one, CoeffPoly};
use crate::error::{Error, Result};

use super::centre::symmetric_coordinates;
use super::element::{CycloElement, RestrictedPoly};
use super::quotient::Quotient;

impl Quotient {
    /// `ψ(X1^n z)` for any integer `n`.
    pub fn x1_power_times_z(&self, n: i64) -> Result<CycloElement> {
        let power = self.reduce_poly(&XPoly::monomial(self.m(), n, 0))?;
        self.mul(&power, &CycloElement::from_poly(self.z()))
    }

    /// `ψ(X1^{k-1}) · z - p_k` for each `k = 0 … m-1`; all zero exactly when
    /// `p_k T = X1^{k-1} z T`.
    pub fn z_power_residuals(&self) -> Result<Vec<CycloElement>> {
        let basis = self.centre_t_basis()?;
        basis
            .into_iter()
            .enumerate()
            .map(|(k, p)| {
                self.x1_power_times_z(k as i64 - 1)?
                    .try_sub(&CycloElement::from_poly(p))
            })
            .collect()
    }

    pub fn verify_z_powers(&self) -> Result<bool> {
        Ok(self.z_power_residuals()?.iter().all(CycloElement::is_zero))
    }

    fn check_k(&self, k: i64) -> Result<()> {
        if !(0..self.m() as i64).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "k = {k} is outside 0..={}",
                self.m() - 1
            )));
        }
        Ok(())
    }

    /// Coefficients of `m_{j,m-1}`, `j = 0 … m-1`, in the expansion of the
    /// reduced `X1^{k-1} z` over the basis `{m_ij}`.
    pub fn leading_coefficient_profile(&self, k: i64) -> Result<Vec<CoeffPoly>> {
        self.check_k(k)?;
        let reduced = self.x1_power_times_z(k - 1)?;
        if !reduced.g.is_zero() {
            return Err(Error::Invariant(format!(
                "X1^{} z has a T component",
                k - 1
            )));
        }
        let coords = symmetric_coordinates(&reduced.f)?;
        let top = self.m() as i64 - 1;
        Ok((0..=top)
            .map(|j| {
                coords
                    .iter()
                    .find(|(ij, _)| *ij == (j, top))
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| CoeffPoly::zero(self.m()))
            })
            .collect())
    }

    /// `q (X1^k f_v(X2) + X2^k f_v(X1))`, a symmetric element of `S`.
    pub fn preimage(&self, k: i64) -> Result<AffineElement> {
        let m = self.m();
        let a = &fv_of(Variable::X2, m)?.shift(XMonomial::new(k, 0))
            + &fv_of(Variable::X1, m)?.shift(XMonomial::new(0, k));
        Ok(AffineElement::from_poly(a.scale(&CoeffPoly::q(m))))
    }

    /// `ψ(q(X1^k f_v(X2) + X2^k f_v(X1))) - Q ψ(X1^k z) T`, for any integer
    /// `k`.
    pub fn preimage_residual(&self, k: i64) -> Result<CycloElement> {
        let m = self.m();
        let lhs = self.reduce(&self.preimage(k)?)?;
        let qz = self.x1_power_times_z(k)?;
        let qz = CycloElement::new(
            RestrictedPoly::new(qz.f.as_poly().scale(&coeff_q_minus_one(m)?))?,
            RestrictedPoly::new(qz.g.as_poly().scale(&coeff_q_minus_one(m)?))?,
        )?;
        let rhs = self.mul(&qz, &self.t())?;
        lhs.try_sub(&rhs)
    }

    /// The reduced preimage equals `Q X1^k z T` and the preimage itself is
    /// central in the affine algebra.
    pub fn verify_preimage(&self, k: i64) -> Result<bool> {
        self.check_k(k)?;
        Ok(self.preimage_residual(k)?.is_zero() && is_central_affine(&self.preimage(k)?)?)
    }
}

pub fn verify_z_powers(m: usize) -> Result<bool> {
    Quotient::new(m)?.verify_z_powers()
}

pub fn verify_preimage(m: usize, k: i64) -> Result<bool> {
    Quotient::new(m)?.verify_preimage(k)
}

pub fn leading_coefficient_profile(m: usize, k: i64) -> Result<Vec<CoeffPoly>> {
    Quotient::new(m)?.leading_coefficient_profile(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_vector(m: usize, k: usize) -> Vec<CoeffPoly> {
        (0..m)
            .map(|j| {
                if j == k {
                    CoeffPoly::one(m)
                } else {
                    CoeffPoly::zero(m)
                }
            })
            .collect()
    }

    #[test]
    fn z_powers_small_ranks() {
        for m in 1..=4 {
            assert!(verify_z_powers(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn rank_one_z_power_is_e1_inverse_times_e1() {
        let quot = Quotient::new(1).unwrap();
        assert!(quot.x1_power_times_z(-1).unwrap() == quot.one());
    }

    #[test]
    fn profiles() {
        assert_eq!(
            leading_coefficient_profile(3, 1).unwrap(),
            unit_vector(3, 1)
        );
        assert_eq!(
            leading_coefficient_profile(3, 0).unwrap(),
            unit_vector(3, 0)
        );
        assert_eq!(
            leading_coefficient_profile(2, 1).unwrap(),
            unit_vector(2, 1)
        );
        assert!(leading_coefficient_profile(3, 3).is_err());
    }

    /// m = 2 hand oracle. z = X1 X2 - e2 = m11 - e2 m00, profile (0, 1).
    /// X1^{-1} = e2^{-1}(e1 - X1), and with X1^2 X2 = e1 X1 X2 - e2 X2,
    /// X1^{-1} z = X1 + X2 - e1 = m01 - e1 m00, profile (1, 0).
    #[test]
    fn rank_two_profile_oracle() {
        let m = 2;
        let quot = Quotient::new(m).unwrap();
        let e = |j| XPoly::constant(CoeffPoly::e(m, j));
        let z = quot.x1_power_times_z(0).unwrap();
        assert_eq!(z.f.as_poly(), &(&XPoly::monomial(m, 1, 1) - &e(2)));
        let x1_inv_z = quot.x1_power_times_z(-1).unwrap();
        let expected = &(&XPoly::x1(m) + &XPoly::x2(m)) - &e(1);
        assert_eq!(
            x1_inv_z,
            CycloElement::from_poly(RestrictedPoly::new(expected).unwrap())
        );
        assert_eq!(
            quot.leading_coefficient_profile(1).unwrap(),
            unit_vector(m, 1)
        );
        assert_eq!(
            quot.leading_coefficient_profile(0).unwrap(),
            unit_vector(m, 0)
        );
    }

    #[test]
    fn preimages() {
        assert!(verify_preimage(3, 0).unwrap());
        assert!(verify_preimage(1, 0).unwrap());
        assert!(verify_preimage(4, 3).unwrap());
        assert!(verify_preimage(2, 2).is_err());
    }

    #[test]
    fn preimages_outside_the_basis_range() {
        for m in 1..=3 {
            let quot = Quotient::new(m).unwrap();
            for k in [-2, -1, m as i64, m as i64 + 2] {
                assert!(quot.preimage_residual(k).unwrap().is_zero(), "m={m} k={k}");
            }
        }
    }
}
