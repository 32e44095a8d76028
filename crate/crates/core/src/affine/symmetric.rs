//! Symmetric-function utilities in `X1, X2` and the distinguished polynomials
//! `f_v(X)` and `z`.

use crate::coeffring::{sign, CoeffPoly};
use crate::error::{check_rank, Error, Result};

use super::poly::{XMonomial, XPoly};

/// Which of the two Laurent variables a univariate polynomial is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    X1,
    X2,
}

impl Variable {
    fn power(self, k: i64) -> XMonomial {
        match self {
            Variable::X1 => XMonomial::new(k, 0),
            Variable::X2 => XMonomial::new(0, k),
        }
    }
}

/// `H_k = Σ_{j=0}^{k} X1^j X2^{k-j}`.
pub fn complete_symmetric(m: usize, k: i64) -> Result<XPoly> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!(
            "complete symmetric degree must be non-negative, got {k}"
        )));
    }
    let mut out = XPoly::zero(m);
    for j in 0..=k {
        out.add_term(XMonomial::new(j, k - j), CoeffPoly::one(m));
    }
    Ok(out)
}

/// `f_v(x) = Σ_{j=0}^{m} (-1)^{m-j} e_{m-j} x^j`, evaluated at `X1` or `X2`.
pub fn fv_of(variable: Variable, m: usize) -> Result<XPoly> {
    check_rank(m)?;
    let mut out = XPoly::zero(m);
    for j in 0..=m {
        let c = CoeffPoly::e(m, m - j).scale(&sign((m - j) as i64));
        out.add_term(variable.power(j as i64), c);
    }
    Ok(out)
}

/// `z = (-1)^{m+1} e_m + X1 X2 Σ_{j=0}^{m-2} (-1)^j e_j H_{m-2-j}`, the
/// symmetric restricted polynomial with `q f_v(X2) = T f_v(X1) T + Q z T`.
pub fn z_element(m: usize) -> Result<XPoly> {
    check_rank(m)?;
    let mut out = XPoly::constant(CoeffPoly::e(m, m).scale(&sign(m as i64 + 1)));
    let x1x2 = XMonomial::new(1, 1);
    for j in 0..m.saturating_sub(1) {
        let h = complete_symmetric(m, (m - 2 - j) as i64)?;
        let c = CoeffPoly::e(m, j).scale(&sign(j as i64));
        out = &out + &h.shift(x1x2).scale(&c);
    }
    Ok(out)
}

/// Elementary symmetric polynomial of degree `k` in `X1, X2`.
pub fn elementary_in_x(m: usize, k: i64) -> XPoly {
    match k {
        0 => XPoly::one(m),
        1 => &XPoly::x1(m) + &XPoly::x2(m),
        2 => XPoly::monomial(m, 1, 1),
        _ => XPoly::zero(m),
    }
}

/// Checks `Σ_{r=0}^{n} (-1)^r e_{n-r} H_r = 0` with both families taken in the
/// variables `X1, X2`.
pub fn eh_identity_check(n: i64) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "n must be positive, got {n}"
        )));
    }
    let m = 1;
    let mut acc = XPoly::zero(m);
    for r in 0..=n {
        let term = &elementary_in_x(m, n - r) * &complete_symmetric(m, r)?;
        acc = &acc + &term.scale(&CoeffPoly::constant(m, sign(r)));
    }
    Ok(acc.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(m: usize, j: usize) -> CoeffPoly {
        CoeffPoly::e(m, j)
    }

    #[test]
    fn complete_symmetric_examples() {
        let m = 2;
        assert_eq!(complete_symmetric(m, 0).unwrap(), XPoly::one(m));
        assert_eq!(
            complete_symmetric(m, 1).unwrap(),
            &XPoly::x1(m) + &XPoly::x2(m)
        );
        let h2 =
            &(&XPoly::monomial(m, 2, 0) + &XPoly::monomial(m, 1, 1)) + &XPoly::monomial(m, 0, 2);
        assert_eq!(complete_symmetric(m, 2).unwrap(), h2);
        assert!(complete_symmetric(m, -1).is_err());
    }

    #[test]
    fn fv_examples() {
        let m = 1;
        assert_eq!(
            fv_of(Variable::X1, m).unwrap(),
            &XPoly::x1(m) - &XPoly::constant(e(m, 1))
        );
        let m = 3;
        let expected = XPoly::from_terms(
            m,
            [
                (XMonomial::new(3, 0), CoeffPoly::one(m)),
                (XMonomial::new(2, 0), -e(m, 1)),
                (XMonomial::new(1, 0), e(m, 2)),
                (XMonomial::new(0, 0), -e(m, 3)),
            ],
        )
        .unwrap();
        assert_eq!(fv_of(Variable::X1, m).unwrap(), expected);
        let m = 2;
        let expected = XPoly::from_terms(
            m,
            [
                (XMonomial::new(0, 2), CoeffPoly::one(m)),
                (XMonomial::new(0, 1), -e(m, 1)),
                (XMonomial::new(0, 0), e(m, 2)),
            ],
        )
        .unwrap();
        assert_eq!(fv_of(Variable::X2, m).unwrap(), expected);
        assert!(fv_of(Variable::X1, 0).is_err());
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_element(1).unwrap(), XPoly::constant(e(1, 1)));
        let m = 2;
        assert_eq!(
            z_element(m).unwrap(),
            &XPoly::monomial(m, 1, 1) - &XPoly::constant(e(m, 2))
        );
        let m = 3;
        let x1x2 = XPoly::monomial(m, 1, 1);
        let expected = &(&XPoly::constant(e(m, 3)) - &x1x2.scale(&e(m, 1)))
            + &(&XPoly::monomial(m, 2, 1) + &XPoly::monomial(m, 1, 2));
        assert_eq!(z_element(m).unwrap(), expected);
    }

    #[test]
    fn z_is_symmetric_and_restricted() {
        for m in 1..=7 {
            let z = z_element(m).unwrap();
            assert!(z.is_symmetric() && z.is_restricted(), "m={m}");
        }
    }

    #[test]
    fn eh_identity() {
        for n in 1..=8 {
            assert!(eh_identity_check(n).unwrap(), "n={n}");
        }
    }
}
