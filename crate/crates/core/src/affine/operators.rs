//! The divided-difference operators `D` and `D_s`.

use super::poly::{XMonomial, XPoly};

/// `D(f) = (f - ^s f) / (1 - X1 X2^{-1})`, via the closed monomial formula
///
/// ```text
/// D(X1^i X2^j) =  X1^i Σ_{k=0}^{j-i-1} X1^k X2^{j-k}    (j > i)
///              = -X1^j Σ_{k=0}^{i-j-1} X1^k X2^{i-k}    (j < i)
///              =  0                                     (i = j)
/// ```
///
/// which holds for every pair of integer exponents.
pub fn diff_d(f: &XPoly) -> XPoly {
    let mut out = XPoly::zero(f.m());
    for (mono, c) in f.terms() {
        let (lo, hi) = (mono.i.min(mono.j), mono.i.max(mono.j));
        if lo == hi {
            continue;
        }
        let c = if mono.j > mono.i { c.clone() } else { -c };
        for k in 0..hi - lo {
            out.add_term(XMonomial::new(lo + k, hi - k), c.clone());
        }
    }
    out
}

/// `D_s(f) = (f - ^s f) / (1 - X1^{-1} X2) = ^s(-D(f))`.
pub fn diff_ds(f: &XPoly) -> XPoly {
    -diff_d(f).swap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoeffPoly;

    fn mono(i: i64, j: i64) -> XPoly {
        XPoly::monomial(2, i, j)
    }

    #[test]
    fn d_examples() {
        assert_eq!(diff_d(&mono(0, 1)), mono(0, 1));
        assert_eq!(diff_d(&mono(1, 0)), -mono(0, 1));
        assert_eq!(diff_d(&mono(1, 2)), mono(1, 2));
        assert!(diff_d(&mono(2, 2)).is_zero());
    }

    /// Oracle: `D(f)` is the unique `h` with `h · (1 - X1 X2^{-1}) = f - ^s f`.
    #[test]
    fn d_matches_division_on_laurent_monomials() {
        let m = 2;
        let denom = &XPoly::one(m) - &XPoly::monomial(m, 1, -1);
        for i in -3..=3 {
            for j in -3..=3 {
                let f = mono(i, j);
                assert_eq!(&diff_d(&f) * &denom, &f - &f.swap(), "X1^{i} X2^{j}");
            }
        }
    }

    #[test]
    fn ds_examples() {
        // (X1 - X2) / (1 - X2/X1) = X1 and (X2 - X1) / (1 - X2/X1) = -X1.
        assert_eq!(diff_ds(&mono(1, 0)), mono(1, 0));
        assert_eq!(diff_ds(&mono(0, 1)), -mono(1, 0));
        let sym = &mono(2, 1) + &mono(1, 2);
        assert!(diff_ds(&sym).is_zero());
    }

    #[test]
    fn ds_matches_division() {
        let m = 2;
        let denom = &XPoly::one(m) - &XPoly::monomial(m, -1, 1);
        let f = &XPoly::term(XMonomial::new(3, -1), CoeffPoly::q(m)) + &mono(0, 2);
        assert_eq!(&diff_ds(&f) * &denom, &f - &f.swap());
    }
}
