use std::fmt;

use serde::Serialize;

use crate::affine::{AffineElement, XPoly};
use crate::error::{Error, Result};

/// An `m`-restricted polynomial: every monomial `X1^i X2^j` has
/// `0 ≤ i, j ≤ m-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RestrictedPoly(XPoly);

impl RestrictedPoly {
    pub fn new(p: XPoly) -> Result<Self> {
        if let Some((mono, _)) = p.terms().find(|(mono, _)| !mono.is_restricted(p.m())) {
            return Err(Error::Domain(format!(
                "monomial {mono} is not {}-restricted",
                p.m()
            )));
        }
        Ok(RestrictedPoly(p))
    }

    pub(crate) fn new_unchecked(p: XPoly) -> Self {
        debug_assert!(p.is_restricted());
        RestrictedPoly(p)
    }

    pub fn zero(m: usize) -> Self {
        RestrictedPoly(XPoly::zero(m))
    }

    pub fn as_poly(&self) -> &XPoly {
        &self.0
    }

    pub fn into_poly(self) -> XPoly {
        self.0
    }

    pub fn m(&self) -> usize {
        self.0.m()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }
}

impl fmt::Display for RestrictedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `f + g T` in the cyclotomic quotient, with `f` and `g` restricted. The
/// restricted form is unique, so equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloElement {
    pub f: RestrictedPoly,
    pub g: RestrictedPoly,
}

impl CycloElement {
    pub fn new(f: RestrictedPoly, g: RestrictedPoly) -> Result<Self> {
        if f.m() != g.m() {
            return Err(Error::RingMismatch {
                left: f.m(),
                right: g.m(),
            });
        }
        Ok(CycloElement { f, g })
    }

    pub fn from_poly(f: RestrictedPoly) -> Self {
        let m = f.m();
        CycloElement {
            f,
            g: RestrictedPoly::zero(m),
        }
    }

    /// `g T`.
    pub fn times_t(g: RestrictedPoly) -> Self {
        let m = g.m();
        CycloElement {
            f: RestrictedPoly::zero(m),
            g,
        }
    }

    pub fn m(&self) -> usize {
        self.f.m()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    /// The same element viewed in the affine algebra (a canonical lift).
    pub fn lift(&self) -> AffineElement {
        AffineElement {
            f: self.f.as_poly().clone(),
            g: self.g.as_poly().clone(),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(CycloElement {
            f: RestrictedPoly::new_unchecked(self.f.as_poly().try_sub(other.f.as_poly())?),
            g: RestrictedPoly::new_unchecked(self.g.as_poly().try_sub(other.g.as_poly())?),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(CycloElement {
            f: RestrictedPoly::new_unchecked(self.f.as_poly().try_add(other.f.as_poly())?),
            g: RestrictedPoly::new_unchecked(self.g.as_poly().try_add(other.g.as_poly())?),
        })
    }

    pub fn to_json(&self) -> CycloJson {
        CycloJson {
            m: self.m(),
            f: poly_terms_json(self.f.as_poly()),
            g: poly_terms_json(self.g.as_poly()),
        }
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.f.is_zero(), self.g.is_zero()) {
            (_, true) => write!(f, "{}", self.f),
            (true, false) => write!(f, "({}) T", self.g),
            (false, false) => write!(f, "{} + ({}) T", self.f, self.g),
        }
    }
}

/// One term of a serialized polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub x1: i64,
    pub x2: i64,
    pub coeff: String,
}

/// Wire form `{"m": M, "f": [terms], "g": [terms]}`, terms sorted by `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycloJson {
    pub m: usize,
    pub f: Vec<TermJson>,
    pub g: Vec<TermJson>,
}

pub fn poly_terms_json(p: &XPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(mono, c)| TermJson {
            x1: mono.i,
            x2: mono.j,
            coeff: c.to_string(),
        })
        .collect()
}

/// Same wire shape for an affine element (used for failure witnesses).
pub fn affine_json(a: &AffineElement) -> CycloJson {
    CycloJson {
        m: a.m(),
        f: poly_terms_json(&a.f),
        g: poly_terms_json(&a.g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::CoeffPoly;

    #[test]
    fn restricted_rejects_large_exponents() {
        assert!(RestrictedPoly::new(XPoly::monomial(2, 2, 0)).is_err());
        assert!(RestrictedPoly::new(XPoly::monomial(2, 0, -1)).is_err());
        assert!(RestrictedPoly::new(XPoly::monomial(2, 1, 1)).is_ok());
    }

    #[test]
    fn json_shape() {
        let m = 2;
        let g = XPoly::monomial(m, 1, 0).scale(&CoeffPoly::e(m, 2));
        let c = CycloElement::times_t(RestrictedPoly::new(g).unwrap());
        let text = serde_json::to_string(&c.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"m":2,"f":[],"g":[{"x1":1,"x2":0,"coeff":"1 e2"}]}"#
        );
    }
}
