use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeffring::{coeff_q_minus_one, CoeffPoly};
use crate::error::{Error, Result};

use super::operators::diff_d;
use super::poly::XPoly;

/// `f + g T` in the affine Hecke algebra, written in the Bernstein basis
/// `S ⊕ S T`. The representation is unique, so equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub f: XPoly,
    pub g: XPoly,
}

impl AffineElement {
    pub fn new(f: XPoly, g: XPoly) -> Result<Self> {
        if f.m() != g.m() {
            return Err(Error::RingMismatch {
                left: f.m(),
                right: g.m(),
            });
        }
        Ok(AffineElement { f, g })
    }

    pub fn zero(m: usize) -> Self {
        AffineElement {
            f: XPoly::zero(m),
            g: XPoly::zero(m),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::from_poly(XPoly::one(m))
    }

    pub fn from_poly(f: XPoly) -> Self {
        let m = f.m();
        AffineElement {
            f,
            g: XPoly::zero(m),
        }
    }

    /// `g T`.
    pub fn times_t(g: XPoly) -> Self {
        let m = g.m();
        AffineElement {
            f: XPoly::zero(m),
            g,
        }
    }

    pub fn t(m: usize) -> Self {
        Self::times_t(XPoly::one(m))
    }

    /// `T^{-1} = q^{-1}(T + 1 - q)`.
    pub fn t_inverse(m: usize) -> Self {
        let q_inv = CoeffPoly::q_pow(m, -1);
        let one_minus_q = &CoeffPoly::one(m) - &CoeffPoly::q(m);
        AffineElement {
            f: XPoly::constant(&q_inv * &one_minus_q),
            g: XPoly::constant(q_inv),
        }
    }

    pub fn x1(m: usize) -> Self {
        Self::from_poly(XPoly::x1(m))
    }

    pub fn x2(m: usize) -> Self {
        Self::from_poly(XPoly::x2(m))
    }

    pub fn m(&self) -> usize {
        self.f.m()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn scale(&self, c: &CoeffPoly) -> Self {
        AffineElement {
            f: self.f.scale(c),
            g: self.g.scale(c),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(AffineElement {
            f: self.f.try_add(&other.f)?,
            g: self.g.try_add(&other.g)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(AffineElement {
            f: self.f.try_sub(&other.f)?,
            g: self.g.try_sub(&other.g)?,
        })
    }

    /// Product in normal form. `T` is moved to the right with
    /// `T h = ^s h T + Q D(h)` and `T^2` collapses to `Q T + q`:
    ///
    /// ```text
    /// (f1 + g1 T)(f2 + g2 T) = f1 f2 + Q g1 D(f2) + q g1 ^s g2
    ///                        + (f1 g2 + g1 ^s f2 + Q g1 ^s g2 + Q g1 D(g2)) T
    /// ```
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.m() != other.m() {
            return Err(Error::RingMismatch {
                left: self.m(),
                right: other.m(),
            });
        }
        let m = self.m();
        let big_q = coeff_q_minus_one(m)?;
        let q = CoeffPoly::q(m);
        let (f1, g1) = (&self.f, &self.g);
        let (f2, g2) = (&other.f, &other.g);

        let mut f = f1 * f2;
        let mut g = f1 * g2;
        if !g1.is_zero() {
            let s_g2 = g2.swap();
            // Q g1 D(f2) + q g1 s(g2)
            f = &f + &(g1 * &(&diff_d(f2).scale(&big_q) + &s_g2.scale(&q)));
            // g1 (s(f2) + Q s(g2) + Q D(g2))
            let inner = &f2.swap() + &(&s_g2 + &diff_d(g2)).scale(&big_q);
            g = &g + &(g1 * &inner);
        }
        Ok(AffineElement { f, g })
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }
}

impl fmt::Display for AffineElement {
    /// `<f> + (<g>) T`, dropping a zero part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.f.is_zero(), self.g.is_zero()) {
            (_, true) => write!(f, "{}", self.f),
            (true, false) => write!(f, "({}) T", self.g),
            (false, false) => write!(f, "{} + ({}) T", self.f, self.g),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&AffineElement> for &AffineElement {
            type Output = AffineElement;
            fn $method(self, rhs: &AffineElement) -> AffineElement {
                self.$try(rhs).expect("coefficient ring mismatch")
            }
        }
        impl $tr<AffineElement> for AffineElement {
            type Output = AffineElement;
            fn $method(self, rhs: AffineElement) -> AffineElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &AffineElement {
    type Output = AffineElement;
    fn neg(self) -> AffineElement {
        AffineElement {
            f: -&self.f,
            g: -&self.g,
        }
    }
}

/// Free-function form of [`AffineElement::try_mul`].
pub fn affine_mul(a: &AffineElement, b: &AffineElement) -> Result<AffineElement> {
    a.try_mul(b)
}
