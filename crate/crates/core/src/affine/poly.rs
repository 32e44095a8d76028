use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeffring::CoeffPoly;
use crate::error::{Error, Result};

/// The Laurent monomial `X1^i X2^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XMonomial {
    pub i: i64,
    pub j: i64,
}

impl XMonomial {
    pub const ONE: XMonomial = XMonomial { i: 0, j: 0 };

    pub fn new(i: i64, j: i64) -> Self {
        XMonomial { i, j }
    }

    pub fn swapped(self) -> Self {
        XMonomial {
            i: self.j,
            j: self.i,
        }
    }

    pub fn times(self, other: XMonomial) -> Self {
        XMonomial {
            i: self.i + other.i,
            j: self.j + other.j,
        }
    }

    /// `0 ≤ i, j ≤ m-1`.
    pub fn is_restricted(self, m: usize) -> bool {
        let m = m as i64;
        (0..m).contains(&self.i) && (0..m).contains(&self.j)
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, k) in [("X1", self.i), ("X2", self.j)] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                k => parts.push(format!("{name}^{k}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A Laurent polynomial in `X1, X2` over the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XPoly {
    m: usize,
    terms: BTreeMap<XMonomial, CoeffPoly>,
}

impl XPoly {
    pub fn zero(m: usize) -> Self {
        XPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(CoeffPoly::one(m))
    }

    pub fn constant(c: CoeffPoly) -> Self {
        Self::term(XMonomial::ONE, c)
    }

    pub fn term(mono: XMonomial, c: CoeffPoly) -> Self {
        let mut out = XPoly::zero(c.m());
        out.add_term(mono, c);
        out
    }

    /// `X1^i X2^j` with unit coefficient.
    pub fn monomial(m: usize, i: i64, j: i64) -> Self {
        Self::term(XMonomial::new(i, j), CoeffPoly::one(m))
    }

    pub fn x1(m: usize) -> Self {
        Self::monomial(m, 1, 0)
    }

    pub fn x2(m: usize) -> Self {
        Self::monomial(m, 0, 1)
    }

    pub fn from_terms(
        m: usize,
        terms: impl IntoIterator<Item = (XMonomial, CoeffPoly)>,
    ) -> Result<Self> {
        let mut out = XPoly::zero(m);
        for (mono, c) in terms {
            if c.m() != m {
                return Err(Error::RingMismatch {
                    left: m,
                    right: c.m(),
                });
            }
            out.add_term(mono, c);
        }
        Ok(out)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XMonomial, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (XMonomial, CoeffPoly)> {
        self.terms.into_iter()
    }

    /// Coefficient of `X1^i X2^j` (zero if absent).
    pub fn coeff(&self, i: i64, j: i64) -> CoeffPoly {
        self.terms
            .get(&XMonomial::new(i, j))
            .cloned()
            .unwrap_or_else(|| CoeffPoly::zero(self.m))
    }

    pub(crate) fn add_term(&mut self, mono: XMonomial, c: CoeffPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(c.m(), self.m);
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            Err(Error::RingMismatch {
                left: self.m,
                right: other.m,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(*mono, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(*mono, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = XPoly::zero(self.m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &CoeffPoly) -> Self {
        let mut out = XPoly::zero(self.m);
        if c.is_zero() {
            return out;
        }
        for (mono, a) in &self.terms {
            out.add_term(*mono, a * c);
        }
        out
    }

    /// Multiplies by the monomial `X1^i X2^j`.
    pub fn shift(&self, by: XMonomial) -> Self {
        XPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.times(by), c.clone()))
                .collect(),
        }
    }

    /// `^s f`: exchanges `X1` and `X2`.
    pub fn swap(&self) -> Self {
        XPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.swapped(), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(mono, c)| self.terms.get(&mono.swapped()) == Some(c))
    }

    pub fn is_restricted(&self) -> bool {
        self.terms.keys().all(|mono| mono.is_restricted(self.m))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = XPoly::one(self.m);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for XPoly {
    /// Terms in `(i, j)` order, each written `(<coeff>) <monomial>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (mono, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {mono}")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&XPoly> for &XPoly {
            type Output = XPoly;
            fn $method(self, rhs: &XPoly) -> XPoly {
                self.$try(rhs).expect("coefficient ring mismatch")
            }
        }
        impl $tr<XPoly> for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_examples() {
        let m = 2;
        assert_eq!(XPoly::monomial(m, 2, 1).swap(), XPoly::monomial(m, 1, 2));
        assert_eq!(XPoly::monomial(m, 1, 1).swap(), XPoly::monomial(m, 1, 1));
        let f = XPoly::term(XMonomial::new(-1, 0), CoeffPoly::q(m));
        assert_eq!(
            f.swap(),
            XPoly::term(XMonomial::new(0, -1), CoeffPoly::q(m))
        );
    }

    #[test]
    fn laurent_cancellation() {
        let m = 1;
        let x1 = XPoly::x1(m);
        let x1_inv = XPoly::monomial(m, -1, 0);
        assert_eq!(&x1 * &x1_inv, XPoly::one(m));
        assert!((&x1 - &x1).is_zero());
    }

    #[test]
    fn symmetric_and_restricted() {
        let m = 3;
        let f = &XPoly::monomial(m, 0, 2) + &XPoly::monomial(m, 2, 0);
        assert!(f.is_symmetric());
        assert!(f.is_restricted());
        assert!(!XPoly::monomial(m, 3, 0).is_restricted());
        assert!(!XPoly::monomial(m, -1, 0).is_restricted());
        assert!(!XPoly::x1(m).is_symmetric());
    }

    #[test]
    fn display() {
        let m = 2;
        let f = &XPoly::monomial(m, 1, 2) - &XPoly::constant(CoeffPoly::e(m, 1));
        assert_eq!(f.to_string(), "(-1 e1) 1 + (1) X1 X2^2");
    }
}
