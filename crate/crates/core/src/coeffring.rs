//! Sparse arithmetic in the coefficient ring `Z[q^±1, e_1, …, e_{m-1}, e_m^±1]`.
//!
//! The individual cyclotomic parameters `v_i` never appear symbolically; every
//! formula downstream depends on them only through the elementary symmetric
//! values `e_j`. `q` and `e_m` are units and may carry negative exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_rank, Error, Result};
use crate::specialize::field::{Field, ParamPoint};

/// Exponent vector of a coefficient monomial `q^a e_1^{b_1} … e_m^{b_m}`.
///
/// Ordering is lexicographic on `(q, e)`, which fixes the canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffExponent {
    q: i64,
    e: Vec<i64>,
}

impl CoeffExponent {
    /// Builds an exponent, checking that `e_1 … e_{m-1}` are non-negative.
    pub fn new(q: i64, e: Vec<i64>) -> Result<Self> {
        check_rank(e.len())?;
        let m = e.len();
        if let Some(pos) = e[..m - 1].iter().position(|&b| b < 0) {
            return Err(Error::InvalidArgument(format!(
                "e{} is not invertible and cannot carry exponent {}",
                pos + 1,
                e[pos]
            )));
        }
        Ok(CoeffExponent { q, e })
    }

    fn unit(m: usize) -> Self {
        CoeffExponent {
            q: 0,
            e: vec![0; m],
        }
    }

    pub fn q_pow(&self) -> i64 {
        self.q
    }

    /// Exponents of `e_1 … e_m` (index 0 holds the exponent of `e_1`).
    pub fn e_pows(&self) -> &[i64] {
        &self.e
    }

    pub fn m(&self) -> usize {
        self.e.len()
    }

    fn is_unit(&self) -> bool {
        self.q == 0 && self.e.iter().all(|&b| b == 0)
    }

    fn combine(&self, other: &Self) -> Self {
        CoeffExponent {
            q: self.q + other.q,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect(),
        }
    }
}

/// An element of the coefficient ring for a fixed rank `m`.
///
/// Terms are kept in a `BTreeMap`, so the representation is canonical: no zero
/// coefficients, one entry per exponent, deterministic iteration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffPoly {
    m: usize,
    terms: BTreeMap<CoeffExponent, BigInt>,
}

impl CoeffPoly {
    pub fn zero(m: usize) -> Self {
        CoeffPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, 1)
    }

    pub fn constant(m: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial_unchecked(m, CoeffExponent::unit(m), c.into())
    }

    fn monomial_unchecked(m: usize, exp: CoeffExponent, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        CoeffPoly { m, terms }
    }

    /// `c · exp` as a single-term polynomial.
    pub fn monomial(exp: CoeffExponent, c: impl Into<BigInt>) -> Self {
        let m = exp.m();
        Self::monomial_unchecked(m, exp, c.into())
    }

    /// Normalizes an arbitrary list of terms: like exponents are merged and
    /// zero coefficients dropped.
    pub fn from_terms(
        m: usize,
        terms: impl IntoIterator<Item = (CoeffExponent, BigInt)>,
    ) -> Result<Self> {
        let mut out = CoeffPoly::zero(m);
        for (exp, c) in terms {
            if exp.m() != m {
                return Err(Error::RingMismatch {
                    left: m,
                    right: exp.m(),
                });
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }

    /// `q^k`.
    pub fn q_pow(m: usize, k: i64) -> Self {
        let mut exp = CoeffExponent::unit(m);
        exp.q = k;
        Self::monomial_unchecked(m, exp, BigInt::one())
    }

    pub fn q(m: usize) -> Self {
        Self::q_pow(m, 1)
    }

    /// The elementary symmetric parameter `e_j`, with `e_0 = 1` and `e_j = 0`
    /// for `j > m`.
    pub fn e(m: usize, j: usize) -> Self {
        match j {
            0 => Self::one(m),
            j if j > m => Self::zero(m),
            j => {
                let mut exp = CoeffExponent::unit(m);
                exp.e[j - 1] = 1;
                Self::monomial_unchecked(m, exp, BigInt::one())
            }
        }
    }

    /// `e_m^k` for any integer `k`.
    pub fn e_m_pow(m: usize, k: i64) -> Self {
        let mut exp = CoeffExponent::unit(m);
        exp.e[m - 1] = k;
        Self::monomial_unchecked(m, exp, BigInt::one())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_unit() && c.is_one())
    }

    /// The integer value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoeffExponent, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exp: CoeffExponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
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
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = CoeffPoly::zero(self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.combine(eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`; panics on a ring mismatch.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.m, other.m, "ring mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return CoeffPoly::zero(self.m);
        }
        CoeffPoly {
            m: self.m,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = CoeffPoly::one(self.m);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Image under `q ↦ q₀, e_j ↦ e_j⁰`.
    pub fn evaluate<F: Field>(&self, at: &ParamPoint<F>) -> Result<F::Elem> {
        if at.m() != self.m {
            return Err(Error::RingMismatch {
                left: self.m,
                right: at.m(),
            });
        }
        let field = at.field();
        let pow = |base: &F::Elem, k: i64, name: &str| -> Result<F::Elem> {
            let b = if k < 0 {
                field
                    .inv(base)
                    .ok_or_else(|| Error::NonUnit(format!("{name} specializes to zero")))?
            } else {
                base.clone()
            };
            Ok(field.pow(&b, k.unsigned_abs()))
        };
        let mut acc = field.zero();
        for (exp, c) in &self.terms {
            let mut t = field.from_bigint(c);
            t = field.mul(&t, &pow(at.q(), exp.q, "q")?);
            for (j, &b) in exp.e.iter().enumerate() {
                if b != 0 {
                    t = field.mul(&t, &pow(&at.e()[j], b, &format!("e{}", j + 1))?);
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }
}

/// `Q = q - 1`.
pub fn coeff_q_minus_one(m: usize) -> Result<CoeffPoly> {
    check_rank(m)?;
    Ok(&CoeffPoly::q(m) - &CoeffPoly::one(m))
}

impl fmt::Display for CoeffPoly {
    /// Canonical text form: terms in ascending exponent order, each printed as
    /// `<int> q^<a> e1^<b1> … em^<bm>` with zero exponents dropped and unit
    /// exponents written bare, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (exp, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            write_power(f, "q", exp.q)?;
            for (j, &b) in exp.e.iter().enumerate() {
                write_power(f, &format!("e{}", j + 1), b)?;
            }
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, name: &str, k: i64) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => write!(f, " {name}"),
        k => write!(f, " {name}^{k}"),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&CoeffPoly> for &CoeffPoly {
            type Output = CoeffPoly;
            fn $method(self, rhs: &CoeffPoly) -> CoeffPoly {
                self.$try(rhs).expect("coefficient ring mismatch")
            }
        }
        impl $tr<CoeffPoly> for CoeffPoly {
            type Output = CoeffPoly;
            fn $method(self, rhs: CoeffPoly) -> CoeffPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            m: self.m,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}

/// Sign helper: `(-1)^k` as a `BigInt`.
pub(crate) fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialize::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(m: usize) -> CoeffPoly {
        CoeffPoly::q(m)
    }

    #[test]
    fn add_examples() {
        let one = CoeffPoly::one(3);
        assert_eq!(&q(3) + &(&one - &q(3)), one);
        assert_eq!(
            &CoeffPoly::zero(3) + &CoeffPoly::e(3, 2),
            CoeffPoly::e(3, 2)
        );
        let big_q = coeff_q_minus_one(3).unwrap();
        let two_q = &big_q + &big_q;
        let expected = &CoeffPoly::constant(3, 2) * &(&q(3) - &one);
        assert_eq!(two_q, expected);
        assert_eq!(two_q.to_string(), "-2 + 2 q");
    }

    #[test]
    fn mul_examples() {
        let m = 3;
        assert!((&CoeffPoly::q_pow(m, -1) * &q(m)).is_one());
        let one = CoeffPoly::one(m);
        let prod = &(&q(m) - &one) * &(&q(m) + &one);
        assert_eq!(prod, &CoeffPoly::q_pow(m, 2) - &one);
        assert!((&CoeffPoly::e_m_pow(m, -1) * &CoeffPoly::e(m, m)).is_one());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = CoeffPoly::q(2);
        let b = CoeffPoly::q(3);
        assert_eq!(
            a.try_add(&b),
            Err(Error::RingMismatch { left: 2, right: 3 })
        );
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn q_minus_one_examples() {
        let big_q = coeff_q_minus_one(3).unwrap();
        assert_eq!(big_q, &q(3) - &CoeffPoly::one(3));
        assert_eq!(coeff_q_minus_one(0), Err(Error::InvalidRank(0)));
        let at1 = ParamPoint::new(Rationals, int(1), vec![int(1), int(1), int(1)]).unwrap();
        assert_eq!(big_q.evaluate(&at1).unwrap(), int(0));
        let at2 = ParamPoint::new(Rationals, int(2), vec![int(1), int(1), int(1)]).unwrap();
        assert_eq!(big_q.evaluate(&at2).unwrap(), int(1));
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn evaluate_examples() {
        let m = 2;
        let pt = ParamPoint::new(Rationals, int(3), vec![int(5), int(2)]).unwrap();
        let inv = CoeffPoly::e_m_pow(m, -1);
        assert_eq!(
            inv.evaluate(&pt).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        let p = &CoeffPoly::q_pow(m, 2) - &CoeffPoly::one(m);
        assert_eq!(p.evaluate(&pt).unwrap(), int(8));

        let fp = PrimeField::new(7).unwrap();
        let pt = ParamPoint::new(fp, 3, vec![5, 2]).unwrap();
        assert_eq!(p.evaluate(&pt).unwrap(), 1);
    }

    #[test]
    fn negative_e_exponent_rejected() {
        assert!(CoeffExponent::new(0, vec![-1, 0]).is_err());
        assert!(CoeffExponent::new(-4, vec![0, -3]).is_ok());
    }

    #[test]
    fn text_form() {
        let m = 3;
        let p = &(&CoeffPoly::e(m, 1) * &CoeffPoly::q_pow(m, -2)) - &CoeffPoly::e_m_pow(m, -1);
        assert_eq!(p.to_string(), "1 q^-2 e1 + -1 e3^-1");
        assert_eq!(CoeffPoly::zero(m).to_string(), "0");
    }
}
