//! Exact target fields for specialization: the rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{check_rank, Error, Result};

/// An exact field, passed around as a context value so that the prime field
/// modulus can be chosen at runtime.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Canonical text form of an element.
    fn render(&self, a: &Self::Elem) -> String;

    fn from_ratio(&self, r: &Ratio) -> Result<Self::Elem> {
        let den = self.from_bigint(&r.den);
        let inv = self.inv(&den).ok_or_else(|| {
            Error::Evaluation(format!("denominator {} vanishes in {:?}", r.den, self))
        })?;
        Ok(self.mul(&self.from_bigint(&r.num), &inv))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// The prime field `F_p` for a prime `p < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Default prime for randomized runs: `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "{p} is not a prime below 2^63"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits in u64")
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulmod(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

fn powmod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A rational literal as parsed from `num/den` or `num` text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    pub num: BigInt,
    pub den: BigInt,
}

impl Ratio {
    pub fn integer(n: i64) -> Self {
        Ratio {
            num: n.into(),
            den: BigInt::one(),
        }
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse rational `{s}`"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::InvalidArgument(format!("zero denominator in `{s}`")));
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        Ok(Ratio { num, den })
    }
}

/// Parses a comma separated list of rationals, e.g. `1,-2,5/3`.
pub fn parse_ratio_list(s: &str) -> Result<Vec<Ratio>> {
    s.split(',').map(str::parse).collect()
}

/// A specialization `q ↦ q₀, e_j ↦ e_j⁰` into an exact field.
#[derive(Debug, Clone)]
pub struct ParamPoint<F: Field> {
    field: F,
    q: F::Elem,
    e: Vec<F::Elem>,
}

impl<F: Field> ParamPoint<F> {
    /// Requires `q₀ ≠ 0` and `e_m⁰ ≠ 0`.
    pub fn new(field: F, q: F::Elem, e: Vec<F::Elem>) -> Result<Self> {
        check_rank(e.len())?;
        if field.is_zero(&q) {
            return Err(Error::NonUnit("q specializes to zero".into()));
        }
        if field.is_zero(e.last().expect("m >= 1")) {
            return Err(Error::NonUnit(format!("e{} specializes to zero", e.len())));
        }
        Ok(ParamPoint { field, q, e })
    }

    /// Builds the point from individual parameters `v_1 … v_m`.
    pub fn from_v(field: F, q: F::Elem, v: &[F::Elem]) -> Result<Self> {
        let e = elementary_symmetric_values(&field, v)?;
        Self::new(field, q, e)
    }

    pub fn from_ratios(field: F, q: &Ratio, e: &[Ratio]) -> Result<Self> {
        let q = field.from_ratio(q)?;
        let e = e
            .iter()
            .map(|r| field.from_ratio(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, q, e)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn q(&self) -> &F::Elem {
        &self.q
    }

    pub fn e(&self) -> &[F::Elem] {
        &self.e
    }

    pub fn m(&self) -> usize {
        self.e.len()
    }

    /// Human-readable description, e.g. `q=5/2 e=(1,2,3)`.
    pub fn describe(&self) -> String {
        let e: Vec<String> = self.e.iter().map(|x| self.field.render(x)).collect();
        format!("q={} e=({})", self.field.render(&self.q), e.join(","))
    }
}

/// `(e_1(v), …, e_m(v))` from the expansion of `∏(x - v_i)`.
pub fn elementary_symmetric_values<F: Field>(field: &F, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
    check_rank(v.len())?;
    // e[j] holds e_j of the values seen so far; e[0] = 1.
    let mut e = vec![field.zero(); v.len() + 1];
    e[0] = field.one();
    for (n, vi) in v.iter().enumerate() {
        for j in (1..=n + 1).rev() {
            e[j] = field.add(&e[j], &field.mul(vi, &e[j - 1]));
        }
    }
    if field.is_zero(&e[v.len()]) {
        return Err(Error::NonUnit(
            "product of the v values is zero, e_m must be invertible".into(),
        ));
    }
    e.remove(0);
    Ok(e)
}
