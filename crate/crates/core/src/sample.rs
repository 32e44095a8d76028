//! Seeded random elements for property tests and examples.
//!
//! Sizes are kept small: a handful of terms, exponents in `[-3, 3]` for the
//! Laurent variables and coefficients in `[-9, 9]`.

use num_bigint::BigInt;
use rand::Rng;

use crate::affine::{AffineElement, XMonomial, XPoly};
use crate::coeffring::{CoeffExponent, CoeffPoly};
use crate::cyclotomic::{CycloElement, RestrictedPoly};

/// Shape of the random elements.
#[derive(Debug, Clone, Copy)]
pub struct SampleSize {
    pub coeff_terms: usize,
    pub x_terms: usize,
    pub exponent: i64,
    pub magnitude: i64,
}

impl Default for SampleSize {
    fn default() -> Self {
        SampleSize {
            coeff_terms: 2,
            x_terms: 3,
            exponent: 3,
            magnitude: 9,
        }
    }
}

pub fn coeff_poly<R: Rng>(rng: &mut R, m: usize, size: SampleSize) -> CoeffPoly {
    let n = rng.gen_range(0..=size.coeff_terms);
    let terms = (0..n).map(|_| {
        let q = rng.gen_range(-size.exponent..=size.exponent);
        let e = (0..m)
            .map(|j| {
                if j + 1 == m {
                    rng.gen_range(-size.exponent..=size.exponent)
                } else {
                    rng.gen_range(0..=size.exponent)
                }
            })
            .collect();
        let c = rng.gen_range(-size.magnitude..=size.magnitude);
        (
            CoeffExponent::new(q, e).expect("valid exponent"),
            BigInt::from(c),
        )
    });
    CoeffPoly::from_terms(m, terms.collect::<Vec<_>>()).expect("same rank")
}

fn x_poly_in<R: Rng>(
    rng: &mut R,
    m: usize,
    size: SampleSize,
    mut exponent: impl FnMut(&mut R) -> (i64, i64),
) -> XPoly {
    let n = rng.gen_range(0..=size.x_terms);
    let mut terms = Vec::with_capacity(n);
    for _ in 0..n {
        let (i, j) = exponent(rng);
        terms.push((XMonomial::new(i, j), coeff_poly(rng, m, size)));
    }
    XPoly::from_terms(m, terms).expect("same rank")
}

/// A Laurent polynomial with exponents in `[-size.exponent, size.exponent]`.
pub fn x_poly<R: Rng>(rng: &mut R, m: usize, size: SampleSize) -> XPoly {
    let r = size.exponent;
    x_poly_in(rng, m, size, |rng| {
        (rng.gen_range(-r..=r), rng.gen_range(-r..=r))
    })
}

pub fn symmetric_x_poly<R: Rng>(rng: &mut R, m: usize, size: SampleSize) -> XPoly {
    let p = x_poly(rng, m, size);
    &p + &p.swap()
}

pub fn affine_element<R: Rng>(rng: &mut R, m: usize, size: SampleSize) -> AffineElement {
    AffineElement {
        f: x_poly(rng, m, size),
        g: x_poly(rng, m, size),
    }
}

pub fn restricted_poly<R: Rng>(rng: &mut R, m: usize, size: SampleSize) -> RestrictedPoly {
    let top = m as i64 - 1;
    let p = x_poly_in(rng, m, size, |rng| {
        (rng.gen_range(0..=top), rng.gen_range(0..=top))
    });
    RestrictedPoly::new(p).expect("restricted by construction")
}

pub fn symmetric_restricted_poly<R: Rng>(
    rng: &mut R,
    m: usize,
    size: SampleSize,
) -> RestrictedPoly {
    let p = restricted_poly(rng, m, size);
    RestrictedPoly::new(p.as_poly() + &p.as_poly().swap()).expect("restricted by construction")
}

pub fn cyclo_element<R: Rng>(rng: &mut R, m: usize, size: SampleSize) -> CycloElement {
    CycloElement::new(restricted_poly(rng, m, size), restricted_poly(rng, m, size))
        .expect("same rank")
}
