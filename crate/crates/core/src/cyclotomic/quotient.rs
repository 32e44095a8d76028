//! Reduction from the affine algebra onto the restricted basis of the
//! cyclotomic quotient.
//!
//! Every rule rewrites `h · u` (in either the `f` or the `g T` slot) where
//! `h` is a monomial and `u - r` lies in the two-sided ideal generated by
//! `f_v(X1)`; since the ideal is two-sided, `h (u - r) T` lies in it too, so
//! no commutation past `T` is ever needed. The rules are
//!
//! ```text
//! R1   X1^m    -> X1^m - f_v(X1)
//! R1'  X1^-1   -> e_m^-1 Σ_{j=1}^{m} (-1)^{j+1} e_{m-j} X1^{j-1}
//! R2   X2^m    -> X2^m - f_v(X2) + q^-1 Q z T
//! R2'  X2^-1   -> q T^-1 ψ(X1^-1) T^-1          (precomputed, restricted)
//! ```
//!
//! together with `T^2 = Q T + q` for the `g` slot. Negative exponents are
//! cleared first (R1' raises the `X1` exponent, R2' raises the `X2` exponent
//! and never creates negative `X1` exponents), then R1/R2 are applied to the
//! largest monomial in `(j, i)` order. Every replacement term is strictly
//! smaller in that order, so popping the maximum never revisits a finished
//! monomial.

use std::collections::BTreeMap;

use crate::affine::{fv_of, z_element, AffineElement, Variable, XMonomial, XPoly};
use crate::coeffring::{coeff_q_minus_one, sign, CoeffPoly};
use crate::error::{check_rank, Error, Result};

use super::element::{CycloElement, RestrictedPoly};

/// `u ↦ r0 + r1 T` applied to `c h u` in the `f` slot and to `c h u T` in
/// the `g` slot, where `(r0 + r1 T) T = q r1 + (r0 + Q r1) T`.
#[derive(Debug, Clone)]
struct Replacement {
    from_f: [XPoly; 2],
    from_g: [XPoly; 2],
}

impl Replacement {
    fn new(r0: XPoly, r1: XPoly, q: &CoeffPoly, big_q: &CoeffPoly) -> Self {
        let from_g = [r1.scale(q), &r0 + &r1.scale(big_q)];
        Replacement {
            from_f: [r0, r1],
            from_g,
        }
    }
}

/// Working set of `f` and `g` coefficients indexed by a monomial key.
type Slots = BTreeMap<(i64, i64), [CoeffPoly; 2]>;

fn slot_add(map: &mut Slots, key: (i64, i64), slot: usize, c: CoeffPoly, m: usize) {
    if c.is_zero() {
        return;
    }
    let entry = map
        .entry(key)
        .or_insert_with(|| [CoeffPoly::zero(m), CoeffPoly::zero(m)]);
    entry[slot].add_assign_ref(&c);
    if entry[0].is_zero() && entry[1].is_zero() {
        map.remove(&key);
    }
}

/// The cyclotomic quotient of rank `m`, with the data its rewrite system needs.
#[derive(Debug, Clone)]
pub struct Quotient {
    m: usize,
    q: CoeffPoly,
    big_q: CoeffPoly,
    z: XPoly,
    r1: Replacement,
    r1_inv: Replacement,
    r2: Replacement,
    r2_inv: Option<Replacement>,
    x2_inverse: Option<CycloElement>,
}

impl Quotient {
    pub fn new(m: usize) -> Result<Self> {
        check_rank(m)?;
        let q = CoeffPoly::q(m);
        let big_q = coeff_q_minus_one(m)?;
        let z = z_element(m)?;
        let zero = XPoly::zero(m);

        let x1_pow = XPoly::monomial(m, m as i64, 0);
        let x2_pow = XPoly::monomial(m, 0, m as i64);
        let x1_tail = &x1_pow - &fv_of(Variable::X1, m)?;
        let x2_tail = &x2_pow - &fv_of(Variable::X2, m)?;

        let mut x1_inv = XPoly::zero(m);
        let e_m_inv = CoeffPoly::e_m_pow(m, -1);
        for j in 1..=m {
            let c = &CoeffPoly::e(m, m - j).scale(&sign(j as i64 + 1)) * &e_m_inv;
            x1_inv.add_term(XMonomial::new(j as i64 - 1, 0), c);
        }

        let q_inv_big_q = &CoeffPoly::q_pow(m, -1) * &big_q;
        let mut quot = Quotient {
            m,
            r1: Replacement::new(x1_tail, zero.clone(), &q, &big_q),
            r1_inv: Replacement::new(x1_inv.clone(), zero.clone(), &q, &big_q),
            r2: Replacement::new(x2_tail, z.scale(&q_inv_big_q), &q, &big_q),
            r2_inv: None,
            x2_inverse: None,
            q,
            big_q,
            z,
        };

        // ψ(X2^{-1}) = q T^{-1} ψ(X1^{-1}) T^{-1}; the affine product has only
        // non-negative exponents, so R2' is not needed to reduce it.
        let t_inv = AffineElement::t_inverse(m);
        let conj = t_inv
            .try_mul(&AffineElement::from_poly(x1_inv))?
            .try_mul(&t_inv)?
            .scale(&quot.q);
        let n = quot.reduce(&conj)?;
        quot.r2_inv = Some(Replacement::new(
            n.f.as_poly().clone(),
            n.g.as_poly().clone(),
            &quot.q,
            &quot.big_q,
        ));
        quot.x2_inverse = Some(n);
        Ok(quot)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The polynomial `z` (already restricted).
    pub fn z(&self) -> RestrictedPoly {
        RestrictedPoly::new_unchecked(self.z.clone())
    }

    fn check_m(&self, m: usize) -> Result<()> {
        if m != self.m {
            Err(Error::RingMismatch {
                left: self.m,
                right: m,
            })
        } else {
            Ok(())
        }
    }

    /// The quotient map ψ onto the restricted normal form.
    pub fn reduce(&self, a: &AffineElement) -> Result<CycloElement> {
        self.check_m(a.m())?;
        let m = self.m;

        // Clear negative X1 exponents, keyed by (i, j).
        let mut work: Slots = BTreeMap::new();
        for (slot, poly) in [&a.f, &a.g].into_iter().enumerate() {
            for (mono, c) in poly.terms() {
                slot_add(&mut work, (mono.i, mono.j), slot, c.clone(), m);
            }
        }
        while work.first_key_value().is_some_and(|(k, _)| k.0 < 0) {
            let ((i, j), coeffs) = work.pop_first().expect("non-empty");
            self.apply(
                &mut work,
                &self.r1_inv,
                XMonomial::new(i + 1, j),
                coeffs,
                |mono| (mono.i, mono.j),
            );
        }

        // Clear negative X2 exponents, keyed by (j, i) from here on.
        let mut work: Slots = work.into_iter().map(|((i, j), c)| ((j, i), c)).collect();
        while work.first_key_value().is_some_and(|(k, _)| k.0 < 0) {
            let ((j, i), coeffs) = work.pop_first().expect("non-empty");
            let rule = self.r2_inv.as_ref().ok_or_else(|| {
                Error::Invariant("negative X2 exponent before X2^-1 is known".into())
            })?;
            self.apply(&mut work, rule, XMonomial::new(i, j + 1), coeffs, key_ji);
        }

        // R1 / R2 on the largest monomial first.
        let mut f = XPoly::zero(m);
        let mut g = XPoly::zero(m);
        let bound = m as i64;
        while let Some(((j, i), coeffs)) = work.pop_last() {
            if j >= bound {
                self.apply(
                    &mut work,
                    &self.r2,
                    XMonomial::new(i, j - bound),
                    coeffs,
                    key_ji,
                );
            } else if i >= bound {
                self.apply(
                    &mut work,
                    &self.r1,
                    XMonomial::new(i - bound, j),
                    coeffs,
                    key_ji,
                );
            } else {
                let [cf, cg] = coeffs;
                f.add_term(XMonomial::new(i, j), cf);
                g.add_term(XMonomial::new(i, j), cg);
            }
        }
        Ok(CycloElement {
            f: RestrictedPoly::new_unchecked(f),
            g: RestrictedPoly::new_unchecked(g),
        })
    }

    fn apply(
        &self,
        work: &mut Slots,
        rule: &Replacement,
        h: XMonomial,
        coeffs: [CoeffPoly; 2],
        key: impl Fn(XMonomial) -> (i64, i64),
    ) {
        for (c, targets) in coeffs.iter().zip([&rule.from_f, &rule.from_g]) {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in targets.iter().enumerate() {
                for (mono, rc) in r.terms() {
                    slot_add(work, key(mono.times(h)), slot, c * rc, self.m);
                }
            }
        }
    }

    /// Reduces a Laurent polynomial of `S`.
    pub fn reduce_poly(&self, p: &XPoly) -> Result<CycloElement> {
        self.reduce(&AffineElement::from_poly(p.clone()))
    }

    /// Product in the quotient.
    pub fn mul(&self, a: &CycloElement, b: &CycloElement) -> Result<CycloElement> {
        self.check_m(a.m())?;
        self.check_m(b.m())?;
        self.reduce(&a.lift().try_mul(&b.lift())?)
    }

    pub fn one(&self) -> CycloElement {
        CycloElement::from_poly(RestrictedPoly::new_unchecked(XPoly::one(self.m)))
    }

    pub fn t(&self) -> CycloElement {
        CycloElement::times_t(RestrictedPoly::new_unchecked(XPoly::one(self.m)))
    }

    /// `ψ(X1)`; for `m = 1` this is the scalar `e_1`.
    pub fn x1(&self) -> CycloElement {
        self.reduce_poly(&XPoly::x1(self.m)).expect("same rank")
    }

    pub fn x2(&self) -> CycloElement {
        self.reduce_poly(&XPoly::x2(self.m)).expect("same rank")
    }

    pub fn x1_inverse(&self) -> CycloElement {
        self.reduce_poly(&XPoly::monomial(self.m, -1, 0))
            .expect("same rank")
    }

    pub fn x2_inverse(&self) -> CycloElement {
        self.x2_inverse.clone().expect("set at construction")
    }

    /// Whether `c` commutes with `T` and `X1`, hence with the whole quotient.
    pub fn is_central(&self, c: &CycloElement) -> Result<bool> {
        Ok(self.commutes(c, &self.t())? && self.commutes(c, &self.x1())?)
    }

    pub fn commutes(&self, a: &CycloElement, b: &CycloElement) -> Result<bool> {
        Ok(self.mul(a, b)? == self.mul(b, a)?)
    }

    /// Whether `f + g T` commutes with `T`.
    pub fn commutes_with_t(&self, f: &RestrictedPoly, g: &RestrictedPoly) -> Result<bool> {
        let c = CycloElement::new(f.clone(), g.clone())?;
        self.commutes(&c, &self.t())
    }
}

fn key_ji(mono: XMonomial) -> (i64, i64) {
    (mono.j, mono.i)
}

/// ψ for a one-off rank; builds the rewrite data on every call.
pub fn reduce_psi(a: &AffineElement, m: usize) -> Result<CycloElement> {
    Quotient::new(m)?.reduce(a)
}
