//! The semisimplicity polynomial `P(q, v)`.

use crate::error::{check_rank, Error, Result};

use super::field::Field;

/// `P = ∏_{i<j} ∏_{-n<a<n} (q^a v_i - v_j) · ∏_{k=1}^{n} (1 + q + … + q^{k-1})`.
///
/// The cyclotomic algebra of rank `n` at `(q0, v)` is semisimple exactly when
/// this is non-zero.
pub fn semisimplicity_p<F: Field>(
    field: &F,
    q0: &F::Elem,
    v: &[F::Elem],
    n: usize,
) -> Result<F::Elem> {
    check_rank(v.len())?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let q_inv = field
        .inv(q0)
        .ok_or_else(|| Error::NonUnit("q specializes to zero".into()))?;
    let reach = n as u64 - 1;
    let q_pow = |a: i64| {
        if a >= 0 {
            field.pow(q0, a as u64)
        } else {
            field.pow(&q_inv, a.unsigned_abs())
        }
    };

    let mut acc = field.one();
    for (i, vi) in v.iter().enumerate() {
        for vj in &v[i + 1..] {
            for a in -(reach as i64)..=reach as i64 {
                let factor = field.sub(&field.mul(&q_pow(a), vi), vj);
                acc = field.mul(&acc, &factor);
            }
        }
    }
    for k in 1..=n as u64 {
        let qk = (0..k).fold(field.zero(), |s, a| field.add(&s, &field.pow(q0, a)));
        acc = field.mul(&acc, &qk);
    }
    Ok(acc)
}

pub fn is_semisimple<F: Field>(field: &F, q0: &F::Elem, v: &[F::Elem], n: usize) -> Result<bool> {
    Ok(!field.is_zero(&semisimplicity_p(field, q0, v, n)?))
}
