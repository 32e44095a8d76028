//! Seeded "generic" parameter points, the `q = 1` counterexample and the
//! cross-check of the constructed centre basis against the nullspace.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::Quotient;
use crate::error::{check_rank, Result};

use super::field::{Field, ParamPoint, PrimeField, Rationals};
use super::linalg::{rank, Span};
use super::rep::{evaluate_vector, subalgebra_dimension, symmetric_generators, CommutatorSystem};

/// Default seed for generic points.
pub const DEFAULT_SEED: u64 = 20_240_601;

fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=9);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A rational point with small numerators and denominators, `q ∉ {0, ±1}` and
/// `e_m ≠ 0`.
pub fn generic_rational_point(m: usize, seed: u64) -> Result<ParamPoint<Rationals>> {
    check_rank(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = BigRational::from_integer(1.into());
    let q = loop {
        let q = small_rational(&mut rng);
        if q != BigRational::from_integer(0.into()) && q != one && q != -one.clone() {
            break q;
        }
    };
    let mut e: Vec<BigRational> = (0..m).map(|_| small_rational(&mut rng)).collect();
    while e[m - 1] == BigRational::from_integer(0.into()) {
        e[m - 1] = small_rational(&mut rng);
    }
    ParamPoint::new(Rationals, q, e)
}

/// A prime-field point with `q^k ≠ 1` for `k ≤ 2m` and `e_m ≠ 0`.
pub fn generic_prime_point(
    m: usize,
    field: &PrimeField,
    seed: u64,
) -> Result<ParamPoint<PrimeField>> {
    check_rank(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let q = loop {
        let q: u64 = rng.gen_range(2..p);
        if (1..=2 * m as u64).all(|k| field.pow(&q, k) != 1) {
            break q;
        }
    };
    let mut e: Vec<u64> = (0..m).map(|_| rng.gen_range(0..p)).collect();
    while e[m - 1] == 0 {
        e[m - 1] = rng.gen_range(1..p);
    }
    ParamPoint::new(*field, q, e)
}

/// The point `q = 1`, `e = (0, 0, 1)`, where `X1^3 = 1`.
pub fn q1_point() -> ParamPoint<Rationals> {
    let r = |n: i64| BigRational::from_integer(n.into());
    ParamPoint::new(Rationals, r(1), vec![r(0), r(0), r(1)]).expect("valid point")
}

/// Dimension of the subalgebra generated by the symmetric generators and of
/// the centre, at `at`.
pub fn symmetric_image_vs_centre<F: Field>(
    quot: &Quotient,
    at: &ParamPoint<F>,
) -> Result<(usize, usize)> {
    let gens = symmetric_generators(quot)?;
    let sub = subalgebra_dimension(quot, &gens, at)?;
    let centre = CommutatorSystem::new(quot)?.centre_dimension(at)?;
    Ok((sub, centre))
}

/// `(subalgebra dimension, centre dimension)` at `m = 3`, `q = 1`,
/// `e = (0, 0, 1)`.
pub fn counterexample_q1() -> Result<(usize, usize)> {
    symmetric_image_vs_centre(&Quotient::new(3)?, &q1_point())
}

/// How the specialized constructed centre basis sits inside the computed
/// centre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCheck {
    pub basis_size: usize,
    pub basis_rank: usize,
    pub nullspace_dim: usize,
    /// Every specialized basis element lies in the nullspace.
    pub all_central: bool,
}

impl BasisCheck {
    /// The basis is independent and spans the nullspace.
    pub fn spans(&self) -> bool {
        self.all_central
            && self.basis_rank == self.basis_size
            && self.basis_rank == self.nullspace_dim
    }
}

pub fn check_centre_basis<F: Field>(quot: &Quotient, at: &ParamPoint<F>) -> Result<BasisCheck> {
    let system = CommutatorSystem::new(quot)?;
    let field = at.field();
    let nullspace = system.centre_nullspace(at)?;
    let vectors = quot
        .centre_basis()?
        .elements()
        .iter()
        .map(|(_, c)| evaluate_vector(&system.rep().coords(c), at))
        .collect::<Result<Vec<_>>>()?;

    let mut all_central = true;
    for v in &vectors {
        all_central &= system.is_central_at(v, at)?;
    }
    let mut span = Span::new(field.clone());
    for v in &nullspace {
        span.insert(v);
    }
    all_central &= vectors.iter().all(|v| span.contains(v));

    Ok(BasisCheck {
        basis_size: vectors.len(),
        basis_rank: rank(field, &vectors),
        nullspace_dim: nullspace.len(),
        all_central,
    })
}
