// Centre dimensions at specialized points, and the q = 1 subalgebra that
// falls short of the centre.

use hecke_centre::cyclotomic::Quotient;
use hecke_centre::specialize::{
    check_centre_basis, count_multipartitions, counterexample_q1, generic_prime_point,
    generic_rational_point, subalgebra_closure, symmetric_generators, PrimeField, DEFAULT_PRIME,
    DEFAULT_SEED,
};
use hecke_centre::Result;

pub fn run_example() -> Result<()> {
    let field = PrimeField::new(DEFAULT_PRIME)?;
    for m in 1..=4 {
        let quot = Quotient::new(m)?;
        let at = generic_rational_point(m, DEFAULT_SEED)?;
        let check = check_centre_basis(&quot, &at)?;
        let fp = generic_prime_point(m, &field, DEFAULT_SEED)?;
        let dim_p = hecke_centre::specialize::centre_dimension(&quot, &fp)?;
        println!(
            "m={m} at {}: centre {} (F_p: {dim_p}), multipartitions {}, basis spans: {}",
            at.describe(),
            check.nullspace_dim,
            count_multipartitions(m, 2),
            check.spans()
        );
    }

    let (sub, centre) = counterexample_q1()?;
    println!("q=1, X1^3=1: symmetric image {sub}, centre {centre}");

    let quot = Quotient::new(3)?;
    let at = generic_rational_point(3, DEFAULT_SEED)?;
    let closure = subalgebra_closure(&quot, &symmetric_generators(&quot)?, &at)?;
    println!(
        "generic point: symmetric image {} after {} rounds {:?}",
        closure.dimension, closure.rounds, closure.history
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
