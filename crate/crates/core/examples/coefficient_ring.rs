// Arithmetic in Z[q^±1, e_1, …, e_{m-1}, e_m^±1] and evaluation at a point.

use hecke_centre::coeffring::{coeff_q_minus_one, CoeffPoly};
use hecke_centre::specialize::{
    elementary_symmetric_values, Field, ParamPoint, PrimeField, Rationals,
};
use hecke_centre::Result;
use num_rational::BigRational;

pub fn run_example() -> Result<()> {
    let m = 3;
    let big_q = coeff_q_minus_one(m)?;
    let e3_inv = CoeffPoly::e_m_pow(m, -1);
    let x = &(&big_q * &big_q) + &(&CoeffPoly::e(m, 1) * &e3_inv);
    println!("(q-1)^2 + e1 e3^-1 = {x}");

    // Parameters from v = (1, 2, 3): e = (6, 11, 6).
    let r = |n: i64| BigRational::from_integer(n.into());
    let q0 = BigRational::new(5.into(), 2.into());
    let at = ParamPoint::from_v(Rationals, q0, &[r(1), r(2), r(3)])?;
    println!("{} -> {}", at.describe(), x.evaluate(&at)?);

    let f = PrimeField::new(7)?;
    let roots = [1, 2, 4].map(|n| f.from_i64(n));
    let e = elementary_symmetric_values(&f, &roots)?;
    println!("roots of x^3 - 1 in F_7 give e = {e:?}");
    let at = ParamPoint::new(f, f.from_i64(3), e)?;
    println!("{} -> {}", at.describe(), x.evaluate(&at)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
