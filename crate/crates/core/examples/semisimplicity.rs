// Evaluating the semisimplicity polynomial P(q, v).

use hecke_centre::specialize::{semisimplicity_p, Field, PrimeField, Rationals};
use hecke_centre::Result;
use num_rational::BigRational;

pub fn run_example() -> Result<()> {
    let r = |n: i64| BigRational::from_integer(n.into());
    let v = [r(1), r(2), r(3)];
    for q0 in [r(-1), r(1), r(2), BigRational::new(5.into(), 2.into())] {
        let p = semisimplicity_p(&Rationals, &q0, &v, 2)?;
        println!("q={q0} v=(1,2,3): P = {p}, semisimple: {}", p != r(0));
    }

    // In F_7 the cube roots of unity sit at q-distance 2 from each other.
    let f = PrimeField::new(7)?;
    let v = [1, 2, 4].map(|n| f.from_i64(n));
    for q0 in 1..7 {
        let p = semisimplicity_p(&f, &f.from_i64(q0), &v, 2)?;
        println!("F_7 q={q0}: P = {}", f.render(&p));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
