// Reducing affine elements to the restricted normal form of the quotient.

use hecke_centre::affine::{AffineElement, XPoly};
use hecke_centre::cyclotomic::Quotient;
use hecke_centre::Result;

pub fn run_example() -> Result<()> {
    let m = 3;
    let quot = Quotient::new(m)?;
    println!("z      = {}", quot.z());
    println!("X1^-1  = {}", quot.x1_inverse());
    println!("X2^-1  = {}", quot.x2_inverse());
    println!("X1^3   = {}", quot.reduce_poly(&XPoly::monomial(m, 3, 0))?);
    println!("X2^3   = {}", quot.reduce_poly(&XPoly::monomial(m, 0, 3))?);

    let a = AffineElement::x2(m)
        .try_mul(&AffineElement::t(m))?
        .try_mul(&AffineElement::x2(m))?;
    let reduced = quot.reduce(&a)?;
    println!("X2 T X2 = {reduced}");
    println!(
        "{}",
        serde_json::to_string(&reduced.to_json()).expect("serializes")
    );

    let check = quot.mul(&quot.x2(), &quot.x2_inverse())?;
    println!("X2 X2^-1 = {check}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
