// Products in the affine Hecke algebra and the T X1^k T identity.

use hecke_centre::affine::{
    braid_power_residual, diff_d, fv_conjugation_residual, is_central_affine, AffineElement, XPoly,
};
use hecke_centre::Result;

pub fn run_example() -> Result<()> {
    let m = 2;
    let t = AffineElement::t(m);
    let x1 = AffineElement::x1(m);

    println!("T^2       = {}", t.try_mul(&t)?);
    println!("T X1 T    = {}", t.try_mul(&x1)?.try_mul(&t)?);
    println!("T T^-1    = {}", t.try_mul(&AffineElement::t_inverse(m))?);
    println!(
        "T X1^2 X2 = {}",
        t.try_mul(&AffineElement::from_poly(XPoly::monomial(m, 2, 1)))?
    );
    println!("D(X1^2 X2) = {}", diff_d(&XPoly::monomial(m, 2, 1)));

    for k in 2..=5 {
        println!(
            "k={k}: T X1^k T residual is zero: {}",
            braid_power_residual(m, k)?.is_zero()
        );
    }
    println!(
        "q f_v(X2) = T f_v(X1) T + Q z T: {}",
        fv_conjugation_residual(m)?.is_zero()
    );

    let sym = AffineElement::from_poly(&XPoly::x1(m) + &XPoly::x2(m));
    println!("X1 + X2 central: {}", is_central_affine(&sym)?);
    println!("X1 central: {}", is_central_affine(&x1)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
