// The centre basis {m_ij} ∪ {p_k T} and the triangular map behind it.

use hecke_centre::cyclotomic::Quotient;
use hecke_centre::Result;

pub fn run_example() -> Result<()> {
    for m in 1..=4 {
        let quot = Quotient::new(m)?;
        let phi = quot.phi_matrix()?;
        phi.check_triangular()?;
        let basis = quot.centre_basis()?;
        println!(
            "m={m}: rank {} (phi is {}x{})",
            basis.rank(),
            phi.codomain.len(),
            phi.domain.len()
        );
        for (k, p) in basis.t_part.iter().enumerate() {
            println!("  p_{k} = {p}");
        }
        for (label, c) in basis.elements() {
            assert!(quot.is_central(&c)?, "{label} is not central");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
