// Transporting an automorphism system along an admissible matrix, and isograded witnesses.

use multiloop::autograde::autos_from_grading;
use multiloop::corresp::{isograded_check, multiloop_transport, verify_transport};
use multiloop::lattice::IntMatrix;
use multiloop::linalg::Matrix;
use multiloop::{CycloNumber, FinGradedAlgebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let one = CycloNumber::one();
    let a = FinGradedAlgebra::power_norm_residue(2, 1, &one, &one)?;
    let s = autos_from_grading(&a, &[2, 2])?;
    let p: IntMatrix = "1 0;1 1".parse()?;
    let cert = multiloop_transport(&[2, 2], &[2, 2], &p, &s)?;
    verify_transport(&s, &cert, &[(-3, 3), (-3, 3)])?;
    println!("transported along P = [{p}], regrade R = [{}]", cert.r);
    isograded_check(&s, &cert.s_prime, &p, &Matrix::identity(a.dim()))?;
    println!("(P, id) is an isograded isomorphism");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
