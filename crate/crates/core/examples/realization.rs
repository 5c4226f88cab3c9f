// A regraded quantum torus written back as a multiloop algebra, with a checked certificate.

use multiloop::corresp::{qtorus, realize, verify_realization};
use multiloop::lattice::IntMatrix;
use multiloop::{CycloNumber, FinGradedAlgebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let p: IntMatrix = "3 1;5 2".parse()?;
    let b = qtorus(2, 1)?.regrade(&p)?;
    let cert = realize(&b)?;
    verify_realization(&b, &cert)?;
    println!("m = {:?}, base change [{}]", cert.m, cert.base_change);
    let one = CycloNumber::one();
    let a11 = FinGradedAlgebra::power_norm_residue(2, 1, &one, &one)?;
    let iso = cert.a.regraded_line_iso(&a11).ok_or("A is not A_{1,1}")?;
    let images: Vec<String> = iso.generator_images.iter().map(ToString::to_string).collect();
    println!("A ≅ A_{{1,1}} after sending the generators of Λ̄ to {}", images.join(", "));
    println!("σ orders {:?} on A of dimension {}", cert.s.orders(), cert.a.dim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
