// Central images of the quantum torus are the power norm residue algebras, and the loop
// algebra of each recovers the torus.

use multiloop::corresp::{central_image, loop_of_image_roundtrip, qtorus, torus_predicates, Specialization};
use multiloop::loopcore::graded_iso_check;
use multiloop::{CycloNumber, FinGradedAlgebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m = 3;
    let b = qtorus(m, 1)?;
    let t = torus_predicates(&b)?;
    println!("quantum torus (m=3): is_torus={} graded_central_simple={}", t.is_torus, t.graded_central_simple);
    let z = CycloNumber::root_of_unity(m);
    let rho = Specialization::from_values(b.quotient(), vec![z.clone(), CycloNumber::from_int(2)])?;
    let a = central_image(&b, &rho)?;
    assert_eq!(a, FinGradedAlgebra::power_norm_residue(m, 1, &z, &CycloNumber::from_int(2))?);
    println!("central image at (ζ₃, 2) is A_{{ζ₃,2}} of dimension {}", a.dim());
    let (l, w) = loop_of_image_roundtrip(&b, &rho).map_err(|f| f.to_string())?;
    graded_iso_check(&b, &l, &w)?;
    let chi: Vec<String> = w.chi.values().iter().map(ToString::to_string).collect();
    println!("loop of the image is graded-isomorphic to the torus, χ = ({})", chi.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
