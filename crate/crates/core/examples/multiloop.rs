// Multiloop algebras of commuting automorphisms and the support criterion.

use multiloop::autograde::{inner_diagonal, AutomorphismSystem};
use multiloop::loopcore::GammaFiniteAlgebra;
use multiloop::{CycloNumber, FinGradedAlgebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let one = CycloNumber::one();
    let sigma = inner_diagonal(2, &[one.clone(), CycloNumber::from_int(-1)])?;
    let m2 = FinGradedAlgebra::matrix_algebra(2);
    let s = AutomorphismSystem::new(m2.clone(), vec![sigma.clone()], vec![2])?;
    s.validate()?;
    let b = GammaFiniteAlgebra::multiloop(&s)?;
    println!("M(M₂, Ad diag(1,−1)): component dims {:?}", b.comp_dims());
    for p in &b.truncate(&[(-1, 1)]).products[..4] {
        let r: Vec<String> = p.result.iter().map(ToString::to_string).collect();
        println!("  B^{:?}_{} · B^{:?}_{} = [{}]", p.lambda, p.i, p.mu, p.j, r.join(", "));
    }

    // repeating σ gives |G| = 2 < 4, and the support no longer generates Z²
    let r = AutomorphismSystem::new(m2, vec![sigma.clone(), sigma], vec![2, 2])?;
    let br = GammaFiniteAlgebra::multiloop(&r)?;
    println!("|G| = {}, support generates: {} / {}", r.group_order(), r.support_generates(), br.generates_lattice());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
