// Centroids of finite-dimensional algebras and of loop algebras.

use multiloop::lattice::{BarGroup, QuotientMap};
use multiloop::loopcore::{centroid_of_loop, GammaFiniteAlgebra};
use multiloop::{CycloNumber, FinGradedAlgebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for l in [2, 3] {
        println!("dim C(M_{l}) = {}", FinGradedAlgebra::matrix_algebra(l).centroid().dim());
    }
    let one = CycloNumber::one();
    let a = FinGradedAlgebra::power_norm_residue(3, 1, &one, &one)?;
    let q = QuotientMap::standard(vec![3, 3])?;
    let c = centroid_of_loop(&q, &a)?;
    println!("Γ of the quantum torus (m=3): [{}], monomial basis: {}", c.gamma, c.monomial);

    // k[Z/2] graded by itself has centroid support all of Z/2, so Γ grows to Z
    let k2 = FinGradedAlgebra::group_algebra(&BarGroup::new(vec![2])?);
    let c = centroid_of_loop(&QuotientMap::standard(vec![2])?, &k2)?;
    println!("Γ for k[Z/2]: [{}]", c.gamma);
    let b = GammaFiniteAlgebra::loop_algebra(&q, &a)?;
    let f = b.fgc_report();
    println!("rank over centroid {} with |Λ/Γ| = {}", f.rank_over_centroid, f.quotient_order);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
