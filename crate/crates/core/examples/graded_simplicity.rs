// Graded simplicity with witnesses, and class-B certification through central images.

use multiloop::algcore::{SimplicityWitness, Verdict};
use multiloop::corresp::{certify_class_b, ClassBFailure, Specialization};
use multiloop::lattice::{BarGroup, QuotientMap};
use multiloop::loopcore::GammaFiniteAlgebra;
use multiloop::{CycloNumber, FinGradedAlgebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = BarGroup::new(vec![2])?;
    let k2 = FinGradedAlgebra::group_algebra(&g);
    assert!(k2.is_graded_simple().holds());
    match k2.with_trivial_grading().is_simple() {
        Verdict::Fails(w @ SimplicityWitness::Ideal(_)) => println!("k[Z/2] ungraded is not simple: {w}"),
        v => println!("unexpected verdict {v:?}"),
    }

    let sum = k2.direct_sum(&k2)?;
    let b = GammaFiniteAlgebra::loop_algebra(&QuotientMap::standard(vec![2])?, &sum)?;
    match certify_class_b(&b, &Specialization::augmentation(&b)) {
        Err(f @ ClassBFailure::NotGradedSimple(_)) => println!("{f}"),
        other => println!("unexpected: {other:?}"),
    }

    let one = CycloNumber::one();
    let a = FinGradedAlgebra::power_norm_residue(2, 1, &one, &one)?;
    let b = GammaFiniteAlgebra::loop_algebra(&QuotientMap::standard(vec![2, 2])?, &a)?;
    certify_class_b(&b, &Specialization::augmentation(&b)).map_err(|f| f.to_string())?;
    println!("the quantum torus (m=2) is graded-central-simple with split centroid");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
