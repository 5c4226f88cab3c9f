// Twists by characters of Γ and similarity of power norm residue algebras.

use multiloop::corresp::{extension_iso, similar_check, twist, Similarity};
use multiloop::lattice::{Character, QuotientMap};
use multiloop::{CycloNumber, FinGradedAlgebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let q = QuotientMap::standard(vec![3, 3])?;
    let one = CycloNumber::one();
    let a = FinGradedAlgebra::power_norm_residue(3, 1, &one, &one)?;
    let chi = Character::on_kernel(&q, vec![CycloNumber::root_of_unity(3), CycloNumber::from_int(5)])?;
    let t = twist(&a, &chi, &q)?;
    assert_eq!(t, FinGradedAlgebra::power_norm_residue(3, 1, &CycloNumber::root_of_unity(3), &CycloNumber::from_int(5))?);
    println!("A_{{1,1}} twisted by χ = (ζ₃, 5) is A_{{ζ₃,5}}");

    // characters extending to Z² give trivial twists
    let psi = [CycloNumber::root_of_unity(9), CycloNumber::from_int(2)];
    let ext = Character::restricted_from_lattice(&q, &psi)?;
    let f = extension_iso(&a, &q, &psi)?;
    assert!(a.homomorphism_failure(&twist(&a, &ext, &q)?, &f).is_none());

    let e2 = FinGradedAlgebra::power_norm_residue(3, 2, &one, &one)?;
    for (name, other) in [("A_{ζ₃,5}", &t), ("opposite commutation", &e2)] {
        let verdict = match similar_check(&a, other, &q)? {
            Similarity::Similar { chi, .. } => {
                let v: Vec<String> = chi.values().iter().map(ToString::to_string).collect();
                format!("similar via χ = ({})", v.join(", "))
            }
            Similarity::NotSimilar => "not similar".into(),
            Similarity::Unknown(why) => format!("unknown: {why}"),
        };
        println!("A_{{1,1}} vs {name}: {verdict}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
