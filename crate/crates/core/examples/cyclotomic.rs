// Exact arithmetic in cyclotomic fields with compatibly chosen roots of unity.

use multiloop::CycloNumber;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let z6 = CycloNumber::root_of_unity(6);
    let z4 = CycloNumber::root_of_unity(4);
    // ζ₆³ = ζ₂ = −1
    assert_eq!(z6.pow(3), CycloNumber::from_int(-1));
    let x = &z6 + &z4;
    println!("ζ₆ + ζ₄ = {x} (conductor {})", x.conductor());
    let inv = x.inv()?;
    assert!((&x * &inv).is_one());
    println!("(ζ₆ + ζ₄)⁻¹ = {inv}");
    println!("order of ζ₆ζ₄ = {:?}", (&z6 * &z4).order_of());
    let parsed: CycloNumber = "zeta(12)^5".parse()?;
    assert_eq!(parsed, &z6 * &z4);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
