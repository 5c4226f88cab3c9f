// Writing and re-reading algebras and certificates in the text format.

use multiloop::corresp::{qtorus, realize, RealizationCertificate};
use multiloop::format::{read_file, TextFormat};
use multiloop::FinGradedAlgebra;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/k_z2_trivial.alg");
    let a: FinGradedAlgebra = read_file(&path)?;
    println!("{}", a.to_text());
    let cert = realize(&qtorus(2, 1)?)?;
    let text = cert.to_text();
    assert_eq!(RealizationCertificate::from_text(&text)?, cert);
    println!("realization certificate: {} lines", text.lines().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
