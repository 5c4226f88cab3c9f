// Tensor decomposition of an associative torus into quantum tori and Laurent polynomials.

use multiloop::corresp::qtorus_normal_form;
use multiloop::lattice::IntMatrix;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (e, n) in [("0 1 0;-1 0 0;0 0 0", 2), ("0 1 0 0;-1 0 0 0;0 0 0 2;0 0 -2 0", 4), ("0 3 1;-3 0 2;-1 -2 0", 6)] {
        let e: IntMatrix = e.parse()?;
        let nf = qtorus_normal_form(&e, n)?;
        nf.verify(&e, n)?;
        let mut factors: Vec<String> = nf.m.iter().zip(&nf.e).map(|(m, e)| format!("Q({m},{e})")).collect();
        if nf.s > 0 {
            factors.push(format!("k[Z^{}]", nf.s));
        }
        println!("T([{e}], {n}) ≅ {} via W = [{}]", factors.join(" ⊗ "), nf.transform);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
