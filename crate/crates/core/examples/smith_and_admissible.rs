// Smith normal form and admissible matrices between finite quotients of Zⁿ.

use multiloop::lattice::{induced_quotient_iso, is_admissible, smith_normal_form, BarElement, IntMatrix};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m: IntMatrix = "2 4 4;-6 6 12;10 -4 -16".parse()?;
    let s = smith_normal_form(&m);
    assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
    println!("invariant factors of [{m}]: {:?}", s.invariant_factors());

    let p: IntMatrix = "2 1;3 2".parse()?;
    let q = is_admissible(&p, &[2, 3], &[1, 6])?.expect("admissible");
    println!("P = [{p}] is ((2,3),(1,6))-admissible with Q = [{q}]");
    let iso = induced_quotient_iso(&p, &[2, 3], &[1, 6])?.expect("admissible");
    println!("(1,1) ↦ {}", iso.apply(&BarElement(vec![1, 1])));
    assert!(is_admissible(&IntMatrix::identity(2), &[1, 4], &[2, 2])?.is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
