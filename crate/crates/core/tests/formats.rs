//! Every emitted document re-parses to an equal value.

use multiloop::algcore::FinGradedAlgebra;
use multiloop::autograde::{autos_from_grading, AutomorphismSystem};
use multiloop::corresp::{multiloop_transport, qtorus, qtorus_normal_form, realize, RealizationCertificate, TransportCertificate};
use multiloop::cyclo::CycloNumber;
use multiloop::format::TextFormat;
use multiloop::lattice::{BarGroup, Character, IntMatrix, QuotientMap};
use multiloop::linalg::Matrix;
use multiloop::loopcore::{GammaFiniteAlgebra, GradedIsoWitness};
use multiloop::Error;
use proptest::prelude::*;

fn round_trip<T: TextFormat + PartialEq + std::fmt::Debug>(x: &T) {
    let text = x.to_text();
    let back = T::from_text(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(&back, x);
    assert_eq!(back.to_text(), text);
}

fn scalar() -> impl Strategy<Value = CycloNumber> {
    prop_oneof![
        (1u64..=12, 0i64..12).prop_map(|(n, k)| CycloNumber::zeta_pow(n, k)),
        (-9i64..=9, 1i64..=9).prop_map(|(p, q)| CycloNumber::from_fraction(p, q)),
        (1u64..=8, 0i64..8, -3i64..=3).prop_map(|(n, k, c)| &CycloNumber::zeta_pow(n, k) + &CycloNumber::from_int(c)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn power_norm_residue_documents(m in 2u64..=3, a1 in scalar(), a2 in scalar()) {
        prop_assume!(!a1.is_zero() && !a2.is_zero());
        let a = FinGradedAlgebra::power_norm_residue(m, 1, &a1, &a2).unwrap();
        round_trip(&a);
        let b = GammaFiniteAlgebra::loop_algebra(&QuotientMap::standard(vec![m, m]).unwrap(), &a).unwrap();
        round_trip(&b);
        round_trip(b.quotient());
    }

    #[test]
    fn character_and_matrix_documents(v in proptest::collection::vec(scalar(), 4), rows in proptest::collection::vec(-50i64..50, 4)) {
        prop_assume!(v.iter().all(|x| !x.is_zero()));
        let q = QuotientMap::standard(vec![2, 3]).unwrap();
        round_trip(&Character::on_kernel(&q, v[..2].to_vec()).unwrap());
        let mut m = Matrix::zeros(2, 2);
        for (i, x) in v.iter().enumerate() {
            m[(i / 2, i % 2)] = x.clone();
        }
        round_trip(&m);
        round_trip(&IntMatrix::from_rows(&[rows[..2].to_vec(), rows[2..].to_vec()]).unwrap());
    }
}

#[test]
fn certificate_documents() {
    let one = CycloNumber::one();
    let a = FinGradedAlgebra::power_norm_residue(2, 1, &one, &one).unwrap();
    let s: AutomorphismSystem = autos_from_grading(&a, &[2, 2]).unwrap();
    round_trip(&s);
    let p = IntMatrix::from_i64(&[&[1, 0], &[1, 1]]);
    let t: TransportCertificate = multiloop_transport(&[2, 2], &[2, 2], &p, &s).unwrap();
    round_trip(&t);
    let b = qtorus(3, 1).unwrap().regrade(&IntMatrix::from_i64(&[&[2, 1], &[1, 1]])).unwrap();
    let r: RealizationCertificate = realize(&b).unwrap();
    round_trip(&r);
    let nf = qtorus_normal_form(&IntMatrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]), 2).unwrap();
    let w: GradedIsoWitness = nf.witness;
    round_trip(&w);
    round_trip(&GammaFiniteAlgebra::laurent(2));
    round_trip(&FinGradedAlgebra::group_algebra(&BarGroup::new(vec![2, 3]).unwrap()));
    round_trip(&IntMatrix::zeros(0, 0));
}

#[test]
fn malformed_documents_report_lines() {
    let wrong_kind = FinGradedAlgebra::from_text("multiloop-format 1 autos\nm 2\n");
    assert!(matches!(wrong_kind, Err(Error::Parse { line: 1, .. })));
    let bad_scalar = "multiloop-format 1 algebra\ngroup\ndim 1\n\nproduct 0 0 0 cyclo(x)\n";
    assert!(matches!(FinGradedAlgebra::from_text(bad_scalar), Err(Error::Parse { line: 5, .. })));
    let out_of_range = "multiloop-format 1 algebra\ngroup 2\ndim 1\nproduct 0 0 3 1\n";
    assert!(matches!(FinGradedAlgebra::from_text(out_of_range), Err(Error::Parse { line: 4, .. })));
    // a degree that does not respect the product is rejected by the constructor
    let ungraded = "multiloop-format 1 algebra\ngroup 2\ndim 2\ndegree 1 1\nproduct 1 1 1 1\n";
    assert!(FinGradedAlgebra::from_text(ungraded).is_err());
    let bad_shift = qtorus(2, 1).unwrap().to_text().replacen("pair 1 1 0 0 2", "pair 1 1 0 0 4", 1);
    assert!(GammaFiniteAlgebra::from_text(&bad_shift).is_err());
}
