//! The command-line front end on the stored example documents.

use std::path::{Path, PathBuf};
use std::process::Command;

use multiloop::algcore::FinGradedAlgebra;
use multiloop::cli::{run_with, FALSE, INCONCLUSIVE, MALFORMED, OK};
use multiloop::cyclo::CycloNumber;
use multiloop::format::{read_file, TextFormat};
use multiloop::loopcore::GammaFiniteAlgebra;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name)
}

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("multiloop").chain(args.iter().copied());
    let code = run_with(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn admissible_prints_q() {
    let (code, out) = run(&["admissible", "--P", "2 1;3 2", "--mprime", "2,3", "--m", "1,6"]);
    assert_eq!(code, OK);
    assert_eq!(out, "admissible=true\nQ=4 1;3 1\n");
    let (code, out) = run(&["admissible", "--P", "1 0;0 1", "--mprime", "1,4", "--m", "2,2"]);
    assert_eq!((code, out.as_str()), (FALSE, "admissible=false\n"));
}

#[test]
fn quantum_torus_realization() {
    let dir = tempfile::tempdir().unwrap();
    let (q, cert) = (dir.path().join("q.gam"), dir.path().join("q.real"));
    assert_eq!(run(&["qtorus", "--m", "2", "--e", "1", "--out", p(&q)]).0, OK);
    let (code, out) = run(&["realize", "--gamma", p(&q), "--out", p(&cert)]);
    assert_eq!(code, OK, "{out}");
    assert!(out.contains("m=(2,2)\n"), "{out}");
    assert!(out.contains("A=A_{1,1}(m=2)\n"), "{out}");
    assert!(out.contains("witness=true\n"), "{out}");
    let (code, out) = run(&["iso-check", "realization", "--gamma", p(&q), "--certificate", p(&cert)]);
    assert_eq!((code, out.as_str()), (OK, "valid=true\nm=2,2\n"));
    // a certificate for another algebra is rejected
    let other = dir.path().join("o.gam");
    assert_eq!(run(&["qtorus", "--m", "3", "--e", "1", "--out", p(&other)]).0, OK);
    let (code, out) = run(&["iso-check", "realization", "--gamma", p(&other), "--certificate", p(&cert)]);
    assert_eq!(code, FALSE, "{out}");
}

#[test]
fn graded_simplicity_of_group_algebra_fails_with_ideal() {
    let (code, out) = run(&["check", "graded-simple", "--algebra", p(&data("k_z2_trivial.alg"))]);
    assert_eq!(code, FALSE);
    assert!(out.starts_with("graded-simple=false\nwitness=ideal\nideal-dim=1\n"), "{out}");
    let (code, _) = run(&["check", "graded-simple", "--algebra", p(&data("a11_m2.alg"))]);
    assert_eq!(code, OK);
}

#[test]
fn multiloop_and_predicates() {
    let dir = tempfile::tempdir().unwrap();
    let m2 = dir.path().join("m2.gam");
    let (code, out) = run(&["multiloop", "--autos", p(&data("m2_ad_diag.autos")), "--out", p(&m2)]);
    assert_eq!(code, OK, "{out}");
    let (code, out) = run(&["check", "torus", "--gamma", p(&m2)]);
    assert_eq!(code, FALSE);
    assert!(out.contains("components-one-dimensional=false"));
    let (code, out) = run(&["check", "fgc", "--gamma", p(&m2)]);
    assert_eq!((code, out.as_str()), (OK, "fgc=true\nrank-over-centroid=4\nquotient-order=2\n"));
    let (code, out) = run(&["centroid", "--gamma", p(&m2)]);
    assert_eq!(code, OK);
    assert!(out.contains("monomial=true"));
}

#[test]
fn central_images_twists_and_similarity() {
    let dir = tempfile::tempdir().unwrap();
    let (q, img) = (dir.path().join("q.gam"), dir.path().join("img.alg"));
    assert_eq!(run(&["qtorus", "--m", "2", "--e", "1", "--out", p(&q)]).0, OK);
    let (code, _) = run(&["central-image", "--gamma", p(&q), "--value", "1", "--value", "-1", "--out", p(&img)]);
    assert_eq!(code, OK);
    let a: FinGradedAlgebra = read_file(&img).unwrap();
    let one = CycloNumber::one();
    assert_eq!(a, FinGradedAlgebra::power_norm_residue(2, 1, &one, &CycloNumber::from_int(-1)).unwrap());
    assert_eq!(read_file::<FinGradedAlgebra>(&data("a1m1_m2.alg")).unwrap(), a);
    let (code, out) = run(&["similar", "--algebra", p(&data("a11_m2.alg")), "--other", p(&img)]);
    assert_eq!(code, OK, "{out}");
    let tw = dir.path().join("tw.alg");
    let (code, _) = run(&["twist", "--algebra", p(&data("a11_m2.alg")), "--value", "1", "--value", "-1", "--out", p(&tw)]);
    assert_eq!(code, OK);
    assert_eq!(read_file::<FinGradedAlgebra>(&tw).unwrap(), a);
}

#[test]
fn transport_and_normal_form() {
    let dir = tempfile::tempdir().unwrap();
    let (autos, cert) = (dir.path().join("s.autos"), dir.path().join("t.cert"));
    let one = CycloNumber::one();
    let a = FinGradedAlgebra::power_norm_residue(2, 1, &one, &one).unwrap();
    std::fs::write(&autos, multiloop::autograde::autos_from_grading(&a, &[2, 2]).unwrap().to_text()).unwrap();
    let (code, out) = run(&["transport", "--autos", p(&autos), "--P", "1 0;1 1", "--mprime", "2,2", "--out", p(&cert)]);
    assert_eq!(code, OK, "{out}");
    let (code, out) = run(&["iso-check", "transport", "--autos", p(&autos), "--certificate", p(&cert)]);
    assert_eq!((code, out.as_str()), (OK, "valid=true\n"));
    let (code, out) = run(&["transport", "--autos", p(&autos), "--P", "1 0;0 1", "--mprime", "1,4"]);
    assert_eq!((code, out.as_str()), (FALSE, "admissible=false\n"));
    let (code, out) = run(&["qtorus-nf", "--E", "0 1 0;-1 0 0;0 0 0", "--N", "2", "--out", p(&dir.path().join("w"))]);
    assert_eq!(code, OK);
    assert!(out.starts_with("r=1\ns=1\nm=2\ne=1\n"), "{out}");
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["no-such-command"]).0, MALFORMED);
    assert_eq!(run(&["snf", "--matrix", "1 2;3"]).0, MALFORMED);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "multiloop-format 9 algebra\n").unwrap();
    let (code, out) = run(&["check", "central", "--algebra", p(&bad)]);
    assert_eq!(code, MALFORMED);
    assert!(out.starts_with("error=parse error at line 1"), "{out}");
    // the cross product on k³ is non-associative with a single 3-dimensional component, where
    // the simplicity test has no decision procedure
    let cross = dir.path().join("cross.alg");
    let mut doc = String::from("multiloop-format 1 algebra\ngroup\ndim 3\n");
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        doc.push_str(&format!("product {i} {j} {k} 1\nproduct {j} {i} {k} -1\n"));
    }
    std::fs::write(&cross, doc).unwrap();
    let (code, out) = run(&["check", "graded-simple", "--algebra", p(&cross)]);
    assert_eq!(code, INCONCLUSIVE, "{out}");
    assert!(out.starts_with("graded-simple=inconclusive\n"), "{out}");
}

#[test]
fn verify_paper_is_reproducible() {
    let (code, a) = run(&["verify-paper", "--seed", "11", "--only", "8"]);
    assert_eq!(code, OK, "{a}");
    assert_eq!(a, run(&["verify-paper", "--seed", "11", "--only", "8"]).1);
    assert!(a.starts_with("seed=11\ncheck=8 status=PASS"), "{a}");
}

#[test]
fn binary_exit_code() {
    let status = Command::new(env!("CARGO_BIN_EXE_multiloop"))
        .args(["check", "graded-simple", "--algebra", p(&data("k_z2_trivial.alg"))])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(FALSE));
    let q: GammaFiniteAlgebra = multiloop::corresp::qtorus(2, 1).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_multiloop")).args(["qtorus", "--m", "2", "--e", "1"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = text.split_once("e=1\n").unwrap().1;
    assert_eq!(GammaFiniteAlgebra::from_text(doc).unwrap(), q);
}
