//! Every example runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(cyclotomic);
example!(smith_and_admissible);
example!(centroid);
example!(graded_simplicity);
example!(multiloop);
example!(quantum_torus);
example!(realization);
example!(twists);
example!(transport);
example!(torus_normal_form);
example!(file_formats);

#[test]
fn examples_run() {
    let runs: [(&str, fn() -> Result<(), Box<dyn std::error::Error>>); 11] = [
        ("cyclotomic", cyclotomic::run),
        ("smith_and_admissible", smith_and_admissible::run),
        ("centroid", centroid::run),
        ("graded_simplicity", graded_simplicity::run),
        ("multiloop", multiloop::run),
        ("quantum_torus", quantum_torus::run),
        ("realization", realization::run),
        ("twists", twists::run),
        ("transport", transport::run),
        ("torus_normal_form", torus_normal_form::run),
        ("file_formats", file_formats::run),
    ];
    for (name, run) in runs {
        run().unwrap_or_else(|e| panic!("example {name}: {e}"));
    }
}
