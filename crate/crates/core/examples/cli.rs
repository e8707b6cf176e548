//! Drive the command-line interface in process on the shipped documents.

use std::path::Path;

fn main() {
    let docs = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/docs");
    let doc = |name: &str| docs.join(name).display().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["cohomology".into(), "--group".into(), "cyclic:4".into(), "--coeff".into(), "2".into()],
        vec!["check-action".into(), doc("trivial_z2.toml")],
        vec!["check-action".into(), doc("non_cocycle_grid.toml")],
        vec!["classify-twisted".into(), doc("klein_twisted_f5.toml")],
        vec!["mate".into(), doc("mate_conjugation.toml"), "--json".into()],
        vec!["descend-sod".into(), "a2".into(), "5".into()],
    ];
    for args in runs {
        let argv = std::iter::once("equivar".to_string()).chain(args.iter().cloned());
        let (code, out) = equivar::cli::run(argv);
        println!("$ equivar {}\n{out}exit {code}\n", args.join(" "));
    }
}
