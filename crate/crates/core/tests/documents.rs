use std::path::PathBuf;

use equivar::doc::{bundled_documents, WorkbenchDocument, Workbench};
use equivar::error::Limits;

fn docs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/docs")
}

#[test]
fn shipped_documents_match_generators() {
    let bundled = bundled_documents().unwrap();
    for (stem, doc) in &bundled {
        let path = docs_dir().join(format!("{stem}.toml"));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, doc.to_toml(), "{stem} is stale; rerun the export_documents example");
    }
    let shipped = std::fs::read_dir(docs_dir()).unwrap().count();
    assert_eq!(shipped, bundled.len(), "unexpected files under examples/docs");
}

#[test]
fn documents_round_trip() {
    for (stem, doc) in bundled_documents().unwrap() {
        let again = WorkbenchDocument::from_toml(&doc.to_toml()).unwrap();
        assert_eq!(again, doc, "{stem}");
        assert_eq!(again.to_toml(), doc.to_toml(), "{stem}");
    }
}

#[test]
fn documents_build_and_validate() {
    for (stem, doc) in bundled_documents().unwrap() {
        let wb = Workbench::build(&doc, &Limits::default()).unwrap_or_else(|e| panic!("{stem}: {e}"));
        for (name, outcome) in wb.validate() {
            if stem == "non_cocycle_grid" && name == "action action" {
                assert!(outcome.unwrap_err().is_violation());
            } else {
                outcome.unwrap_or_else(|e| panic!("{stem}: {name}: {e}"));
            }
        }
    }
}

fn rejected(text: &str) -> bool {
    match WorkbenchDocument::from_toml(text) {
        Err(_) => true,
        Ok(doc) => Workbench::build(&doc, &Limits::default()).is_err(),
    }
}

#[test]
fn malformed_documents_are_rejected() {
    assert!(rejected("format_version = 1\n[category]\nkind = \"nope\"\np = 5\n"));
    assert!(rejected("format_version = 99\n"));
    assert!(rejected("format_version = 1\n[category]\nkind = \"vect\"\np = 4\ndim = 1\n"));
    let dangling = "format_version = 1\n[group]\nkind = \"cyclic:2\"\n[category]\nkind = \"vect\"\np = 5\ndim = 1\n\
                    [[lax_functors]]\nname = \"x\"\nside = \"right\"\nfunctor = \"missing\"\nsource = \"action\"\ntarget = \"action\"\ndelta = []\n";
    assert!(rejected(dangling));
}
