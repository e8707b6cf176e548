//! Regenerate the TOML documents under `examples/docs`.
//!
//! ```text
//! cargo run --example export_documents
//! ```

use std::path::Path;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/docs");
    std::fs::create_dir_all(&dir)?;
    for (stem, doc) in equivar::doc::bundled_documents()? {
        let path = dir.join(format!("{stem}.toml"));
        std::fs::write(&path, doc.to_toml())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
