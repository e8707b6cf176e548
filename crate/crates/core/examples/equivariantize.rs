//! Equivariant objects and a skeleton of C^G.

use std::sync::Arc;

use equivar::error::Limits;
use equivar::gaction::{equivariantize, GAction};
use equivar::groups::{make_group, GroupKind};
use equivar::lincat::vect_cat;

fn main() -> equivar::error::Result<()> {
    let group = Arc::new(make_group(&GroupKind::Cyclic(2))?);
    let cat = Arc::new(vect_cat(3, 2)?);
    let action = Arc::new(GAction::trivial(group, cat.clone()));
    let cg = equivariantize(action, &Limits::default())?;

    // trivial action: Z/2-representations of dimension ≤ 2 over F_3
    println!("{} classes", cg.len());
    for (i, x) in cg.objects().iter().enumerate() {
        let theta: Vec<_> = x.theta.iter().map(|t| format!("{t:?}")).collect();
        println!("  [{i}] base {} theta {}", cat.label(x.base), theta.join(" "));
    }
    let table = cg.class_table();
    for (base, count) in &table.per_base {
        println!("  over {}: {count}", cat.label(*base));
    }
    println!("indecomposables: {:?}", cg.indecomposables()?);
    for w in cg.warnings() {
        println!("warning: {w}");
    }
    Ok(())
}
