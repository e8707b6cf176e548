//! A semiorthogonal pair in representations of the A₂ quiver, with Z/2
//! acting by negating the arrow, descends to the equivariant category.

use equivar::error::Limits;
use equivar::sod::{bundled_a2_sod, descend_sod, swapped_a2_sod};

fn main() -> equivar::error::Result<()> {
    let limits = Limits::default();
    let sod = bundled_a2_sod(5, &limits)?;
    let c = sod.action().cat();
    let names = |m: &[usize]| m.iter().map(|&x| c.label(x).to_string()).collect::<Vec<_>>();
    println!("A = {:?}, B = {:?}", names(sod.a().members()), names(sod.b().members()));

    let report = descend_sod(&sod, &limits)?;
    for check in &report.checks {
        match &check.outcome {
            Ok(()) => println!("{}: ok", check.name),
            Err(e) => println!("{}: FAIL {e}", check.name),
        }
    }
    println!("C^G has {} classes, {} indecomposable", report.cg.len(), report.indecomposable_count()?);
    println!("A^G = {:?}", report.ag.members());
    println!("B^G = {:?}", report.bg.members());
    println!("p^G on objects {:?}", report.pg.functor.obj_map());

    match swapped_a2_sod(5, &limits) {
        Ok(_) => println!("swapped order: accepted"),
        Err(e) => println!("swapped order rejected: {e}"),
    }
    Ok(())
}
