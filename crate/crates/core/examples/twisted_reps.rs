//! φ-twisted representations: a nontrivial Klein cocycle over F_5 has no
//! one-dimensional twisted representation, and the class table only depends
//! on the cohomology class.

use std::sync::Arc;

use equivar::cohomology::{h2_group, CyclicCoeff};
use equivar::error::Limits;
use equivar::gaction::twisted_rep_classify;
use equivar::gfunctor::samples::shifted;
use equivar::groups::{make_group, GroupKind};

fn main() -> equivar::error::Result<()> {
    let klein = Arc::new(make_group(&"klein".parse::<GroupKind>()?)?);
    let h2 = h2_group(klein, CyclicCoeff::units_of(5)?);
    let limits = Limits::default();
    for coords in h2.all_classes() {
        let phi = h2.representative(&coords);
        let report = twisted_rep_classify(5, 2, &phi, &limits)?;
        println!(
            "class {coords:?}: classes per dim {:?}, indecomposable {:?}, min dim {:?}",
            report.per_dim,
            report.indecomposable_per_dim,
            report.min_dim()
        );
        let moved = shifted(&phi, &[0, 2, 3, 1])?;
        let again = twisted_rep_classify(5, 2, &moved, &limits)?;
        println!("  shifted cocycle agrees: {}", again.per_dim == report.per_dim && again.equiv.class_table() == report.equiv.class_table());
    }
    Ok(())
}
